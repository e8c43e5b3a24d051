"""Exception hierarchy shared by all modules."""


class CodetectError(Exception):
    """Base class for all errors raised by this package."""


# --- sentence parsing ---

class RuleFileError(CodetectError):
    """Malformed rule file; message carries the offending line number."""

    def __init__(self, path: str, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class UnknownWord(CodetectError):
    """Token absent from the lexicon after spelling correction."""


class NoTemplateMatch(CodetectError):
    """No template rule matched the canonicalized sentence."""


# --- predicate scoring ---

class UnknownPredicate(CodetectError):
    """Predicate name outside the catalogue."""


class MissingOrientation(CodetectError):
    """Rotation predicate applied to a tube with no orientation channel."""


class VideoMismatch(CodetectError):
    """Binary predicate applied to proposals from different videos."""


# --- proposal generation ---

class EmptyCandidates(CodetectError):
    """A sampled frame has no object candidates."""


class DegenerateTrack(CodetectError):
    """Tracking collapsed a box below one pixel."""


# --- similarity ---

class DimMismatch(CodetectError):
    """Descriptors of unequal dimension compared."""


class MissingDescriptor(CodetectError):
    """A rotation/channel descriptor required for scoring is absent."""


class DegenerateCrop(CodetectError):
    """Crop smaller than the minimum source size for descriptors."""


# --- inference ---

class MissingScore(CodetectError):
    """A score table required by graph construction was not computed."""


class TooLarge(CodetectError):
    """Brute-force enumeration guard tripped."""


class Infeasible(CodetectError):
    """Every assignment of the graph scores minus infinity."""


# --- evaluation ---

class NoOverlapFrames(CodetectError):
    """No annotated frame exists for an output track."""


class InsufficientAnnotators(CodetectError):
    """Fewer than two annotators on every frame."""


# --- synthetic scenes / ingestion ---

class SpecInfeasible(CodetectError):
    """A planted trajectory exits the frame."""


class FormatError(CodetectError):
    """An ingestion file violates its documented schema."""
