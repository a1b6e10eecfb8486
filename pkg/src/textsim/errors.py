"""Exception hierarchy shared by all textsim modules."""


class TextSimError(Exception):
    """Base class for every error raised by textsim."""


class EmptyDocument(TextSimError):
    pass


class InvalidParams(TextSimError, ValueError):
    pass


class MismatchedGramConfig(TextSimError, ValueError):
    pass


class EmptyReference(TextSimError, ValueError):
    pass


class UnknownMetric(TextSimError, KeyError):
    def __str__(self) -> str:
        return f"unknown metric: {self.args[0]!r}"


class InconsistentCounts(TextSimError, ValueError):
    pass


class InvalidThresholds(TextSimError, ValueError):
    pass


# --- gold alignment files -------------------------------------------------


class AlignmentFormatError(TextSimError):
    """Problem located at a specific line of a ``.map`` file."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class MapSyntaxError(AlignmentFormatError):
    pass


class IndexOutOfRange(AlignmentFormatError):
    pass


class DuplicateSource(AlignmentFormatError):
    pass


class MissingSource(AlignmentFormatError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"no line for source phrase {index}")


# --- statistics -----------------------------------------------------------


class LengthMismatch(TextSimError, ValueError):
    pass


class ZeroVariance(TextSimError, ValueError):
    pass


# --- corpus layout --------------------------------------------------------


class CorpusError(TextSimError):
    pass


class MissingSourceFile(CorpusError):
    pass


class EmptySubcorpus(CorpusError):
    pass


class DanglingMap(CorpusError):
    pass


class ConfigError(TextSimError, ValueError):
    pass
