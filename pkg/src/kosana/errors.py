"""Exception types raised across the pipeline."""


class KosError(Exception):
    """Base class for every error kosana raises on bad input."""


class IngestError(KosError):
    """A source file could not be read as the declared format."""

    kind = "IngestError"

    def __init__(self, where, detail=""):
        self.where = where
        self.detail = detail
        msg = f"{self.kind} at {where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class MalformedTriple(IngestError):
    kind = "MalformedTriple"


class MalformedXml(IngestError):
    kind = "MalformedXml"


class MalformedCsv(IngestError):
    kind = "MalformedCsv"


class EmptyCaption(IngestError):
    kind = "EmptyCaption"


class UnknownKind(IngestError):
    kind = "UnknownKind"


class MalformedRow(IngestError):
    kind = "MalformedRow"


class MixedSchemes(KosError):
    pass


class UnknownTag(IngestError):
    kind = "UnknownTag"


class MissingTab(IngestError):
    kind = "MissingTab"


class EmptyFile(KosError):
    pass


class CountMismatch(KosError):
    pass


class TextMismatch(KosError):
    def __init__(self, index, expected, found):
        self.index = index
        self.expected = expected
        self.found = found
        super().__init__(f"TextMismatch at entry {index}: expected {expected!r}, found {found!r}")


class EmptyCorpus(KosError):
    pass


class UnknownRule(KosError):
    pass


class TooFewCorpora(KosError):
    pass


class ConfigError(KosError):
    pass
