"""Exception types shared across the package."""

__all__ = ["SpecSyntaxError", "CrossingLimitError", "InvalidSiteError", "UnknownLinkError", "NotConstructibleError", "InvalidDiagramError"]


class SpecSyntaxError(ValueError):
    def __init__(self, message: str, position: int = 0, text: str = ""):
        super().__init__(f"{message} at position {position}" + (f" in {text!r}" if text else ""))
        self.position = position
        self.text = text


class CrossingLimitError(RuntimeError):
    def __init__(self, crossings: int, limit: int):
        super().__init__(f"diagram has {crossings} crossings, limit is {limit}")
        self.crossings = crossings
        self.limit = limit


class InvalidSiteError(ValueError):
    pass


class UnknownLinkError(KeyError):
    pass


class NotConstructibleError(LookupError):
    """A catalog entry that carries data but no diagram."""


class InvalidDiagramError(ValueError):
    pass
