"""Exception types shared across the workbench modules."""


class WorkbenchError(Exception):
    """Base class for domain errors raised by this package."""


class LimitError(WorkbenchError):
    """An input exceeds a documented size bound for exhaustive work."""


class NoRealizedTypeError(WorkbenchError):
    """A point set realizes no type; carries the first failed clause."""

    def __init__(self, clause: str, message: str):
        super().__init__(message)
        self.clause = clause


class MissingLabelError(WorkbenchError):
    """A demanded set label is absent from an assignment table."""

    def __init__(self, label: str):
        super().__init__(f"no set assigned to label {label!r}")
        self.label = label


class LexOrderError(WorkbenchError):
    """A row sequence is not lexicographically monotone; carries a witness."""

    def __init__(self, index: int, row: tuple, next_row: tuple):
        super().__init__(
            f"rows {index} and {index + 1} are out of lexicographic order: "
            f"{row} then {next_row}"
        )
        self.index = index
        self.witness = (row, next_row)
