"""Exception hierarchy shared by every cdcrit module."""


class CdcritError(Exception):
    """Base class for all errors raised by cdcrit."""


class InvalidEdge(CdcritError, ValueError):
    pass


class SelfLoop(CdcritError, ValueError):
    pass


class EmptyJoin(CdcritError, ValueError):
    pass


class InvalidSubgraph(CdcritError, ValueError):
    pass


class NotConnected(CdcritError, ValueError):
    pass


class BudgetExceeded(CdcritError, RuntimeError):
    pass


class InvalidParams(CdcritError, ValueError):
    pass


class NotB2Member(CdcritError, ValueError):
    pass


class SizeLimit(CdcritError, ValueError):
    pass


class InvalidWitness(CdcritError, ValueError):
    pass


class UnsupportedFamily(CdcritError, ValueError):
    pass


class ParseError(CdcritError, ValueError):
    pass
