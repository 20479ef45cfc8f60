"""Exception hierarchy shared by the computational modules and the CLI."""


class DomainError(ValueError):
    """Input lies outside the domain where a formula is meaningful."""


class UnsupportedArgument(DomainError):
    pass


class SlopeUndefined(DomainError):
    pass


class DegenerateFiberGenus(DomainError):
    pass


class EliminationSingularity(DomainError):
    pass


class DegenerateElimination(DomainError):
    pass


class InconsistentData(DomainError):
    pass


class OracleOutOfRange(DomainError):
    pass
