class ChebDiscException(Exception):
    exit_code = 1


class ParameterException(ChebDiscException):
    exit_code = 2


class SolverException(ChebDiscException):
    exit_code = 3


class RegimeRefusalException(ChebDiscException):
    exit_code = 4
