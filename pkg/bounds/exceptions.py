"""Error hierarchy shared by every module of the bounds app.

Each error carries the process exit code the management commands use:
2 for malformed input, 3 for parameter-domain violations, 4 for numerical
non-convergence.
"""


class UncrelError(Exception):
    exit_code = 1
    kind = 'error'

    def __init__(self, message, **context):
        super().__init__(message)
        self.message = message
        self.context = context

    def as_dict(self):
        data = {
            'type': self.kind,
            'message': self.message,
            'exit_code': self.exit_code,
        }
        if self.context:
            data['context'] = {k: str(v) for k, v in sorted(self.context.items())}
        return data


class FormatError(UncrelError, ValueError):
    exit_code = 2
    kind = 'format'


class DomainError(UncrelError, ValueError):
    exit_code = 3
    kind = 'domain'


class DivergenceError(DomainError):
    kind = 'divergence'


class PreconditionError(DomainError):
    kind = 'precondition'


class InfeasibleError(DomainError):
    kind = 'infeasible'


class ConvergenceError(UncrelError, ArithmeticError):
    exit_code = 4
    kind = 'convergence'


class BracketError(ConvergenceError):
    kind = 'bracket'


class NonFiniteIntegrandError(ConvergenceError):
    kind = 'non_finite'
