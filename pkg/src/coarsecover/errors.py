"""Exception hierarchy shared across the package."""


class CoarseCoverError(Exception):
    """Base class for all package-specific errors."""


class DomainMismatchError(CoarseCoverError):
    """Blocks or points from unrelated windows were combined."""


class OutOfWindowError(CoarseCoverError):
    """A distance or product left the enumerated window; never answered silently."""


class DegenerateActionError(CoarseCoverError):
    """The action fixes the basepoint under every generator on a nontrivial space."""


class UnsupportedScenarioError(CoarseCoverError):
    """The requested construction does not apply to this scenario's shape."""


class ConstructionFailedError(CoarseCoverError):
    """No candidate parameters produced a witness the verifier accepts."""


class InsufficientScalesError(CoarseCoverError):
    """A scale index lies beyond the prefix and the extension rule is disabled."""


class ResourceCapError(CoarseCoverError):
    """A configured resource cap would be exceeded; the cap is named in the message."""


class InternalConsistencyError(CoarseCoverError):
    """A derived invariant failed mid-construction; inputs disagree with each other."""


class PreconditionFailure(CoarseCoverError):
    """A verified-input precondition failed; `condition` names which one."""

    def __init__(self, condition: str, detail: str = ""):
        self.condition = condition
        self.detail = detail
        message = condition if not detail else f"{condition}: {detail}"
        super().__init__(message)


class ScenarioError(CoarseCoverError):
    """A scenario or input file failed to parse or validate."""
