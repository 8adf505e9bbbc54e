"""Exception hierarchy shared across the package."""


class OrbitgenError(Exception):
    """Base class for all orbitgen errors."""


class DepthExceeded(OrbitgenError):
    """An orbit failed to reach the attractor within the allowed step count."""

    def __init__(self, start, steps, last=None):
        self.start = start
        self.steps = steps
        self.last = last
        msg = f"no attractor state within {steps} steps from {start!r}"
        if last is not None:
            msg += f" (last state {last!r})"
        super().__init__(msg)


class DomainNotClosed(OrbitgenError):
    """The step map left the finite domain it was declared on."""

    def __init__(self, state, image):
        self.state = state
        self.image = image
        super().__init__(f"step({state!r}) = {image!r} is outside the domain")


class HypothesisViolated(OrbitgenError):
    """A construction's stated precondition does not hold for the given data."""


class DomainError(OrbitgenError, ValueError):
    """An argument lies outside the domain of a number-theoretic function."""


class UnknownSystem(OrbitgenError, KeyError):
    """Requested name is not in the registry."""

    def __init__(self, name):
        self.name = name
        super().__init__(name)

    def __str__(self):
        return f"unknown system {self.name!r}"


class ValueOutOfAlphabet(OrbitgenError, ValueError):
    """A sequence value is not representable in the declared alphabet."""


class NotPrime(OrbitgenError, ValueError):
    """Field construction requires an odd prime modulus."""


class DivisionByZero(OrbitgenError, ZeroDivisionError):
    """Inverse or quotient of the zero field element."""


class ZeroInput(OrbitgenError, ValueError):
    """Operation undefined at zero (square roots, multiplicative order)."""


class DegenerateSpectrum(OrbitgenError):
    """Eigenvalue ratio undefined; the matrix spectrum contains zero."""
