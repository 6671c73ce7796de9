"""Exception types shared across the package."""


class BridgeforgeError(Exception):
    pass


class ParseError(BridgeforgeError):
    pass


class ValidationError(BridgeforgeError):
    """A presentation axiom is violated; .axiom names which one."""

    def __init__(self, axiom, message):
        self.axiom = axiom
        super().__init__(f"{axiom}: {message}")


class InconsistentSigns(ValidationError):
    def __init__(self, message):
        super().__init__("sign-maps", message)


class UnknownArrow(BridgeforgeError):
    pass


class ZeroLength(BridgeforgeError):
    """Raised for operations undefined on zero-length strings."""


class NonDomesticError(BridgeforgeError):
    """The algebra has infinitely many bands; .certificate holds two
    elementary cycles of the band automaton sharing a state."""

    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(
            "not domestic: two distinct primitive cyclic strings share a "
            f"window state {certificate[0]!r}"
        )


class NotAWeakArchBridge(BridgeforgeError):
    pass


class NotInHammock(BridgeforgeError):
    """The string is not a left extension of the base string x0."""


class NotInHammockSide(NotInHammock):
    """The string lies in H_l(x0) but on the wrong side, or outside it."""


class DifferentBase(BridgeforgeError):
    """Hammock elements over different base strings are incomparable."""


class NoExit(BridgeforgeError):
    """The exit (or entry) syllable of an arrow does not exist."""
