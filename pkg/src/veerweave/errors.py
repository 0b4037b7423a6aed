"""Exception hierarchy.

Everything user-facing derives from VeerweaveError so the CLI can map
domain failures to exit status 1.  ConstructionError marks situations
that a correct build should never reach (budget blowouts, structural
asserts failing downstream of a validated triangulation); these are
bugs or bad internal state, not bad user input, but they are still
reported rather than silently patched over.
"""


class VeerweaveError(Exception):
    pass


class FormatError(VeerweaveError):
    """Malformed input document or signature."""


class ValidationError(VeerweaveError):
    """A triangulation axiom failed; message carries axiom and location."""

    def __init__(self, axiom, location, detail=""):
        self.axiom = axiom
        self.location = location
        msg = "%s violated at %s" % (axiom, location)
        if detail:
            msg += ": " + detail
        super().__init__(msg)


class InvalidIdError(VeerweaveError):
    """A tetrahedron/edge/face/cusp id does not exist."""


class ConstructionError(VeerweaveError):
    """Internal construction left its contract (signals a bug upstream)."""


class BudgetError(VeerweaveError):
    """A configured enumeration or window budget was exceeded."""
