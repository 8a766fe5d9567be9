"""Exception types shared across the package.

Domain errors signal mathematically invalid inputs (a coefficient outside
the disk, a point outside the body, ...). Plain ``ValueError`` is reserved
for usage errors such as mismatched truncation orders.
"""


class SchurCaraError(Exception):
    """Base class for all package-specific errors."""


class DomainError(SchurCaraError):
    """Input violates a mathematical precondition."""


class NotSchurFunctionError(DomainError):
    """A Schur parameter left the closed unit disk during extraction.

    ``index`` is the 1-based parameter index (``None`` for a bare sigma
    step) and ``modulus`` the offending |gamma|.
    """

    def __init__(self, index, modulus):
        self.index = index
        self.modulus = modulus
        where = f"gamma_{index}" if index is not None else "f(0)"
        super().__init__(
            f"not a Schur-class truncation: |{where}| = {modulus:.17g} exceeds 1"
        )


class NotInBodyError(DomainError):
    """A coefficient tuple lies outside the Caratheodory body.

    Raised by the inverse parametrization; carries the first parameter
    index whose modulus left the disk.
    """

    def __init__(self, index, modulus):
        self.index = index
        self.modulus = modulus
        super().__init__(
            f"point is not in the coefficient body: inverse parameter "
            f"gamma_{index} has modulus {modulus:.17g} > 1"
        )


class NearSingularDivisionError(DomainError):
    """Series division with |denominator constant term| below the guard."""

    def __init__(self, modulus, guard):
        self.modulus = modulus
        self.guard = guard
        super().__init__(
            f"near-singular series division: |b_0| = {modulus:.3g} < {guard:.3g}"
        )


class CapExceededError(DomainError):
    """Symbolic expansion requested beyond the supported order cap."""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"symbolic order {n} exceeds the cap {cap}")


class HermitianResidueError(SchurCaraError):
    """A Hermitian determinant came out with a non-negligible imaginary part.

    This indicates a numerical breakdown rather than bad input; it should
    not occur for the bounded matrices this package builds.
    """

    def __init__(self, k, residue):
        self.k = k
        self.residue = residue
        super().__init__(
            f"Toeplitz minor {k}: imaginary residue {residue:.3g} "
            f"exceeds the Hermitian sanity bound"
        )
