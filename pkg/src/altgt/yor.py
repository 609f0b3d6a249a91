"""Young's orthogonal representation of the symmetric group.

Vectors live in the free span of the standard tableaux of one shape, with
coefficients in the exact scalar ring.  The adjacent transposition (i, i+1)
acts on a basis vector v_T by:

* v_T                      if i and i+1 share a row of T,
* -v_T                     if they share a column,
* (1/r) v_T + sqrt(1 - 1/r^2) v_{T'} otherwise, where T' swaps i and i+1
  and r is the axial distance from i to i+1 in T.

Matrices here are plain lists of rows of scalars; columns follow the
enumeration order of the tableaux.
"""

from __future__ import annotations

from fractions import Fraction

from .partitions import Partition
from .scalars import ONE, ZERO, Scalar, sqrt_rational
from .tableaux import StandardTableau, enumerate_syt


class GTVector:
    """A finite linear combination of tableau basis vectors of one shape."""

    __slots__ = ("_shape", "_terms")

    def __init__(self, shape: Partition, terms=None):
        clean: dict[StandardTableau, Scalar] = {}
        if terms:
            for tableau, coeff in terms.items():
                if tableau.shape != shape:
                    raise ValueError(
                        f"tableau {tableau} has shape {tableau.shape}, expected {shape}"
                    )
                if not isinstance(coeff, Scalar):
                    coeff = Scalar.rational(coeff)
                if coeff.is_zero():
                    continue
                clean[tableau] = coeff
        self._shape = shape
        self._terms = {t: clean[t] for t in sorted(clean, key=StandardTableau.row_word)}

    @classmethod
    def basis(cls, tableau: StandardTableau) -> "GTVector":
        return cls(tableau.shape, {tableau: ONE})

    @classmethod
    def zero(cls, shape: Partition) -> "GTVector":
        return cls(shape)

    @property
    def shape(self) -> Partition:
        return self._shape

    def items(self) -> tuple[tuple[StandardTableau, Scalar], ...]:
        return tuple(self._terms.items())

    def coefficient(self, tableau: StandardTableau) -> Scalar:
        return self._terms.get(tableau, ZERO)

    def support(self) -> tuple[StandardTableau, ...]:
        return tuple(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def _require_same_space(self, other: "GTVector") -> None:
        if self._shape != other._shape:
            raise ValueError(f"mixed shapes {self._shape} and {other._shape}")

    def __add__(self, other: "GTVector") -> "GTVector":
        self._require_same_space(other)
        merged = dict(self._terms)
        for t, c in other._terms.items():
            merged[t] = merged.get(t, ZERO) + c
        return GTVector(self._shape, merged)

    def __sub__(self, other: "GTVector") -> "GTVector":
        return self + (-other)

    def __neg__(self) -> "GTVector":
        return GTVector(self._shape, {t: -c for t, c in self._terms.items()})

    def scale(self, scalar) -> "GTVector":
        if not isinstance(scalar, Scalar):
            scalar = Scalar.rational(scalar)
        return GTVector(self._shape, {t: scalar * c for t, c in self._terms.items()})

    def inner(self, other: "GTVector") -> Scalar:
        """Hermitian inner product, conjugate-linear in this vector."""
        self._require_same_space(other)
        total = ZERO
        for t, c in self._terms.items():
            oc = other._terms.get(t)
            if oc is not None:
                total = total + c.conjugate() * oc
        return total

    def norm_squared(self) -> Scalar:
        return self.inner(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GTVector):
            return NotImplemented
        return self._shape == other._shape and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._shape, tuple(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c})*v[{t}]" for t, c in self._terms.items())

    def __repr__(self) -> str:
        return f"GTVector({self._shape!r}, {self._terms!r})"


def act_simple(shape: Partition, i: int, vec: GTVector) -> GTVector:
    """Apply the adjacent transposition (i, i+1) to a vector."""
    if vec.shape != shape:
        raise ValueError(f"vector shape {vec.shape} is not {shape}")
    n = shape.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")
    out: dict[StandardTableau, Scalar] = {}

    def add(tableau, coeff):
        cur = out.get(tableau)
        out[tableau] = coeff if cur is None else cur + coeff

    for tableau, coeff in vec.items():
        r1, c1 = tableau.position(i)
        r2, c2 = tableau.position(i + 1)
        if r1 == r2:
            add(tableau, coeff)
        elif c1 == c2:
            add(tableau, -coeff)
        else:
            r = tableau.axial_distance(i)
            add(tableau, coeff * Fraction(1, r))
            mixing = sqrt_rational(Fraction(r * r - 1, r * r))
            add(tableau.swap_adjacent(i), coeff * mixing)
    return GTVector(shape, out)


def act_word(shape: Partition, word, vec: GTVector) -> GTVector:
    """Apply a product of adjacent transpositions; the last index acts first."""
    for i in reversed(tuple(word)):
        vec = act_simple(shape, i, vec)
    return vec


def rep_matrix(shape: Partition, i: int) -> list[list[Scalar]]:
    """Matrix of the transposition (i, i+1); column j is the image of basis j."""
    basis = enumerate_syt(shape)
    index = {t: k for k, t in enumerate(basis)}
    dim = len(basis)
    mat = [[ZERO] * dim for _ in range(dim)]
    for col, tableau in enumerate(basis):
        image = act_simple(shape, i, GTVector.basis(tableau))
        for t, c in image.items():
            mat[index[t]][col] = c
    return mat


def identity_matrix(dim: int) -> list[list[Scalar]]:
    return [[ONE if r == c else ZERO for c in range(dim)] for r in range(dim)]


def mat_mul(a, b) -> list[list[Scalar]]:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[ZERO] * cols for _ in range(rows)]
    # representation matrices are very sparse; skip zero entries
    for k in range(inner):
        b_row = b[k]
        for r in range(rows):
            a_rk = a[r][k]
            if not a_rk:
                continue
            out_row = out[r]
            for c in range(cols):
                if b_row[c]:
                    out_row[c] = out_row[c] + a_rk * b_row[c]
    return out


def mat_add(a, b) -> list[list[Scalar]]:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)
