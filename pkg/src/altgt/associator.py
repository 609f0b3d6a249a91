"""The canonical intertwiner between a self-conjugate representation and its
twist by the sign character.

For a self-conjugate shape it sends each tableau basis vector to a fourth
root of unity times the basis vector of the transposed tableau:

    v_T  ->  i^((n - d)/2) * sign(w_T) * v_{T transposed}

where d is the diagonal length of the shape and w_T is the permutation
carrying the anchor (reference) tableau to T cellwise.  Squaring gives the
identity, and the map anticommutes with every adjacent transposition.
"""

from __future__ import annotations

from .partitions import Partition
from .scalars import ZERO, Scalar, i_power
from .tableaux import StandardTableau, enumerate_syt, permutation_sign
from .yor import GTVector


def assoc_coeff(shape: Partition, tableau: StandardTableau) -> Scalar:
    """The fourth root of unity attached to one tableau."""
    if not shape.is_self_conjugate():
        raise ValueError(f"{shape} is not self-conjugate")
    if tableau.shape != shape:
        raise ValueError(f"tableau shape {tableau.shape} is not {shape}")
    n, d = shape.n, shape.diagonal_length()
    assert (n - d) % 2 == 0, "n - d must be even for a self-conjugate shape"
    root = i_power((n - d) // 2)
    sign = permutation_sign(shape, tableau)
    return root if sign == 1 else -root


def apply_phi(shape: Partition, vec: GTVector) -> GTVector:
    """Linear extension of v_T -> assoc_coeff(T) * v_{T transposed}."""
    if vec.shape != shape:
        raise ValueError(f"vector shape {vec.shape} is not {shape}")
    out: dict[StandardTableau, Scalar] = {}
    for tableau, coeff in vec.items():
        out[tableau.conjugate()] = coeff * assoc_coeff(shape, tableau)
    return GTVector(shape, out)


def phi_matrix(shape: Partition) -> list[list[Scalar]]:
    """Matrix of the intertwiner in the tableau basis (enumeration order)."""
    basis = enumerate_syt(shape)
    index = {t: k for k, t in enumerate(basis)}
    dim = len(basis)
    mat = [[ZERO] * dim for _ in range(dim)]
    for col, tableau in enumerate(basis):
        image = apply_phi(shape, GTVector.basis(tableau))
        for t, c in image.items():
            mat[index[t]][col] = c
    return mat
