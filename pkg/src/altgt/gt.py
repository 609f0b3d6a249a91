"""Gelfand-Tsetlin basis vectors for alternating groups, written exactly in
the tableau bases of the symmetric-group representations containing them.

Each branching path determines one vector by walking the path upward:

* level 2 starts from the single tableau of (2) or (1,1);
* when the next label is unsigned, or signed above a signed label, the
  vector is carried along the inclusion of representations unchanged;
* when the next label is signed with sign e above an unsigned label, the
  carried vector w is completed to the projection w + e * phi(w) onto the
  +-or- eigenspace of the intertwiner phi.

Every coefficient of every resulting vector is a fourth root of unity, so
the optional normalization only divides by the square root of the number of
terms.
"""

from __future__ import annotations

from .associator import apply_phi
from .geodesics import AltPath, geodesic_representatives
from .labels import AltLabel, dim_alt
from .partitions import Partition
from .scalars import Scalar, sqrt_rational
from .tableaux import StandardTableau, append_box
from .yor import GTVector


def embed(vec: GTVector, shape: Partition) -> GTVector:
    """Include a vector into a covering shape by adding the final box."""
    if not shape.covers(vec.shape):
        raise ValueError(f"shape {shape} does not cover {vec.shape}")
    out = {append_box(t, shape): c for t, c in vec.items()}
    return GTVector(shape, out)


def restrict(vec: GTVector, shape: Partition) -> GTVector:
    """Keep the terms whose tableaux shrink to the given shape; drop the last box.

    This is the left inverse of embed: terms whose prefix is a different
    member of the down set are discarded.
    """
    n = vec.shape.n
    if not vec.shape.covers(shape):
        raise ValueError(f"{shape} is not below {vec.shape}")
    out: dict[StandardTableau, Scalar] = {}
    for tableau, coeff in vec.items():
        if tableau.prefix_shape(n - 1) != shape:
            continue
        rows = [[e for e in row if e != n] for row in tableau.rows]
        out[StandardTableau([row for row in rows if row])] = coeff
    return GTVector(shape, out)


_BASE_VECTORS = {
    (2,): StandardTableau([[1, 2]]),
    (1, 1): StandardTableau([[1], [2]]),
}


def gt_vector(path: AltPath, normalize: bool = False) -> GTVector:
    """The basis vector attached to one branching path."""
    vec = _build(path)
    if normalize:
        norm_sq = vec.norm_squared().as_rational()
        vec = vec.scale(sqrt_rational(norm_sq).inverse())
    return vec


def _build(path: AltPath) -> GTVector:
    if len(path) == 1:
        return GTVector.basis(_BASE_VECTORS[path.endpoint.partition.parts])
    head = path.endpoint
    prev = path.labels[-2]
    carried = embed(_build(path.truncated()), head.partition)
    if not head.is_signed() or prev.is_signed():
        return carried
    mirrored = apply_phi(head.partition, carried)
    # the two halves live over conjugate prefixes, so they cannot overlap
    assert not set(carried.support()) & set(mirrored.support())
    return carried + mirrored if head.sign == 1 else carried - mirrored


def gt_basis(
    label: AltLabel, normalize: bool = False
) -> tuple[tuple[AltPath, GTVector], ...]:
    """One (path, vector) pair per equivalence class ending at this label."""
    pairs = tuple(
        (path, gt_vector(path, normalize=normalize))
        for path in geodesic_representatives(label)
    )
    assert len(pairs) == dim_alt(label)
    return pairs
