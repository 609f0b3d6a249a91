"""Downward paths in the alternating branching graph and their equivalence.

A path records the labels at levels 2..n that an irreducible representation
passes through under successive restriction.  Two paths are equivalent when
they are componentwise equivalent (equal or conjugate at every level); an
equivalence class has exactly 2^(r+1) members, where r counts the descents
from a signed label to an unsigned one along the path.

Each class contributes one basis vector, so picking one representative per
class ending at a given label enumerates a basis.  The representative is the
class member, still ending at that exact label, whose label sequence is
smallest position by position: partitions compared in rev-lex order, + before
- on signs.  Path text joins labels with ";": "2;2,1^+;3,1;3,1,1^+;4,1,1".
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .labels import AltLabel, canonical_label, dagger_down_set, equivalent, in_dagger


class AltPath:
    """A branching path: one label per level from 2 up to its endpoint."""

    __slots__ = ("_labels",)

    def __init__(self, path_labels):
        path_labels = tuple(path_labels)
        if not path_labels:
            raise ValueError("a path needs at least the level-2 label")
        for k, label in enumerate(path_labels):
            if label.n != k + 2:
                raise ValueError(
                    f"label {label} at position {k} should have size {k + 2}"
                )
        for below, above in zip(path_labels, path_labels[1:]):
            if not in_dagger(below, above):
                raise ValueError(f"{below} does not branch from {above}")
        self._labels = path_labels

    @classmethod
    def parse(cls, text: str) -> "AltPath":
        chunks = text.split(";")
        return cls(tuple(AltLabel.parse(c.strip()) for c in chunks))

    @property
    def labels(self) -> tuple[AltLabel, ...]:
        return self._labels

    @property
    def endpoint(self) -> AltLabel:
        return self._labels[-1]

    @property
    def n(self) -> int:
        return self._labels[-1].n

    def truncated(self) -> "AltPath":
        if len(self._labels) == 1:
            raise ValueError("cannot truncate a single-label path")
        return AltPath(self._labels[:-1])

    def extended(self, label: AltLabel) -> "AltPath":
        return AltPath(self._labels + (label,))

    def sort_key(self):
        return tuple(label.sort_key() for label in self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AltPath):
            return NotImplemented
        return self._labels == other._labels

    def __hash__(self) -> int:
        return hash(self._labels)

    def __str__(self) -> str:
        return ";".join(str(label) for label in self._labels)

    def __repr__(self) -> str:
        return f"AltPath.parse({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [label.to_json() for label in self._labels]


@lru_cache(maxsize=None)
def enumerate_paths(label: AltLabel) -> tuple[AltPath, ...]:
    """All paths ending at exactly this label, sorted by label sequence."""
    if label.n == 2:
        return (AltPath((label,)),)
    found = [
        shorter.extended(label)
        for below in dagger_down_set(label)
        for shorter in enumerate_paths(below)
    ]
    found.sort(key=AltPath.sort_key)
    return tuple(found)


def path_equivalent(a: AltPath, b: AltPath) -> bool:
    """Componentwise equivalence of two paths of the same length."""
    if len(a) != len(b):
        raise ValueError(f"paths of different lengths {len(a)} and {len(b)}")
    return all(equivalent(x, y) for x, y in zip(a, b))


def class_signature(path: AltPath) -> tuple[AltLabel, ...]:
    """Canonical form of each position; equal iff paths are equivalent."""
    return tuple(canonical_label(label) for label in path)


def branch_count_r(path: AltPath) -> int:
    """Number of signed-to-unsigned descents along the path."""
    count = 0
    for below, above in zip(path.labels, path.labels[1:]):
        if below.is_signed() and not above.is_signed():
            count += 1
    return count


def class_members(path: AltPath) -> tuple[AltPath, ...]:
    """The full equivalence class of a path, endpoints allowed to vary."""
    choice_sets = []
    for label in path:
        if label.is_signed():
            choice_sets.append((label,))
        else:
            choice_sets.append((label, AltLabel(label.partition.conjugate())))
    members = []
    for combo in product(*choice_sets):
        ok = all(in_dagger(lo, hi) for lo, hi in zip(combo, combo[1:]))
        if ok:
            members.append(AltPath(combo))
    members.sort(key=AltPath.sort_key)
    return tuple(members)


def geodesic_representatives(label: AltLabel) -> tuple[AltPath, ...]:
    """One path per equivalence class ending at this exact label.

    enumerate_paths returns paths in sorted order, so the first appearance
    of each class is its minimal member under the documented order.
    """
    reps = []
    seen = set()
    for path in enumerate_paths(label):
        sig = class_signature(path)
        if sig not in seen:
            seen.add(sig)
            reps.append(path)
    return tuple(reps)
