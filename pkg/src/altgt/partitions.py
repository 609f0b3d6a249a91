"""Integer partitions and the covering relation of Young's graph."""

from __future__ import annotations

from functools import lru_cache


class Partition:
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ("_parts",)

    def __init__(self, parts):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a partition needs at least one part")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts}")
        self._parts = parts

    @classmethod
    def parse(cls, text: str) -> "Partition":
        tokens = [t.strip() for t in text.split(",")]
        parts = []
        for tok in tokens:
            if not tok.isdigit():
                raise ValueError(f"invalid partition part {tok!r}")
            parts.append(int(tok))
        return cls(parts)

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def n(self) -> int:
        return sum(self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, idx):
        return self._parts[idx]

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self._parts)

    def __repr__(self) -> str:
        return f"Partition({self._parts!r})"

    def to_json(self) -> list[int]:
        return list(self._parts)

    def conjugate(self) -> "Partition":
        cols = [sum(1 for p in self._parts if p > j) for j in range(self._parts[0])]
        return Partition(cols)

    def is_self_conjugate(self) -> bool:
        return self == self.conjugate()

    def diagonal_length(self) -> int:
        """Number of diagonal cells: max i with lambda_i >= i (1-based)."""
        return sum(1 for i, p in enumerate(self._parts, start=1) if p >= i)

    def contains_cell(self, row: int, col: int) -> bool:
        """0-based cell membership test."""
        return 0 <= row < len(self._parts) and 0 <= col < self._parts[row]

    def down_set(self) -> tuple["Partition", ...]:
        """All partitions obtained by removing one removable corner cell."""
        if self.n < 2:
            raise ValueError(f"no partitions below {self}")
        out = []
        for i, p in enumerate(self._parts):
            last_in_run = i + 1 == len(self._parts) or self._parts[i + 1] < p
            if not last_in_run:
                continue
            if p == 1:
                out.append(Partition(self._parts[:i]))
            else:
                out.append(Partition(self._parts[:i] + (p - 1,) + self._parts[i + 1:]))
        return tuple(out)

    def covers(self, other: "Partition") -> bool:
        return self.n >= 2 and other in self.down_set()

    def self_conjugate_cover_partner(self) -> tuple["Partition", str]:
        """The unique self-conjugate partition one diagonal cell away.

        Returns (partner, role) where role is "smaller" or "larger" for the
        position this partition occupies in the pair.  Defined for
        self-conjugate partitions; the single-cell partition is special-cased
        with partner (2,1).
        """
        if not self.is_self_conjugate():
            raise ValueError(f"{self} is not self-conjugate")
        if self._parts == (1,):
            return Partition((2, 1)), "smaller"
        d = self.diagonal_length()
        # the diagonal corner (d, d) is removable iff row d has length d
        # and is the last row of its length
        i = d - 1
        removable = (
            self._parts[i] == d
            and (i + 1 == len(self._parts) or self._parts[i + 1] < d)
        )
        if removable:
            parts = list(self._parts)
            parts[i] -= 1
            if parts[i] == 0:
                parts.pop(i)
            return Partition(parts), "larger"
        # add the cell (d+1, d+1)
        parts = list(self._parts)
        if len(parts) == d:
            parts.append(1)
        else:
            parts[d] += 1
        return Partition(parts), "smaller"

    def canonical_pair_rep(self) -> "Partition":
        """The rev-lex earlier of this partition and its conjugate."""
        conj = self.conjugate()
        return self if revlex_key(self) <= revlex_key(conj) else conj


def revlex_key(partition: Partition) -> tuple[int, ...]:
    """Sort key for reverse lexicographic order (larger first part precedes)."""
    return tuple(-p for p in partition.parts)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in reverse lexicographic order."""
    if n < 1:
        raise ValueError(f"no partitions of {n}")

    def gen(total, maxpart):
        if total == 0:
            yield ()
            return
        for first in range(min(total, maxpart), 0, -1):
            for rest in gen(total - first, first):
                yield (first,) + rest

    return tuple(Partition(p) for p in gen(n, n))


@lru_cache(maxsize=None)
def self_conjugate_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(p for p in partitions_of(n) if p.is_self_conjugate())
