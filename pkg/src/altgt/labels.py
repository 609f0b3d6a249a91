"""Labels for irreducible representations of alternating groups, and the
branching relation between consecutive levels.

A partition that differs from its conjugate labels one representation and is
written plain; a self-conjugate partition splits into two, written with a
sign tag ("2,1^+", "2,1^-").  Two labels at the same level are equivalent
when equal or conjugate; conjugation fixes each signed label.

Branching from level n to n-1 (the dagger relation) follows containment of
the underlying partitions:

* unsigned alpha over unsigned beta: beta is alpha with one box removed;
* unsigned alpha over a self-conjugate mu in its down set: both mu^+ and mu^-;
* signed lambda^e over unsigned beta: beta in the down set of lambda;
* signed lambda^e over signed mu^e: (mu, lambda) a self-conjugate cover,
  same sign only.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .partitions import Partition, partitions_of, revlex_key
from .tableaux import syt_count

_SIGN_CHARS = {1: "+", -1: "-"}


class AltLabel:
    """A partition plus an optional sign; signed iff self-conjugate."""

    __slots__ = ("_partition", "_sign")

    def __init__(self, partition: Partition, sign: int | None = None):
        if sign not in (None, 1, -1):
            raise ValueError(f"sign must be None, 1 or -1, got {sign!r}")
        if partition.is_self_conjugate():
            if sign is None:
                raise ValueError(f"self-conjugate partition {partition} needs a sign")
        elif sign is not None:
            raise ValueError(f"partition {partition} is not self-conjugate; no sign allowed")
        self._partition = partition
        self._sign = sign

    @classmethod
    def parse(cls, text: str) -> "AltLabel":
        if not text.isascii():
            raise ValueError(f"label {text!r} contains non-ASCII characters; "
                             "write signs as ^+ or ^-")
        head, sep, tail = text.partition("^")
        partition = Partition.parse(head)
        if not sep:
            return cls(partition)
        if tail == "+":
            return cls(partition, 1)
        if tail == "-":
            return cls(partition, -1)
        raise ValueError(f"invalid sign {tail!r} in label {text!r}")

    @property
    def partition(self) -> Partition:
        return self._partition

    @property
    def sign(self) -> int | None:
        return self._sign

    @property
    def n(self) -> int:
        return self._partition.n

    def is_signed(self) -> bool:
        return self._sign is not None

    def sort_key(self):
        return (revlex_key(self._partition), 0 if self._sign in (None, 1) else 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AltLabel):
            return NotImplemented
        return self._partition == other._partition and self._sign == other._sign

    def __hash__(self) -> int:
        return hash((self._partition, self._sign))

    def __str__(self) -> str:
        if self._sign is None:
            return str(self._partition)
        return f"{self._partition}^{_SIGN_CHARS[self._sign]}"

    def __repr__(self) -> str:
        return f"AltLabel.parse({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "partition": self._partition.to_json(),
            "sign": None if self._sign is None else _SIGN_CHARS[self._sign],
        }

    def latex(self) -> str:
        body = f"({str(self._partition)})"
        if self._sign is None:
            return body
        return f"{body}^{_SIGN_CHARS[self._sign]}"


@lru_cache(maxsize=None)
def labels(n: int) -> tuple[AltLabel, ...]:
    """All labels at level n >= 2, partitions in rev-lex order, + before -."""
    if n < 2:
        raise ValueError(f"labels are defined for n >= 2, got {n}")
    out = []
    for p in partitions_of(n):
        if p.is_self_conjugate():
            out.append(AltLabel(p, 1))
            out.append(AltLabel(p, -1))
        else:
            out.append(AltLabel(p))
    return tuple(out)


def equivalent(a: AltLabel, b: AltLabel) -> bool:
    """Same representation: equal, or unsigned conjugates of each other."""
    if a.n != b.n:
        raise ValueError(f"labels of different sizes {a.n} and {b.n}")
    if a == b:
        return True
    if a.is_signed() or b.is_signed():
        return False
    return a.partition.conjugate() == b.partition


def in_dagger(below: AltLabel, above: AltLabel) -> bool:
    """Whether `below` (at n-1) appears under `above` (at n) in branching."""
    if above.n != below.n + 1:
        raise ValueError(
            f"levels must be consecutive, got {below.n} under {above.n}"
        )
    if not above.partition.covers(below.partition):
        return False
    if above.is_signed() and below.is_signed():
        return above.sign == below.sign
    # mixed signed/unsigned pairs need containment only
    return True


@lru_cache(maxsize=None)
def dagger_down_set(label: AltLabel) -> tuple[AltLabel, ...]:
    """Labels at level n-1 lying under this one, in deterministic order."""
    if label.n < 3:
        raise ValueError(f"branching needs level >= 3, got {label.n}")
    out = []
    for below in label.partition.down_set():
        if below.is_self_conjugate():
            if label.is_signed():
                out.append(AltLabel(below, label.sign))
            else:
                out.append(AltLabel(below, 1))
                out.append(AltLabel(below, -1))
        else:
            out.append(AltLabel(below))
    out.sort(key=AltLabel.sort_key)
    return tuple(out)


def dim_alt(label: AltLabel) -> int:
    """Dimension: the tableau count of the partition, halved when signed."""
    count = syt_count(label.partition)
    if label.is_signed():
        assert count % 2 == 0
        return count // 2
    return count


def canonical_label(label: AltLabel) -> AltLabel:
    """Rev-lex earlier member of the equivalence class (signed labels fixed)."""
    if label.is_signed():
        return label
    return AltLabel(label.partition.canonical_pair_rep())


class BranchingGraph:
    """Levelled multigraph used for DOT and JSON emission."""

    def __init__(self, chain: str, levels, edges, colors):
        self.chain = chain
        self.levels = levels      # list of (n, tuple of node name strings)
        self.edges = edges        # tuple of ((n, name), (n - 1, name)) pairs
        self.colors = colors      # dict name -> color at a given (n, name)

    @staticmethod
    def node_id(n: int, name: str) -> str:
        return f"{n}:{name}"

    def to_dot(self) -> str:
        lines = [f"graph {self.chain} {{", "  rankdir=BT;", "  node [shape=box];"]
        for n, names in self.levels:
            for name in names:
                nid = self.node_id(n, name)
                color = self.colors.get((n, name))
                attrs = f'label="{name}"'
                if color:
                    attrs += f", color={color}, fontcolor={color}"
                lines.append(f'  "{nid}" [{attrs}];')
            same = "; ".join(f'"{self.node_id(n, name)}"' for name in names)
            lines.append(f"  {{ rank=same; {same}; }}")
        for (n_hi, hi), (n_lo, lo) in self.edges:
            lines.append(f'  "{self.node_id(n_hi, hi)}" -- "{self.node_id(n_lo, lo)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "chain": self.chain,
            "levels": {str(n): list(names) for n, names in self.levels},
            "edges": [
                [self.node_id(n_hi, hi), self.node_id(n_lo, lo)]
                for (n_hi, hi), (n_lo, lo) in self.edges
            ],
        }


def bratteli(max_n: int) -> BranchingGraph:
    """Branching graph of the alternating chain on levels 2..max_n.

    Nodes are canonical class representatives; an edge joins classes when
    any pair of raw labels in them branches.  Signed nodes carry colors:
    red for +, green for -.
    """
    if max_n < 2:
        raise ValueError(f"max_n must be at least 2, got {max_n}")
    levels = []
    colors: dict[tuple[int, str], str] = {}
    canon_at: dict[int, list[AltLabel]] = {}
    for n in range(2, max_n + 1):
        nodes = []
        for label in labels(n):
            if canonical_label(label) == label:
                nodes.append(label)
                if label.sign == 1:
                    colors[(n, str(label))] = "red"
                elif label.sign == -1:
                    colors[(n, str(label))] = "green"
        canon_at[n] = nodes
        levels.append((n, tuple(str(lb) for lb in nodes)))
    edges = []
    seen = set()
    for n in range(3, max_n + 1):
        for label in labels(n):
            hi = canonical_label(label)
            for below in dagger_down_set(label):
                lo = canonical_label(below)
                key = ((n, str(hi)), (n - 1, str(lo)))
                if key not in seen:
                    seen.add(key)
                    edges.append(key)
    edges.sort(key=lambda e: (e[0][0], e[0][1], e[1][1]))
    return BranchingGraph("alternating", levels, tuple(edges), colors)


def young_graph(max_n: int) -> BranchingGraph:
    """Branching graph of the symmetric chain on levels 1..max_n."""
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    levels = []
    for n in range(1, max_n + 1):
        levels.append((n, tuple(str(p) for p in partitions_of(n))))
    edges = []
    for n in range(2, max_n + 1):
        for p in partitions_of(n):
            for below in p.down_set():
                edges.append(((n, str(p)), (n - 1, str(below))))
    edges.sort(key=lambda e: (e[0][0], e[0][1], e[1][1]))
    return BranchingGraph("symmetric", levels, tuple(edges), {})


def level_dimension_total(n: int) -> tuple[int, int]:
    """(sum of dim^2 over equivalence classes at level n, n!/2)."""
    total = 0
    for label in labels(n):
        if canonical_label(label) == label:
            total += dim_alt(label) ** 2
    return total, math.factorial(n) // 2
