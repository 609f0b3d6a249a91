"""Independent brute-force oracles used to freeze expected values.

Everything here deliberately avoids the library's own recursions: tableaux
come from filtering raw permutations, signs from inversion counting, and
conjugates from transposing cell sets.
"""

from itertools import permutations

from altgt import Partition, StandardTableau


def brute_force_syt(shape: Partition) -> set[StandardTableau]:
    """All standard tableaux of a shape by filling permutations row by row."""
    n = shape.n
    found = set()
    for perm in permutations(range(1, n + 1)):
        rows, start = [], 0
        for length in shape.parts:
            rows.append(perm[start:start + length])
            start += length
        ok = True
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if c + 1 < len(row) and row[c + 1] < entry:
                    ok = False
                    break
                if r + 1 < len(rows) and c < len(rows[r + 1]) and rows[r + 1][c] < entry:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(StandardTableau(rows))
    return found


def inversion_sign(mapping: dict[int, int]) -> int:
    """Sign of a permutation given as a dict, by counting inversions."""
    keys = sorted(mapping)
    images = [mapping[k] for k in keys]
    inversions = sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )
    return -1 if inversions % 2 else 1


def transpose_cells(shape: Partition) -> Partition:
    """Conjugate partition via the raw cell set."""
    cells = {(r, c) for r, p in enumerate(shape.parts) for c in range(p)}
    flipped = {(c, r) for r, c in cells}
    rows = {}
    for r, _ in flipped:
        rows[r] = rows.get(r, 0) + 1
    return Partition([rows[r] for r in sorted(rows)])
