"""Coset enumeration for finite groups generated by involutions.

Enumerates the cosets of the trivial subgroup (that is, the group elements)
from a presentation whose generators are all involutions, returning the right
multiplication table.  The reflection groups of spherical triangles, the only
users here, complete in at most a few hundred cosets.
"""

from __future__ import annotations


def coset_table(ngens: int, relators, max_cosets: int = 200_000) -> list[list[int]]:
    """Rows of the completed table: row[c][g] = c * g.

    `relators` are tuples of generator indices; every generator g is assumed
    to satisfy g^2 = 1, so the table is kept symmetric (c*g = d implies
    d*g = c).
    """
    relators = [tuple(r) for r in relators]
    for r in relators:
        for g in r:
            if not 0 <= g < ngens:
                raise ValueError(f"bad generator {g} in relator {r}")

    neighbors: list[list | None] = [[None] * ngens]
    labels = [0]
    pending: list[int] = []

    def find(c: int) -> int:
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def merge(a: int, b: int) -> None:
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        labels[b] = a
        pending.append(b)

    def set_entry(c: int, g: int, d: int) -> bool:
        """Record c*g = d (and d*g = c); returns True if anything changed."""
        c, d = find(c), find(d)
        changed = False
        for x, y in ((c, d), (d, c)):
            cur = neighbors[x][g]
            if cur is None:
                neighbors[x][g] = y
                changed = True
            elif find(cur) != y:
                merge(find(cur), y)
                changed = True
        return changed

    def process_pending() -> None:
        while pending:
            b = pending.pop()
            row = neighbors[b]
            neighbors[b] = None
            a = find(b)
            for g, d in enumerate(row):
                if d is not None:
                    set_entry(a, g, find(d))

    def scan(c: int, rel: tuple) -> bool:
        """Push the relator relation through the table at coset c."""
        c = find(c)
        f, i = c, 0
        while i < len(rel):
            nxt = neighbors[f][rel[i]]
            if nxt is None:
                break
            f, i = find(nxt), i + 1
        if i == len(rel):
            if f != find(c):
                merge(f, find(c))
                process_pending()
                return True
            return False
        b, j = find(c), len(rel)
        while j > i + 1:
            nxt = neighbors[b][rel[j - 1]]
            if nxt is None:
                break
            b, j = find(nxt), j - 1
        if j == i + 1:
            changed = set_entry(f, rel[i], b)
            process_pending()
            return changed
        if j == i:
            if f != b:
                merge(f, b)
                process_pending()
                return True
        return False

    changed = True
    while changed:
        changed = False
        c = 0
        while c < len(neighbors):
            if neighbors[c] is None or find(c) != c:
                c += 1
                continue
            for rel in relators:
                if neighbors[c] is None or find(c) != c:
                    break
                if scan(c, rel):
                    changed = True
            if neighbors[c] is None or find(c) != c:
                c += 1
                continue
            for g in range(ngens):
                if neighbors[c][g] is None:
                    if len(neighbors) > max_cosets:
                        raise RuntimeError("coset enumeration exceeded max_cosets")
                    n = len(neighbors)
                    neighbors.append([None] * ngens)
                    labels.append(n)
                    neighbors[c][g] = n
                    neighbors[n][g] = c
                    changed = True
            c += 1

    live = [c for c in range(len(neighbors)) if neighbors[c] is not None and find(c) == c]
    index = {c: i for i, c in enumerate(live)}
    table = []
    for c in live:
        row = []
        for g in range(ngens):
            d = neighbors[c][g]
            assert d is not None, "incomplete table after enumeration"
            row.append(index[find(d)])
        table.append(row)
    return table


def triangle_reflection_table(p: int, q: int, r: int) -> list[list[int]]:
    """Right multiplication table of the reflection group of a triangle whose
    rotation orders at vertices 0, 1, 2 are p, q, r.  Generator i is the
    reflection across side i (the side opposite vertex i)."""
    relators = [(0, 0), (1, 1), (2, 2), (1, 2) * p, (2, 0) * q, (0, 1) * r]
    return coset_table(3, relators)
