"""Pure-Python twin of the compiled point-search kernel.

Same contract as `_speedups.search`: complete depth-first enumeration of
all assignments in ``(0..q-1)^n`` satisfying every relation, pruning as
soon as a relation's variables are all assigned.  Results come out in
lexicographic order.
"""

from __future__ import annotations

BACKEND = "pure"


def search(q: int, n: int, levels, prefix=()) -> list[tuple[int, ...]]:
    """levels[d] = relations checkable once variable d is assigned; each
    relation is a list of (coeff, var-index tuple) terms, coeff in 0..q-1."""
    vals = [0] * n
    k = len(prefix)
    for i, v in enumerate(prefix):
        vals[i] = v % q
    for d in range(k):
        if not _check(q, vals, levels[d]):
            return []
    out: list[tuple[int, ...]] = []
    if k == n:
        return [tuple(vals)]
    d = k
    vals[d] = -1
    while d >= k:
        vals[d] += 1
        if vals[d] == q:
            d -= 1
            continue
        if not _check(q, vals, levels[d]):
            continue
        if d == n - 1:
            out.append(tuple(vals))
        else:
            d += 1
            vals[d] = -1
    return out


def _check(q: int, vals, relations) -> bool:
    for rel in relations:
        acc = 0
        for coeff, idxs in rel:
            v = coeff
            for i in idxs:
                v = v * vals[i] % q
            acc = (acc + v) % q
        if acc != 0:
            return False
    return True
