"""Finite-field solution search for systems of word equations.

Compiles relation polynomials into a flat term bytecode (scalar values of
a word do commute, so a word becomes a plain product of variable values)
and hands it to the fastest available backend: the Cython kernel
`mapscheme._speedups` when it was built, otherwise the pure-Python twin.
Set ``MAPSCHEME_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .fields import Field
from .freealg import NCPolynomial

if os.environ.get("MAPSCHEME_PURE"):
    from . import _pointsearch_py as _backend
else:
    try:
        from . import _speedups as _backend  # type: ignore[attr-defined]
    except ImportError:
        from . import _pointsearch_py as _backend

BACKEND = _backend.BACKEND

DEFAULT_GUARD = 10_000_000


class SearchSpaceError(RuntimeError):
    pass


def check_guard(q: int, nvars: int, limit: int | None):
    limit = DEFAULT_GUARD if limit is None else limit
    if q**nvars > limit:
        raise SearchSpaceError(
            f"search space {q}^{nvars} exceeds the guard limit {limit}; "
            "raise --limit or run partitioned (--workers with a prefix split)"
        )


def compile_relations(
    gens: tuple[str, ...], relations, field: Field
) -> list[list[list[tuple[int, tuple[int, ...]]]]]:
    """Relation bytecode grouped by the depth at which it becomes checkable.

    Coefficients are reduced into F_q; rational inputs are reduced mod q
    (vanishing denominators raise).  Relations using no variable at all go
    into a virtual level -1 handled by the caller via `constant_ok`.
    """
    q = field.p
    assert q is not None
    index = {g: i for i, g in enumerate(gens)}
    levels: list[list[list[tuple[int, tuple[int, ...]]]]] = [[] for _ in gens]
    constants: list[int] = []
    for rel in relations:
        terms: list[tuple[int, tuple[int, ...]]] = []
        top = -1
        for w, c in sorted(rel.terms.items()):
            cc = field.of(c)
            idxs = tuple(index[g] for g in w)
            if idxs:
                top = max(top, max(idxs))
            terms.append((cc, idxs))
        if top < 0:
            total = 0
            for cc, _ in terms:
                total = (total + cc) % q
            constants.append(total)
        else:
            levels[top].append(terms)
    if any(c != 0 for c in constants) and levels:
        # impossible system: plant an unsatisfiable relation at depth 0
        levels[0].append([(1, ())])
    return levels


def _constant_relations_ok(relations, field: Field) -> bool:
    q = field.p
    for rel in relations:
        if all(not w for w in rel.terms):
            total = 0
            for w, c in rel.terms.items():
                total = (total + field.of(c)) % q
            if total != 0:
                return False
    return True


def _worker(args):
    q, n, levels, prefix = args
    return _backend.search(q, n, levels, prefix)


def solve(
    gens: tuple[str, ...],
    relations: list[NCPolynomial],
    field: Field,
    limit: int | None = None,
    workers: int = 1,
) -> list[tuple[int, ...]]:
    """All assignments of the generators in F_q killing every relation,
    in lexicographic order."""
    if field.p is None:
        raise SearchSpaceError("point search needs a prime field")
    q = field.p
    n = len(gens)
    check_guard(q, n, limit)
    if n == 0:
        return [()] if _constant_relations_ok(relations, field) else []
    if not _constant_relations_ok(relations, field):
        return []
    levels = compile_relations(gens, relations, field)
    if workers > 1 and n >= 1 and q > 1:
        jobs = [(q, n, levels, (v,)) for v in range(q)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_worker, jobs))
        out: list[tuple[int, ...]] = []
        for chunk in chunks:  # ascending first-value order keeps this sorted
            out.extend(chunk)
        return out
    return _backend.search(q, n, levels, ())
