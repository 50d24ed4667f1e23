# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled point-search kernel: exhaustive backtracking over (0..q-1)^n.

Mirrors `_pointsearch_py.search` exactly; the relation bytecode is
flattened into C arrays once per call and the DFS runs without touching
Python objects until a solution is recorded.
"""

from libc.stdlib cimport malloc, free

BACKEND = "compiled"


def search(int q, int n, levels, prefix=()):
    cdef int n_rel = 0, n_term = 0, n_var = 0
    for lvl in levels:
        for rel in lvl:
            n_rel += 1
            for coeff, idxs in rel:
                n_term += 1
                n_var += len(idxs)

    cdef long long *vals = <long long *> malloc((n if n > 0 else 1) * sizeof(long long))
    cdef int *level_rel_start = <int *> malloc((n + 2) * sizeof(int))
    cdef int *rel_term_start = <int *> malloc((n_rel + 1) * sizeof(int))
    cdef long long *term_coeff = <long long *> malloc((n_term if n_term > 0 else 1) * sizeof(long long))
    cdef int *term_var_start = <int *> malloc((n_term + 1) * sizeof(int))
    cdef int *var_idx = <int *> malloc((n_var if n_var > 0 else 1) * sizeof(int))
    if (vals == NULL or level_rel_start == NULL or rel_term_start == NULL
            or term_coeff == NULL or term_var_start == NULL or var_idx == NULL):
        free(vals); free(level_rel_start); free(rel_term_start)
        free(term_coeff); free(term_var_start); free(var_idx)
        raise MemoryError()

    cdef int ri = 0, ti = 0, vi = 0, d
    rel_term_start[0] = 0
    term_var_start[0] = 0
    d = 0
    for lvl in levels:
        level_rel_start[d] = ri
        for rel in lvl:
            for coeff, idxs in rel:
                term_coeff[ti] = coeff
                for i in idxs:
                    var_idx[vi] = i
                    vi += 1
                ti += 1
                term_var_start[ti] = vi
            ri += 1
            rel_term_start[ri] = ti
        d += 1
    level_rel_start[d] = ri

    out = []
    cdef int k = len(prefix)
    cdef long long qq = q
    cdef int ok, depth
    try:
        for i in range(k):
            vals[i] = prefix[i] % q
        ok = 1
        for depth in range(k):
            if not _check(qq, vals, depth, level_rel_start, rel_term_start,
                          term_coeff, term_var_start, var_idx):
                ok = 0
                break
        if not ok:
            return []
        if k == n:
            return [tuple(vals[i] for i in range(n))]

        depth = k
        vals[depth] = -1
        while depth >= k:
            vals[depth] += 1
            if vals[depth] == qq:
                depth -= 1
                continue
            if not _check(qq, vals, depth, level_rel_start, rel_term_start,
                          term_coeff, term_var_start, var_idx):
                continue
            if depth == n - 1:
                out.append(tuple(vals[i] for i in range(n)))
            else:
                depth += 1
                vals[depth] = -1
        return out
    finally:
        free(vals); free(level_rel_start); free(rel_term_start)
        free(term_coeff); free(term_var_start); free(var_idx)


cdef inline int _check(long long q, long long *vals, int d,
                       int *level_rel_start, int *rel_term_start,
                       long long *term_coeff, int *term_var_start,
                       int *var_idx) nogil:
    cdef int r, t, j
    cdef long long acc, v
    for r in range(level_rel_start[d], level_rel_start[d + 1]):
        acc = 0
        for t in range(rel_term_start[r], rel_term_start[r + 1]):
            v = term_coeff[t]
            for j in range(term_var_start[t], term_var_start[t + 1]):
                v = (v * vals[var_idx[j]]) % q
            acc = (acc + v) % q
        if acc != 0:
            return 0
    return 1
