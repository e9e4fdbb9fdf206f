# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernel; semantics mirror _countpy.py exactly.

The hot loop walks the enumeration tree over the free coordinates with
per-level partial sums for every base polynomial, then tests the equation
columns through zero-bitmasks. Runs without the GIL so disjoint chunks can
be counted on real threads.
"""

import numpy as np


cdef long long _rec(
    int v,
    int start,
    int stop,
    int q,
    int n_free,
    int n_polys,
    int n_masks,
    const unsigned short[:, ::1] add,
    const unsigned short[:, ::1] mul,
    const unsigned short[:, ::1] pows,
    const int[::1] level_bounds,
    const int[::1] term_poly,
    const int[::1] term_coeff,
    const int[::1] term_exps,
    const long long[::1] masks,
    int[::1] x,
    int[:, ::1] acc,
) noexcept nogil:
    cdef long long count = 0
    cdef int xv, t, u, e, i, j, val, base
    cdef int t_lo = level_bounds[v]
    cdef int t_hi = level_bounds[v + 1]
    cdef int last = n_free - 1
    cdef long long zbits
    cdef bint hit
    for xv in range(start, stop):
        x[v] = xv
        for i in range(n_polys):
            acc[v + 1, i] = acc[v, i]
        for t in range(t_lo, t_hi):
            val = term_coeff[t]
            base = t * n_free
            for u in range(v + 1):
                e = term_exps[base + u]
                if e:
                    val = mul[val, pows[x[u], e]]
            i = term_poly[t]
            acc[v + 1, i] = add[acc[v + 1, i], val]
        if v == last:
            zbits = 0
            for i in range(n_polys):
                if acc[v + 1, i] == 0:
                    zbits |= (<long long>1) << i
            hit = True
            for j in range(n_masks):
                if not (zbits & masks[j]):
                    hit = False
                    break
            if hit:
                count += 1
        else:
            count += _rec(
                v + 1, 0, q, q, n_free, n_polys, n_masks,
                add, mul, pows, level_bounds, term_poly, term_coeff,
                term_exps, masks, x, acc,
            )
    return count


def count_zeros(
    int q,
    int n_free,
    int n_polys,
    const unsigned short[:, ::1] add_table,
    const unsigned short[:, ::1] mul_table,
    const unsigned short[:, ::1] pow_table,
    const int[::1] level_bounds,
    const int[::1] term_poly,
    const int[::1] term_coeff,
    const int[::1] term_exps,
    const int[::1] const_acc,
    const long long[::1] masks,
    int lo,
    int hi,
):
    """Count zeros with the first free coordinate restricted to [lo, hi)."""
    x_arr = np.zeros(n_free, dtype=np.int32)
    acc_arr = np.zeros((n_free + 1, n_polys), dtype=np.int32)
    acc_arr[0, :] = np.asarray(const_acc)
    cdef int[::1] x = x_arr
    cdef int[:, ::1] acc = acc_arr
    cdef int n_masks = masks.shape[0]
    cdef long long total
    with nogil:
        total = _rec(
            0, lo, hi, q, n_free, n_polys, n_masks,
            add_table, mul_table, pow_table, level_bounds, term_poly,
            term_coeff, term_exps, masks, x, acc,
        )
    return total
