"""Pure-Python counting kernel; the semantics mirror _countcore.pyx exactly.

Enumerates assignments of n_free field elements (encoded as table indices)
and counts the points where every equation column vanishes. A column
vanishes iff one of its supporting base polynomials evaluates to zero, so
only the f_i values are computed, never the expanded products.

Terms are grouped by their deepest free variable ("level"); partial sums for
each f_i are carried down the enumeration tree so a term is re-evaluated only
when a variable it touches changes.
"""

from __future__ import annotations


def count_zeros(
    q: int,
    n_free: int,
    n_polys: int,
    add_rows,  # q lists of q ints
    mul_rows,
    pow_rows,  # q lists of (max_exp + 1) ints
    level_bounds,  # n_free + 1 ints; terms of level v are [lb[v], lb[v+1])
    term_poly,
    term_coeff,
    term_exps,  # flat, n_terms * n_free
    const_acc,  # n_polys ints: value of the constant part of each f_i
    masks,  # one bitmask per equation column over the f_i
    lo: int,
    hi: int,
) -> int:
    """Count zeros with the first free coordinate restricted to [lo, hi)."""
    x = [0] * n_free
    acc = [list(const_acc)] + [[0] * n_polys for _ in range(n_free)]
    last = n_free - 1
    n_masks = len(masks)

    def rec(v: int, start: int, stop: int) -> int:
        count = 0
        acc_v = acc[v]
        acc_next = acc[v + 1]
        t_lo = level_bounds[v]
        t_hi = level_bounds[v + 1]
        for xv in range(start, stop):
            x[v] = xv
            acc_next[:] = acc_v
            for t in range(t_lo, t_hi):
                val = term_coeff[t]
                base = t * n_free
                for u in range(v + 1):
                    e = term_exps[base + u]
                    if e:
                        val = mul_rows[val][pow_rows[x[u]][e]]
                i = term_poly[t]
                acc_next[i] = add_rows[acc_next[i]][val]
            if v == last:
                zbits = 0
                for i in range(n_polys):
                    if acc_next[i] == 0:
                        zbits |= 1 << i
                hit = True
                for j in range(n_masks):
                    if not zbits & masks[j]:
                        hit = False
                        break
                if hit:
                    count += 1
            else:
                count += rec(v + 1, 0, q)
        return count

    return rec(0, lo, hi)
