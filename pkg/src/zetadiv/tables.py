"""Index-encoded operation tables driving the counting kernels.

Elements of F_q are identified with their enumeration index (0 is zero, 1 is
one). Addition is digit arithmetic in base p; multiplication is built from a
discrete-log/exp pair over a deterministic generator, which keeps peak memory
at O(q^2) small integers. Tables are exact and verified against the element
arithmetic in the test suite.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import TableSizeError
from .field import FiniteField, _prime_factors

# Hard cap on table-driven fields: 2 * q^2 uint16 entries (64 MiB at the cap).
# The evaluation budget guards time; this guards memory.
MAX_TABLE_Q = 4096


class FieldTables:
    """add/mul tables (q x q, uint16) plus cached power tables."""

    __slots__ = ("field", "q", "add", "mul", "_pows")

    def __init__(self, field: FiniteField, add: np.ndarray, mul: np.ndarray):
        self.field = field
        self.q = field.order
        self.add = add
        self.mul = mul
        self._pows: dict[int, np.ndarray] = {}

    def pow_table(self, max_exp: int) -> np.ndarray:
        """pow[x, e] = index of x^e for 0 <= e <= max_exp (x^0 = 1 for all x)."""
        have = self._pows.get(max_exp)
        if have is not None:
            return have
        q = self.q
        pows = np.empty((q, max_exp + 1), dtype=np.uint16)
        pows[:, 0] = 1
        idx = np.arange(q)
        for e in range(1, max_exp + 1):
            pows[:, e] = self.mul[pows[:, e - 1], idx]
        self._pows[max_exp] = pows
        return pows


def _generator_logs(field: FiniteField) -> np.ndarray:
    """exp chain of the first generator in enumeration order:
    exp[e] = index of g^e for e = 0..q-2."""
    q = field.order
    group = q - 1
    factors = _prime_factors(group) if group > 1 else []
    g = None
    for i in range(2, q):
        cand = field.from_index(i)
        if all(not (cand ** (group // t) == field.one()) for t in factors):
            g = cand
            break
    if g is None:  # q = 2: the group is trivial, generated by 1
        g = field.one()
    exp = np.empty(group, dtype=np.int64)
    acc = field.one()
    for e in range(group):
        exp[e] = acc.index
        acc = acc * g
    return exp


@lru_cache(maxsize=16)
def tables_for(field: FiniteField) -> FieldTables:
    q, p, k = field.order, field.p, field.k
    if q > MAX_TABLE_Q:
        raise TableSizeError(
            f"field of order {q} exceeds the table-kernel cap {MAX_TABLE_Q}"
        )
    idx = np.arange(q, dtype=np.int64)
    pvals = p ** np.arange(k, dtype=np.int64)
    digits = (idx[:, None] // pvals[None, :]) % p  # (q, k)

    add = np.zeros((q, q), dtype=np.int64)
    for j in range(k):
        add += ((digits[:, None, j] + digits[None, :, j]) % p) * int(pvals[j])

    mul = np.zeros((q, q), dtype=np.int64)
    if q > 2:
        exp = _generator_logs(field)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1, dtype=np.int64)
        lg = log[1:]
        mul[1:, 1:] = exp[(lg[:, None] + lg[None, :]) % (q - 1)]
    elif q == 2:
        mul[1, 1] = 1

    return FieldTables(field, add.astype(np.uint16), mul.astype(np.uint16))
