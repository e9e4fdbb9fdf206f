"""Kernel selection: compiled extension when available, pure Python otherwise.

Both implementations share one calling convention and produce bit-identical
counts; `benchmarks/bench_kernels.py` compares their speed.
"""

from __future__ import annotations

import numpy as np

from . import _countpy

try:
    from . import _countcore
except ImportError:  # extension not built; fall back to the Python loop
    _countcore = None

HAVE_COMPILED = _countcore is not None
DEFAULT_IMPL = "compiled" if HAVE_COMPILED else "python"


class KernelTask:
    """Preprocessed enumeration task over one field, shared by both kernels.

    Pins are already folded away: the arrays describe polynomials in the free
    coordinates only, with coefficients and tables in index encoding.
    """

    __slots__ = (
        "q", "n_free", "n_polys", "add", "mul", "pows", "level_bounds",
        "term_poly", "term_coeff", "term_exps", "const_acc", "masks", "_lists",
    )

    def __init__(self, q, n_free, n_polys, add, mul, pows, level_bounds,
                 term_poly, term_coeff, term_exps, const_acc, masks):
        self.q = q
        self.n_free = n_free
        self.n_polys = n_polys
        self.add = add
        self.mul = mul
        self.pows = pows
        self.level_bounds = np.ascontiguousarray(level_bounds, dtype=np.int32)
        self.term_poly = np.ascontiguousarray(term_poly, dtype=np.int32)
        self.term_coeff = np.ascontiguousarray(term_coeff, dtype=np.int32)
        self.term_exps = np.ascontiguousarray(term_exps, dtype=np.int32)
        self.const_acc = np.ascontiguousarray(const_acc, dtype=np.int32)
        self.masks = np.ascontiguousarray(masks, dtype=np.int64)
        self._lists = None

    def _as_lists(self):
        if self._lists is None:
            self._lists = (
                self.add.tolist(),
                self.mul.tolist(),
                self.pows.tolist(),
                self.level_bounds.tolist(),
                self.term_poly.tolist(),
                self.term_coeff.tolist(),
                self.term_exps.tolist(),
                self.const_acc.tolist(),
                self.masks.tolist(),
            )
        return self._lists


def count_zeros(task: KernelTask, lo: int, hi: int, impl: str | None = None) -> int:
    """Count points (first free coordinate in [lo, hi)) where every equation
    column vanishes."""
    if impl is None:
        impl = DEFAULT_IMPL
    if impl == "compiled":
        if _countcore is None:
            raise RuntimeError("compiled kernel requested but not built")
        return int(
            _countcore.count_zeros(
                task.q, task.n_free, task.n_polys, task.add, task.mul,
                task.pows, task.level_bounds, task.term_poly, task.term_coeff,
                task.term_exps, task.const_acc, task.masks, lo, hi,
            )
        )
    if impl == "python":
        add, mul, pows, level_bounds, term_poly, term_coeff, term_exps, const_acc, masks = (
            task._as_lists()
        )
        return _countpy.count_zeros(
            task.q, task.n_free, task.n_polys, add, mul, pows, level_bounds,
            term_poly, term_coeff, term_exps, const_acc, masks, lo, hi,
        )
    raise ValueError(f"unknown kernel implementation {impl!r}")
