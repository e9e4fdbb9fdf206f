"""Exhaustive point counting of systems over extension fields.

Counts are exact: every point of the enumeration space is tested, so the
results are valid for arbitrarily singular schemes. A budget caps the number
of evaluated points per call, making cost explicit. Counting may be split
across threads; chunks are disjoint top-coordinate ranges combined by
addition, so results are identical to a serial run by construction.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    BudgetExceededError,
    ConstantEquationError,
    MissingTermError,
    NotHomogeneousError,
    RequiresSingleEquationError,
)
from .exponents import q_adic_order
from .field import Embedding, FiniteField, embed, make_field
from .kernels import KernelTask, count_zeros
from .poly import PolySystem
from .tables import tables_for

# Counts are accumulated in C long long; enumeration beyond this is
# unreachable in practice anyway.
_HARD_POINT_LIMIT = 2**62


@dataclass(frozen=True)
class Budget:
    """Cap on evaluated points per counting call."""

    max_evaluations: int = 10**8

    def __post_init__(self):
        if self.max_evaluations < 1:
            raise ValueError("budget must be positive")


@dataclass
class CountTable:
    """Point counts N_nu over F_{q^nu} for one scheme."""

    base_q: int
    what: str  # affine_X | affine_complement | projective_X | projective_complement
    counts: dict[int, int]

    def sequence(self) -> list[int]:
        """Counts as a gap-free list for nu = 1..nu_max."""
        nu_max = max(self.counts) if self.counts else 0
        missing = [nu for nu in range(1, nu_max + 1) if nu not in self.counts]
        if missing:
            raise MissingTermError(f"count table is missing nu = {missing}")
        return [self.counts[nu] for nu in range(1, nu_max + 1)]


@lru_cache(maxsize=64)
def _cached_embedding(small: FiniteField, big: FiniteField) -> Embedding:
    return embed(small, big)


def extension_of(field: FiniteField, nu: int) -> tuple[FiniteField, Embedding]:
    """The canonical degree-nu extension and the embedding into it."""
    if nu < 1:
        raise ValueError(f"nu must be >= 1, got {nu}")
    big = make_field(field.p, field.k * nu)
    return big, _cached_embedding(field, big)


def _check_budget(points: int, budget: Budget | None) -> Budget:
    if budget is None:
        budget = Budget()
    allowed = min(budget.max_evaluations, _HARD_POINT_LIMIT)
    if points > allowed:
        raise BudgetExceededError(points, allowed)
    return budget


def _build_task(system: PolySystem, big: FiniteField, emb: Embedding, pins: dict):
    """Fold pinned coordinates into coefficients and lay the free-coordinate
    polynomials out as flat kernel arrays.

    Returns a KernelTask, or an int (the full count over a zero-dimensional
    box: 0 or 1) when every coordinate is pinned.
    """
    n = system.n_vars
    free = [v for v in range(n) if v not in pins]
    n_free = len(free)
    r = system.r
    if r > 62:
        raise ValueError("counting kernels support at most 62 base polynomials")

    folded = []
    for f in system.polys:
        acc: dict[tuple[int, ...], object] = {}
        for exps, coeff in f.terms.items():
            c = emb(coeff)
            for v, pin_val in pins.items():
                e = exps[v]
                if e:
                    c = c * pin_val**e
            if c.is_zero():
                continue
            key = tuple(exps[v] for v in free)
            acc[key] = acc[key] + c if key in acc else c
        folded.append({k: c for k, c in acc.items() if not c.is_zero()})

    masks = [
        sum(1 << i for i in system.column_support(j))
        for j in range(system.n_equations)
    ]

    if n_free == 0:
        # every coordinate pinned: one point, f_i vanishes iff nothing survived folding
        zbits = sum(1 << i for i, terms in enumerate(folded) if not terms)
        return 1 if all(zbits & m for m in masks) else 0

    const_acc = [0] * r
    term_rows = []  # (level, poly, exps, coeff_index)
    max_exp = 1
    for i, terms in enumerate(folded):
        for exps, c in sorted(terms.items()):
            level = max((v for v, e in enumerate(exps) if e), default=-1)
            if level < 0:
                const_acc[i] = c.index
            else:
                term_rows.append((level, i, exps, c.index))
                max_exp = max(max_exp, max(exps))
    term_rows.sort(key=lambda row: (row[0], row[1], row[2]))

    level_bounds = [0] * (n_free + 1)
    for level, _, _, _ in term_rows:
        level_bounds[level + 1] += 1
    for v in range(n_free):
        level_bounds[v + 1] += level_bounds[v]

    tables = tables_for(big)
    flat_exps = [e for _, _, exps, _ in term_rows for e in exps]
    return KernelTask(
        q=big.order,
        n_free=n_free,
        n_polys=r,
        add=tables.add,
        mul=tables.mul,
        pows=tables.pow_table(max_exp),
        level_bounds=np.array(level_bounds, dtype=np.int32),
        term_poly=np.array([i for _, i, _, _ in term_rows], dtype=np.int32),
        term_coeff=np.array([c for _, _, _, c in term_rows], dtype=np.int32),
        term_exps=np.array(flat_exps, dtype=np.int32),
        const_acc=np.array(const_acc, dtype=np.int32),
        masks=np.array(masks, dtype=np.int64),
    )


def _count_box(system, big, emb, pins, workers: int, impl: str | None) -> int:
    task = _build_task(system, big, emb, pins)
    if isinstance(task, int):
        return task
    q = big.order
    chunks = max(1, min(workers, q))
    bounds = [(w * q) // chunks for w in range(chunks + 1)]
    ranges = [(bounds[w], bounds[w + 1]) for w in range(chunks) if bounds[w] < bounds[w + 1]]
    if len(ranges) == 1:
        return count_zeros(task, 0, q, impl=impl)
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        parts = pool.map(lambda lohi: count_zeros(task, lohi[0], lohi[1], impl=impl), ranges)
        return sum(parts)


def count_affine(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> int:
    """|X(F_{q^nu})| for X in A^n, by exhaustive enumeration."""
    big, emb = extension_of(system.field, nu)
    _check_budget(big.order**system.n_vars, budget)
    return _count_box(system, big, emb, {}, workers, impl)


def count_affine_complement(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> int:
    """|A^n \\ X| over F_{q^nu}: the space size minus the affine count."""
    big, _ = extension_of(system.field, nu)
    return big.order**system.n_vars - count_affine(system, nu, budget, workers, impl)


def projective_space_size(q: int, n_coords: int) -> int:
    """|P^{n_coords - 1}(F_q)| = (q^n_coords - 1) / (q - 1)."""
    return (q**n_coords - 1) // (q - 1)


def count_projective(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> int:
    """Points of X^proj in P^{n-1} over F_{q^nu}, enumerated through the
    representatives whose first nonzero coordinate is 1."""
    if not system.is_homogeneous():
        raise NotHomogeneousError("projective counting requires homogeneous polynomials")
    big, emb = extension_of(system.field, nu)
    n = system.n_vars
    _check_budget(projective_space_size(big.order, n), budget)
    zero, one = big.zero(), big.one()
    total = 0
    for lead in range(n):
        pins = {v: zero for v in range(lead)}
        pins[lead] = one
        total += _count_box(system, big, emb, pins, workers, impl)
    return total


def count_projective_complement(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> int:
    """|P^{n-1} \\ X^proj| over F_{q^nu}."""
    big, _ = extension_of(system.field, nu)
    size = projective_space_size(big.order, system.n_vars)
    return size - count_projective(system, nu, budget, workers, impl)


@dataclass
class ConeCheck:
    """Witnesses for |X_affine| = 1 + (q^nu - 1) * |X_proj|."""

    ok: bool
    nu: int
    affine_count: int
    projective_count: int


def cone_identity_check(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> ConeCheck:
    """The affine zero set of a homogeneous system is the cone over its
    projective zero set: origin plus (q^nu - 1) scalings per projective point.
    Requires every equation column to be nonconstant, otherwise the affine
    side loses the origin and the identity is meaningless."""
    if not system.is_homogeneous():
        raise NotHomogeneousError("cone identity requires homogeneous polynomials")
    if system.has_constant_equation():
        raise ConstantEquationError(
            "cone identity requires every g_j nonconstant (no all-zero exponent column)"
        )
    big, _ = extension_of(system.field, nu)
    affine = count_affine(system, nu, budget, workers, impl)
    proj = count_projective(system, nu, budget, workers, impl)
    return ConeCheck(
        ok=affine == 1 + (big.order - 1) * proj,
        nu=nu,
        affine_count=affine,
        projective_count=proj,
    )


@dataclass
class ExcisionCheck:
    """Witnesses for |A^n \\ G| = |P^n \\ G_proj| - |P^{n-1} \\ G0_proj|."""

    ok: bool
    nu: int
    affine_complement: int
    projective_complement: int
    leading_complement: int


def excision_identity_check(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> ExcisionCheck:
    """Single-hypersurface identity relating the affine complement to the
    complements of the homogenized hypersurface in P^n and of the leading-form
    hypersurface in P^{n-1}."""
    if system.n_equations != 1:
        raise RequiresSingleEquationError(
            f"excision check needs exactly one equation, got {system.n_equations}"
        )
    homogenized = PolySystem(
        [f.homogenize() for f in system.polys], system.exponents, mode="projective"
    )
    leading = PolySystem(
        [f.leading_form() for f in system.polys], system.exponents, mode="projective"
    )
    affine = count_affine_complement(system, nu, budget, workers, impl)
    proj = count_projective_complement(homogenized, nu, budget, workers, impl)
    lead = count_projective_complement(leading, nu, budget, workers, impl)
    return ExcisionCheck(
        ok=affine == proj - lead,
        nu=nu,
        affine_complement=affine,
        projective_complement=proj,
        leading_complement=lead,
    )


@dataclass
class InclusionExclusionCheck:
    """Witnesses for the alternating-sum identity over equation subsets."""

    ok: bool
    nu: int
    lhs: int  # |A^n \ X|
    subset_terms: list[tuple[tuple[int, ...], int]]  # (columns, |/\_(j in S) U_j|)


def inclusion_exclusion_check(
    system: PolySystem,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> InclusionExclusionCheck:
    """|A^n \\ X| = sum over nonempty column subsets S of (-1)^(|S|+1) times
    the complement of the merged hypersurface prod_(j in S) g_j = 0."""
    R = system.n_equations
    if R < 2:
        raise RequiresSingleEquationError(
            f"inclusion-exclusion check needs at least two equations, got {R}"
        )
    big, _ = extension_of(system.field, nu)
    space = big.order**system.n_vars
    _check_budget(space * (2**R), budget)
    generous = Budget(max_evaluations=_HARD_POINT_LIMIT)
    lhs = space - count_affine(system, nu, generous, workers, impl)
    terms = []
    rhs = 0
    for bits in range(1, 2**R):
        cols = tuple(j for j in range(R) if bits & (1 << j))
        merged = [[sum(row[j] for j in cols)] for row in system.exponents]
        sub = PolySystem(system.polys, merged, mode="affine")
        inter = space - count_affine(sub, nu, generous, workers, impl)
        terms.append((cols, inter))
        rhs += inter if len(cols) % 2 == 1 else -inter
    return InclusionExclusionCheck(ok=lhs == rhs, nu=nu, lhs=lhs, subset_terms=terms)


@dataclass
class DivisibilityRecord:
    """Per-nu verdict: does q^(nu * exponent) divide N_nu, and the exact
    q-adic order of N_nu (None meaning infinite, for N_nu = 0)."""

    nu: int
    count: int
    exponent: int
    divisible: bool
    order: int | None


def divisibility_check(table: CountTable, exponent: int) -> list[DivisibilityRecord]:
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    q = table.base_q
    out = []
    for nu in sorted(table.counts):
        n_nu = table.counts[nu]
        out.append(
            DivisibilityRecord(
                nu=nu,
                count=n_nu,
                exponent=exponent,
                divisible=n_nu % q ** (nu * exponent) == 0,
                order=q_adic_order(n_nu, q),
            )
        )
    return out


_COUNTERS = {
    "affine_X": count_affine,
    "affine_complement": count_affine_complement,
    "projective_X": count_projective,
    "projective_complement": count_projective_complement,
}


def count_one(
    system: PolySystem,
    what: str,
    nu: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> int:
    counter = _COUNTERS.get(what)
    if counter is None:
        raise ValueError(f"unknown count kind {what!r}; expected one of {sorted(_COUNTERS)}")
    return counter(system, nu, budget, workers, impl)


def count_table(
    system: PolySystem,
    what: str,
    nu_max: int,
    budget: Budget | None = None,
    workers: int = 1,
    impl: str | None = None,
) -> CountTable:
    """Counts for nu = 1..nu_max with one budget check per call."""
    counts = {nu: count_one(system, what, nu, budget, workers, impl) for nu in range(1, nu_max + 1)}
    return CountTable(base_q=system.field.order, what=what, counts=counts)
