"""Sparse multivariate polynomials over a finite field, and systems of
equations g_j = prod_i f_i^{a_ij} given by base polynomials plus an exponent
matrix. The g_j are never expanded: over a field, g_j vanishes at a point iff
some f_i with a positive exponent does.
"""

from __future__ import annotations

from .errors import (
    ArityMismatchError,
    FieldMismatchError,
    NotHomogeneousError,
    ZeroPolynomialError,
)
from .field import Embedding, FieldElement, FiniteField


class MultiPoly:
    """Sparse polynomial: map from exponent vectors to nonzero coefficients."""

    __slots__ = ("field", "n_vars", "terms")

    def __init__(self, field: FiniteField, n_vars: int, terms: dict):
        if n_vars < 1:
            raise ValueError("polynomials need at least one variable")
        clean = {}
        for exps, coeff in sorted(terms.items()):
            exps = tuple(int(e) for e in exps)
            if len(exps) != n_vars:
                raise ArityMismatchError(
                    f"exponent vector {exps} has length {len(exps)}, expected {n_vars}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if not isinstance(coeff, FieldElement):
                raise TypeError("coefficients must be FieldElement values")
            if coeff.field != field:
                raise FieldMismatchError("coefficient from a different field")
            if not coeff.is_zero():
                clean[exps] = coeff
        self.field = field
        self.n_vars = n_vars
        self.terms = clean

    @classmethod
    def from_terms(cls, field: FiniteField, n_vars: int, items) -> "MultiPoly":
        """Build from (exponents, coefficient) pairs; coefficients may be
        ints (reduced mod p), coefficient sequences, or FieldElement values.
        Repeated exponent vectors are summed."""
        acc: dict = {}
        for exps, coeff in items:
            exps = tuple(int(e) for e in exps)
            if isinstance(coeff, FieldElement):
                c = coeff
            elif isinstance(coeff, int):
                c = field.from_int(coeff)
            else:
                c = field.element(coeff)
            acc[exps] = acc[exps] + c if exps in acc else c
        return cls(field, n_vars, acc)

    @classmethod
    def zero(cls, field: FiniteField, n_vars: int) -> "MultiPoly":
        return cls(field, n_vars, {})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """Max total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        totals = {sum(e) for e in self.terms}
        return len(totals) <= 1

    def eval(self, point, embedding: Embedding | None = None) -> FieldElement:
        """Exact value by term summation with per-variable power caching.

        With an embedding, coefficients are mapped into its codomain and the
        point must live there; otherwise the point lives in this field.
        """
        if len(point) != self.n_vars:
            raise ArityMismatchError(f"point has {len(point)} coordinates, expected {self.n_vars}")
        target = embedding.codomain if embedding is not None else self.field
        if embedding is not None and embedding.domain != self.field:
            raise FieldMismatchError("embedding domain does not match the coefficient field")
        for x in point:
            if not isinstance(x, FieldElement) or x.field != target:
                raise FieldMismatchError(f"point coordinate not in GF({target.order})")
        powers: list[list[FieldElement]] = [[target.one()] for _ in range(self.n_vars)]
        acc = target.zero()
        for exps, coeff in self.terms.items():
            val = embedding(coeff) if embedding is not None else coeff
            for v, e in enumerate(exps):
                if e:
                    cache = powers[v]
                    while len(cache) <= e:
                        cache.append(cache[-1] * point[v])
                    val = val * cache[e]
            acc = acc + val
        return acc

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        acc = dict(self.terms)
        for exps, c in other.terms.items():
            acc[exps] = acc[exps] + c if exps in acc else c
        return MultiPoly(self.field, self.n_vars, acc)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check_compatible(other)
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                acc[exps] = acc[exps] + c if exps in acc else c
        return MultiPoly(self.field, self.n_vars, acc)

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("polynomial exponent must be non-negative")
        result = MultiPoly.from_terms(self.field, self.n_vars, [((0,) * self.n_vars, 1)])
        for _ in range(e):
            result = result * self
        return result

    def _check_compatible(self, other: "MultiPoly") -> None:
        if not isinstance(other, MultiPoly):
            raise TypeError("expected MultiPoly")
        if other.field != self.field:
            raise FieldMismatchError("polynomials over different fields")
        if other.n_vars != self.n_vars:
            raise ArityMismatchError("polynomials in different numbers of variables")

    def homogenize(self) -> "MultiPoly":
        """Homogeneous lift of the same degree, new variable in position 0,
        so that substituting 1 for it recovers this polynomial."""
        if self.is_zero():
            raise ZeroPolynomialError("cannot homogenize the zero polynomial")
        d = self.degree
        terms = {(d - sum(exps),) + exps: c for exps, c in self.terms.items()}
        return MultiPoly(self.field, self.n_vars + 1, terms)

    def leading_form(self) -> "MultiPoly":
        """Sum of the terms of maximal total degree."""
        if self.is_zero():
            raise ZeroPolynomialError("the zero polynomial has no leading form")
        d = self.degree
        terms = {exps: c for exps, c in self.terms.items() if sum(exps) == d}
        return MultiPoly(self.field, self.n_vars, terms)

    def substitute(self, var: int, value: FieldElement) -> "MultiPoly":
        """Symbolic substitution of one variable, dropping it from the arity."""
        if not 0 <= var < self.n_vars:
            raise ValueError(f"variable {var} out of range")
        if value.field != self.field:
            raise FieldMismatchError("substituted value from a different field")
        acc: dict = {}
        for exps, c in self.terms.items():
            coeff = c * value ** exps[var]
            rest = exps[:var] + exps[var + 1 :]
            if rest in acc:
                acc[rest] = acc[rest] + coeff
            else:
                acc[rest] = coeff
        return MultiPoly(self.field, self.n_vars - 1, acc)

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.field == other.field
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.n_vars, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    def __repr__(self):
        if self.is_zero():
            return "MultiPoly(0)"
        parts = []
        for exps, c in self.terms.items():
            mono = "*".join(f"x{v + 1}^{e}" if e > 1 else f"x{v + 1}" for v, e in enumerate(exps) if e)
            parts.append(f"{list(c.coeffs)}*{mono}" if mono else f"{list(c.coeffs)}")
        return f"MultiPoly({' + '.join(parts)} over GF({self.field.order}))"


class PolySystem:
    """Base polynomials f_1..f_r plus an r x R exponent matrix a, defining the
    equations g_j = prod_i f_i^{a_ij}. In projective mode every f_i must be
    homogeneous. Degrees are read off the polynomials, never supplied."""

    __slots__ = ("polys", "exponents", "mode")

    def __init__(self, polys, exponents, mode: str = "affine"):
        polys = tuple(polys)
        if not polys:
            raise ValueError("a system needs at least one polynomial")
        field, n_vars = polys[0].field, polys[0].n_vars
        for f in polys:
            if f.field != field:
                raise FieldMismatchError("system polynomials over different fields")
            if f.n_vars != n_vars:
                raise ArityMismatchError("system polynomials in different numbers of variables")
            if f.is_zero() or f.degree < 1:
                raise ZeroPolynomialError("every f_i must have degree >= 1")
        exponents = tuple(tuple(int(a) for a in row) for row in exponents)
        if len(exponents) != len(polys):
            raise ValueError(f"exponent matrix has {len(exponents)} rows for {len(polys)} polynomials")
        widths = {len(row) for row in exponents}
        if len(widths) != 1 or widths == {0}:
            raise ValueError("exponent matrix rows must share one positive length")
        if any(a < 0 for row in exponents for a in row):
            raise ValueError("exponents a_ij must be non-negative")
        if mode not in ("affine", "projective"):
            raise ValueError(f"unknown mode {mode!r}")
        if mode == "projective":
            for f in polys:
                if not f.is_homogeneous():
                    raise NotHomogeneousError("projective mode requires homogeneous polynomials")
        self.polys = polys
        self.exponents = exponents
        self.mode = mode

    @property
    def field(self) -> FiniteField:
        return self.polys[0].field

    @property
    def n_vars(self) -> int:
        return self.polys[0].n_vars

    @property
    def r(self) -> int:
        return len(self.polys)

    @property
    def n_equations(self) -> int:
        return len(self.exponents[0])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.polys)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.exponents)

    def column_support(self, j: int) -> tuple[int, ...]:
        """Indices i with a_ij > 0; empty means g_j is the constant 1."""
        return tuple(i for i, row in enumerate(self.exponents) if row[j] > 0)

    def has_constant_equation(self) -> bool:
        return any(not self.column_support(j) for j in range(self.n_equations))

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.polys)

    def __repr__(self):
        return (
            f"PolySystem(r={self.r}, R={self.n_equations}, n={self.n_vars}, "
            f"degrees={list(self.degrees)}, GF({self.field.order}), {self.mode})"
        )


def vanishes_on_system(system: PolySystem, point, embedding: Embedding | None = None) -> bool:
    """True iff every g_j vanishes at the point. Computed without expanding
    the g_j: over a field, g_j(x) = 0 iff f_i(x) = 0 for some i with a_ij > 0.
    An all-zero column is the constant 1 and never vanishes."""
    zero = [f.eval(point, embedding).is_zero() for f in system.polys]
    for j in range(system.n_equations):
        support = system.column_support(j)
        if not any(zero[i] for i in support):
            return False
    return True
