"""Exact zeta reconstruction from a point-count table.

The count sequence N_nu is the signed power-sum sequence of the reciprocal
zeros and poles of the zeta function, so it satisfies a linear recurrence
whose connection polynomial has those reciprocal roots, each once. The
pipeline is: fit the minimal recurrence (withholding guard terms, which must
then be predicted exactly), split the connection polynomial into factors by
the integer multiplicity of their roots, and assemble numerator and
denominator from the sign of each multiplicity. Everything is exact rational
arithmetic; floating point is banned in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .counting import CountTable
from .errors import (
    BadConstantTermError,
    NonIntegralCoefficientsError,
)
from .exponents import q_adic_order

# -- exact polynomial helpers on ascending Fraction coefficient lists -------


def _trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _deg(a: list[Fraction]) -> int:
    return len(a) - 1  # zero polynomial is [] with degree -1


def _mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _scale(a, s: Fraction):
    return _trim([x * s for x in a])


def _sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    db = _deg(b)
    lead = b[-1]
    while _deg(_trim(r)) >= db:
        shift = _deg(r) - db
        coef = r[-1] / lead
        q[shift] = coef
        for i, y in enumerate(b):
            r[shift + i] -= coef * y
        r.pop()
        _trim(r)
    return _trim(q), _trim(r)


def _gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        a = _scale(a, 1 / a[-1])  # monic
    return a


def _derivative(a):
    return _trim([i * x for i, x in enumerate(a)][1:])


def _inverse_mod(a, mod):
    """x with a*x = 1 mod `mod`; requires gcd(a, mod) constant."""
    r0, r1 = _trim(list(mod)), _trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    if _deg(r0) != 0:
        raise NonIntegralCoefficientsError("unexpected common factor while inverting")
    return _scale(s0, 1 / r0[0])


def _power_sums(coeffs, count: int) -> list:
    """Power sums of the reciprocal roots of 1 + c_1 T + ... (Newton's
    identities); exact over whatever number type the coefficients use."""
    deg = len(coeffs) - 1
    p: list = []
    for m in range(1, count + 1):
        acc = -m * coeffs[m] if m <= deg else 0
        for i in range(1, min(m - 1, deg) + 1):
            acc -= coeffs[i] * p[m - 1 - i]
        p.append(acc)
    return p


# -- contract types ----------------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial in T with constant term 1, so its reciprocal roots
    are algebraic integers (the reversed polynomial is monic over Z)."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs):
        coeffs = list(int(c) for c in coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or coeffs[0] != 1:
            raise BadConstantTermError(f"constant term must be 1, got {coeffs[:1] or [0]}")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def reciprocal_root_power_sums(self, count: int) -> list[int]:
        return _power_sums(self.coeffs, count)

    def scale_variable(self, factor: int) -> "IntPoly":
        """P(factor * T): multiplies every reciprocal root by factor."""
        return IntPoly([c * factor**i for i, c in enumerate(self.coeffs)])

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(out)

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mag = "T" if i == 1 else f"T^{i}"
                coeff = "" if abs(c) == 1 else str(abs(c))
                parts.append(("- " if c < 0 else "+ ") + coeff + mag)
        return " ".join(parts)


@dataclass(frozen=True)
class ZetaFunction:
    """Rational zeta function in lowest terms, both constant terms 1."""

    numerator: IntPoly
    denominator: IntPoly

    def expand_counts(self, nu_max: int) -> list[int]:
        """The counts N_nu this zeta function encodes: power sums of the
        denominator's reciprocal roots minus the numerator's."""
        pa = self.numerator.reciprocal_root_power_sums(nu_max)
        pb = self.denominator.reciprocal_root_power_sums(nu_max)
        return [b - a for a, b in zip(pa, pb)]

    def __str__(self):
        return f"({self.numerator}) / ({self.denominator})"


@dataclass(frozen=True)
class RecurrenceFit:
    status: str  # "stabilized" | "inconclusive"
    connection: tuple[Fraction, ...] | None  # 1, c_1, ..., c_order
    order: int
    fitted_terms: int
    guard_terms_checked: int


@dataclass(frozen=True)
class ReconstructionOutcome:
    status: str  # "stabilized" | "inconclusive"
    zeta: ZetaFunction | None
    recurrence_order: int
    guard_terms_checked: int


# -- operations --------------------------------------------------------------


def signed_eigenvalue_sums_from_counts(table: CountTable) -> list[int]:
    """The count sequence itself, validated gap-free: N_nu is already the
    signed power-sum sequence of the Frobenius eigenvalues."""
    return table.sequence()


def _berlekamp_massey(seq: list[Fraction]) -> list[Fraction]:
    """Minimal connection polynomial [1, c_1, .., c_L] with
    sum_{i=0..L} c_i * s_{n-i} = 0 for all L <= n < len(seq)."""
    C = [Fraction(1)]
    B = [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n, s_n in enumerate(seq):
        d = s_n
        for i in range(1, L + 1):
            d += C[i] * seq[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        shifted = [Fraction(0)] * m + [coef * x for x in B]
        if 2 * L <= n:
            prev = list(C)
            if len(shifted) > len(C):
                C = C + [Fraction(0)] * (len(shifted) - len(C))
            for i, x in enumerate(shifted):
                C[i] -= x
            L = n + 1 - L
            B = prev
            b = d
            m = 1
        else:
            if len(shifted) > len(C):
                C = C + [Fraction(0)] * (len(shifted) - len(C))
            for i, x in enumerate(shifted):
                C[i] -= x
            m += 1
    C = C + [Fraction(0)] * (L + 1 - len(C))
    return C[: L + 1]


def minimal_recurrence(seq, guard: int) -> RecurrenceFit:
    """Fit the minimal linear recurrence on all but the final `guard` terms.

    Stabilized means: the fit had at least 2*order terms to work with, and it
    predicts every withheld guard term exactly. Inconclusive is an honest
    outcome, not an error.
    """
    if guard < 1:
        raise ValueError("guard must be a positive integer")
    seq = [int(x) for x in seq]
    fitted = len(seq) - guard
    if fitted < 1:
        return RecurrenceFit("inconclusive", None, 0, max(fitted, 0), guard)
    conn = _berlekamp_massey([Fraction(x) for x in seq[:fitted]])
    order = len(conn) - 1
    if 2 * order > fitted:
        return RecurrenceFit("inconclusive", tuple(conn), order, fitted, guard)
    for n in range(fitted, len(seq)):
        predicted = -sum(conn[i] * seq[n - i] for i in range(1, order + 1))
        if predicted != seq[n]:
            return RecurrenceFit("inconclusive", tuple(conn), order, fitted, guard)
    return RecurrenceFit("stabilized", tuple(conn), order, fitted, guard)


def _multiplicity_split(p_t: list[Fraction], c_t: list[Fraction]):
    """Factor c_t = prod f_m over integer multiplicities m, where the
    reciprocal roots of f_m are exactly those with residue multiplicity m in
    the generating function p_t / c_t. Raises when the multiplicities are not
    integers (the counts then admit no rational zeta function)."""
    ell = _deg(c_t)
    # reversal: chat has the reciprocal roots of c_t as ordinary roots, monic
    chat = list(reversed(c_t))
    phat = list(reversed(p_t + [Fraction(0)] * (ell + 1 - len(p_t))))
    dhat = [Fraction(0)] * (ell + 1)
    for i in range(1, ell + 1):
        dhat[ell - i] = -i * c_t[i]
    dhat = _trim(dhat)

    # T2 = sum of squared multiplicities, an exact trace computation: bounds
    # every |m| and rejects non-integral structure early.
    mu_hat = _divmod(_mul(phat, _inverse_mod(dhat, chat)), chat)[1]
    sq = _divmod(_mul(mu_hat, mu_hat), chat)[1]
    sums = [Fraction(ell)] + _power_sums(c_t, ell - 1 if ell > 1 else 0)
    t2 = sum((sq[j] if j < len(sq) else Fraction(0)) * sums[j] for j in range(ell))
    if t2.denominator != 1 or t2 < ell:
        raise NonIntegralCoefficientsError(
            f"eigenvalue multiplicities are not integers (sum of squares {t2})"
        )
    bound = isqrt(int(t2))

    tc_prime = [Fraction(0)] + [i * c_t[i] for i in range(1, ell + 1)]  # T * c'(T)
    factors: list[tuple[int, list[Fraction]]] = []
    remaining = ell
    for mag in range(1, bound + 1):
        for m in (mag, -mag):
            h = [a + m * b for a, b in zip(p_t + [Fraction(0)] * (ell + 1 - len(p_t)), tc_prime)]
            f = _gcd(c_t, h)
            if _deg(f) >= 1:
                f = _scale(f, 1 / f[0])  # normalize constant term to 1
                factors.append((m, f))
                remaining -= _deg(f)
        if remaining == 0:
            break
    product = [Fraction(1)]
    for _, f in factors:
        product = _mul(product, f)
    if product != c_t:
        raise NonIntegralCoefficientsError(
            "connection polynomial does not split into integer-multiplicity factors"
        )
    return factors


def _to_intpoly(coeffs: list[Fraction]) -> IntPoly:
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise NonIntegralCoefficientsError(f"non-integral zeta coefficient {c}")
        out.append(c.numerator)
    return IntPoly(out or [1])


def zeta_from_recurrence(fit: RecurrenceFit, seq) -> ZetaFunction:
    """Assemble Z(T) with T * Z'/Z = sum N_nu T^nu from a stabilized
    recurrence, reduced to lowest terms with integer coefficients, and
    validated by re-expanding against every supplied count."""
    if fit.status != "stabilized":
        raise ValueError("zeta reconstruction needs a stabilized recurrence")
    seq = [int(x) for x in seq]
    if fit.order == 0:
        zeta = ZetaFunction(IntPoly([1]), IntPoly([1]))
        _validate_roundtrip(zeta, seq)
        return zeta

    conn = [Fraction(x) for x in fit.connection]
    ell = fit.order
    s = [Fraction(0)] + [Fraction(x) for x in seq]  # S(T) = sum N_nu T^nu
    p = [sum(conn[i] * s[k - i] for i in range(0, min(k, ell) + 1)) for k in range(ell + 1)]
    p = _trim(p)

    g = _gcd(p, conn)
    p_t = _divmod(p, g)[0]
    c_t = _divmod(list(conn), g)[0]
    unit = c_t[0]
    if unit == 0:
        raise NonIntegralCoefficientsError("reduced connection polynomial lost its unit term")
    p_t = _scale(p_t, 1 / unit)
    c_t = _scale(c_t, 1 / unit)

    if not p_t:
        # the generating function is 0 but the order was positive: impossible
        # for a minimal fit; guarded for completeness
        raise NonIntegralCoefficientsError("empty generating function with positive order")
    if _deg(p_t) > _deg(c_t) or _deg(c_t) == 0:
        raise NonIntegralCoefficientsError(
            "counts have a polynomial tail; no rational zeta function matches"
        )
    if _deg(_gcd(c_t, _derivative(c_t))) != 0:
        raise NonIntegralCoefficientsError(
            "repeated recurrence roots: counts admit no rational zeta function"
        )

    numerator = [Fraction(1)]
    denominator = [Fraction(1)]
    for m, f in _multiplicity_split(p_t, c_t):
        for _ in range(abs(m)):
            if m > 0:
                denominator = _mul(denominator, f)
            else:
                numerator = _mul(numerator, f)
    zeta = ZetaFunction(_to_intpoly(numerator), _to_intpoly(denominator))
    _validate_roundtrip(zeta, seq)
    return zeta


def _validate_roundtrip(zeta: ZetaFunction, seq: list[int]) -> None:
    if zeta.expand_counts(len(seq)) != seq:
        raise NonIntegralCoefficientsError(
            "reconstructed zeta function fails to reproduce the input counts"
        )


def reconstruct_zeta(seq, guard: int = 2) -> ReconstructionOutcome:
    """counts -> minimal recurrence -> zeta, with guard-term stabilization."""
    fit = minimal_recurrence(seq, guard)
    if fit.status != "stabilized":
        return ReconstructionOutcome("inconclusive", None, fit.order, guard)
    zeta = zeta_from_recurrence(fit, seq)
    return ReconstructionOutcome("stabilized", zeta, fit.order, guard)


def uniform_divisibility_order(poly: IntPoly, q: int) -> int | None:
    """Largest m with q^(i*m) dividing c_i for every i >= 1; equivalently the
    largest m such that every reciprocal root is divisible by q^m as an
    algebraic integer. None means infinite (the constant polynomial 1)."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    best: int | None = None
    for i, c in enumerate(poly.coeffs):
        if i == 0 or c == 0:
            continue
        allowed = q_adic_order(c, q) // i
        best = allowed if best is None else min(best, allowed)
    return best


@dataclass(frozen=True)
class TheoremVerdict:
    """Divisibility verdict for a zeta function against one exponent."""

    passed: bool
    exponent: int
    numerator_order: int | None  # None = infinite
    denominator_order: int | None


def verify_theorem(zeta: ZetaFunction, q: int, exponent: int) -> TheoremVerdict:
    """Pass iff every reciprocal zero and pole of the zeta function in lowest
    terms is divisible by q^exponent as an algebraic integer, through the
    coefficient criterion on numerator and denominator."""
    num_order = uniform_divisibility_order(zeta.numerator, q)
    den_order = uniform_divisibility_order(zeta.denominator, q)
    ok = all(o is None or o >= exponent for o in (num_order, den_order))
    return TheoremVerdict(
        passed=ok,
        exponent=exponent,
        numerator_order=num_order,
        denominator_order=den_order,
    )
