"""Divisibility exponents attached to a degree profile (n; d_1..d_r).

Everything here is exact integer arithmetic: ceilings and floors are done
with integer division (floating point rounds the wrong way for negative
numerators and is banned in this module).
"""

from __future__ import annotations

from dataclasses import dataclass


def _ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a/b for b > 0, valid for negative a."""
    return -((-a) // b)


def _validate(n: int, degrees, min_n: int = 1) -> tuple[int, ...]:
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise ValueError("at least one degree is required")
    if any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be >= 1, got {degrees}")
    if n < min_n:
        raise ValueError(f"n must be >= {min_n}, got {n}")
    return degrees


def _mu_raw(n: int, total: int, top: int) -> int:
    return max(0, _ceil_div(n - total, top))


def mu(n: int, degrees) -> int:
    """Least non-negative integer >= (n - sum(d_i)) / max(d_i).

    Accepts n = 0 (empty variable profile), where the value is 0 because the
    numerator is negative.
    """
    degrees = _validate(n, degrees, min_n=0)
    return _mu_raw(n, sum(degrees), max(degrees))


def lambda_(n: int, degrees) -> int:
    """Least non-negative integer >= (n - sum(d_i)) / sum(d_i); the weaker
    exponent obtained by inclusion-exclusion over the sum of degrees."""
    degrees = _validate(n, degrees, min_n=0)
    total = sum(degrees)
    return max(0, _ceil_div(n - total, total))


def mu_j(n: int, degrees, j: int) -> int:
    """Shifted exponent j + mu(n - j; d), defined for 0 <= j <= n."""
    degrees = _validate(n, degrees)
    if not 0 <= j <= n:
        raise ValueError(f"j must satisfy 0 <= j <= n = {n}, got {j}")
    return j + _mu_raw(n - j, sum(degrees), max(degrees))


def kappa(n: int, degrees) -> int:
    """Floor-form exponent max(0, floor((n - d_2 - ... - d_r) / d_1)) after
    renumbering so d_1 >= d_2 >= ... >= d_r. Callers never pre-sort."""
    degrees = sorted(_validate(n, degrees), reverse=True)
    return max(0, (n - sum(degrees[1:])) // degrees[0])


def q_adic_order(value: int, q: int) -> int | None:
    """Largest m with q^m dividing value; None means infinite (value = 0)."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if value == 0:
        return None
    value = abs(value)
    m = 0
    while value % q == 0:
        value //= q
        m += 1
    return m


@dataclass(frozen=True)
class BoundsReport:
    """All exponents for one degree profile, so reports are self-contained."""

    n: int
    degrees: tuple[int, ...]
    mu: int
    lambda_: int
    mu_j: tuple[int, ...]  # j = 0..n
    kappa: int


def bounds_report(n: int, degrees) -> BoundsReport:
    degrees = _validate(n, degrees)
    return BoundsReport(
        n=n,
        degrees=degrees,
        mu=mu(n, degrees),
        lambda_=lambda_(n, degrees),
        mu_j=tuple(mu_j(n, degrees, j) for j in range(n + 1)),
        kappa=kappa(n, degrees),
    )
