"""Exact arithmetic in prime fields F_p and extension fields F_{p^k}.

Fields are described by a prime p, an extension degree k, and a monic
irreducible modulus of degree k over F_p. Elements are coefficient vectors
in the power basis of the modulus root, always fully reduced. The modulus
is chosen deterministically (lexicographically smallest irreducible), so
every run and every implementation that follows the same rule agrees on
element encodings.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import (
    ExtensionDegreeError,
    FieldMismatchError,
    NoEmbeddingError,
    NotPrimeError,
)


def is_prime(n: int) -> bool:
    """Deterministic trial division; fields here are desk-scale."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- univariate polynomial helpers over F_p --------------------------------
# Coefficient lists are ascending (constant term first) with no trailing
# zeros; the zero polynomial is []. Only used to select and validate moduli.


def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    # f monic of degree >= 1
    r = _ptrim([c % p for c in a])
    df = len(f) - 1
    while len(r) - 1 >= df:
        lead = r[-1]
        shift = len(r) - 1 - df
        if lead:
            for i, c in enumerate(f):
                r[shift + i] = (r[shift + i] - lead * c) % p
        r.pop()  # leading coefficient is zero after the subtraction (f monic)
        _ptrim(r)
    return r


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    conv = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] += ai * bj
    return _pmod(conv, f, p)


def _ppowmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, acc, f, p)
        acc = _pmulmod(acc, acc, f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [c % p for c in a], [c % p for c in b]
    _ptrim(a), _ptrim(b)
    while b:
        if len(b) - 1 >= 1:
            # reduce a mod monic-normalized b
            inv_lead = pow(b[-1], p - 2, p)
            bm = [(c * inv_lead) % p for c in b]
            a, b = b, _pmod(a, bm, p)
        else:
            a, b = b, []
    if a:
        inv_lead = pow(a[-1], p - 2, p)
        a = [(c * inv_lead) % p for c in a]
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Monic f of degree k: irreducible iff x^{p^k} = x mod f and, for every
    prime t | k, gcd(x^{p^{k/t}} - x, f) = 1."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    xq = _ppowmod(x, p**k, f, p)
    if _ptrim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    for t in _prime_factors(k):
        xe = _ppowmod(x, p ** (k // t), f, p)
        diff = [(a - b) % p for a, b in itertools.zip_longest(xe, x, fillvalue=0)]
        g = _pgcd(diff, f, p)
        if len(g) != 1:
            return False
    return True


# -- field and element types ------------------------------------------------


class FiniteField:
    """Immutable description of F_{p^k} with an explicit monic modulus."""

    __slots__ = ("p", "k", "modulus", "_xpow", "_hash")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        if k < 1:
            raise ExtensionDegreeError(f"extension degree must be >= 1, got {k}")
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {k}")
        if not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")
        self.p = p
        self.k = k
        self.modulus = modulus
        # x^m reduced mod modulus for m = 0..2k-2, as coefficient tuples
        xpow = [tuple(1 if i == m else 0 for i in range(k)) for m in range(k)]
        for m in range(k, 2 * k - 1):
            prev = xpow[m - 1]
            shifted = [0] + list(prev)
            lead = shifted.pop()
            reduced = [(shifted[i] - lead * modulus[i]) % p for i in range(k)]
            xpow.append(tuple(reduced))
        self._xpow = tuple(xpow)
        self._hash = hash((p, k, modulus))

    @property
    def order(self) -> int:
        return self.p**self.k

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return self.from_int(1)

    def from_int(self, c: int) -> "FieldElement":
        return FieldElement(self, (c % self.p,) + (0,) * (self.k - 1))

    def element(self, coeffs) -> "FieldElement":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(coeffs)}")
        return FieldElement(self, coeffs)

    def from_index(self, i: int) -> "FieldElement":
        if not 0 <= i < self.order:
            raise ValueError(f"index {i} out of range for field of order {self.order}")
        coeffs = []
        for _ in range(self.k):
            i, c = divmod(i, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteField(p={self.p}, k={self.k}, modulus={list(self.modulus)})"


class FieldElement:
    """Value in a FiniteField; immutable, fully reduced coefficients."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        """Position in the canonical element enumeration (0 is zero, 1 is one)."""
        i = 0
        for c in reversed(self.coeffs):
            i = i * self.field.p + c
        return i

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check_owner(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"operands from {self.field} and {other.field}")

    def __add__(self, other):
        self._check_owner(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other):
        self._check_owner(other)
        p = self.field.p
        return FieldElement(
            self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check_owner(other)
        f = self.field
        k, p = f.k, f.p
        if k == 1:
            return FieldElement(f, ((self.coeffs[0] * other.coeffs[0]) % p,))
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    conv[i + j] += a * b
        out = [0] * k
        for m, v in enumerate(conv):
            if v:
                for idx, r in enumerate(f._xpow[m]):
                    out[idx] += v * r
        return FieldElement(f, tuple(c % p for c in out))

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("exponent must be non-negative; use inv() first")
        result = self.field.one()
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.order - 2)

    def __eq__(self, other):
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"FieldElement({list(self.coeffs)} in GF({self.field.order}))"


@lru_cache(maxsize=None)
def make_field(p: int, k: int) -> FiniteField:
    """F_{p^k} with the lexicographically smallest monic irreducible modulus
    (coefficients compared constant term first). Deterministic across runs."""
    if k < 1:
        raise ExtensionDegreeError(f"extension degree must be >= 1, got {k}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    for low in itertools.product(range(p), repeat=k):
        candidate = list(low) + [1]
        if _is_irreducible(candidate, p):
            return FiniteField(p, k, tuple(candidate))
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


def enumerate_elements(field: FiniteField) -> list[FieldElement]:
    """All q elements in canonical index order: 0 first, 1 second."""
    return [field.from_index(i) for i in range(field.order)]


class Embedding:
    """Field homomorphism F_{p^k} -> F_{p^{km}} fixing F_p, determined by the
    first root (in enumeration order) of the small modulus in the big field."""

    __slots__ = ("domain", "codomain", "root", "_basis_images")

    def __init__(self, domain: FiniteField, codomain: FiniteField, root: FieldElement):
        self.domain = domain
        self.codomain = codomain
        self.root = root
        images = [codomain.one()]
        for _ in range(1, domain.k):
            images.append(images[-1] * root)
        self._basis_images = tuple(images)

    def __call__(self, elem: FieldElement) -> FieldElement:
        if elem.field != self.domain:
            raise FieldMismatchError(f"element of {elem.field} passed to embedding of {self.domain}")
        out = self.codomain.zero()
        for c, img in zip(elem.coeffs, self._basis_images):
            if c:
                out = out + self.codomain.from_int(c) * img
        return out

    def __repr__(self):
        return f"Embedding(GF({self.domain.order}) -> GF({self.codomain.order}))"


def embed(small: FiniteField, big: FiniteField) -> Embedding:
    """Embedding determined by exhaustive root search, deterministic because
    elements are scanned in enumeration order."""
    if small.p != big.p or big.k % small.k != 0:
        raise NoEmbeddingError(
            f"no embedding GF({small.order}) -> GF({big.order}): "
            "degree must divide and characteristic must match"
        )
    mod_coeffs = [big.from_int(c) for c in small.modulus]
    for i in range(big.order):
        x = big.from_index(i)
        acc = big.zero()
        power = big.one()
        for c in mod_coeffs:
            if not c.is_zero():
                acc = acc + c * power
            power = power * x
        if acc.is_zero():
            return Embedding(small, big, x)
    raise AssertionError("unreachable: a root exists whenever the degree divides")
