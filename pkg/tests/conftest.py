"""Shared fixtures and independent counting oracles.

The oracles deliberately take a different route from the library: they expand
every g_j into an explicit polynomial by repeated multiplication, then
evaluate it with FieldElement arithmetic at every point of a plain
itertools enumeration. No index tables, no vanishing masks, no kernels.
"""

from __future__ import annotations

import itertools

import pytest

from zetadiv.counting import extension_of
from zetadiv.field import enumerate_elements, make_field
from zetadiv.poly import MultiPoly, PolySystem


def expanded_equations(system: PolySystem) -> list[MultiPoly]:
    """The g_j as explicit polynomials: g_j = prod_i f_i^(a_ij)."""
    out = []
    for j in range(system.n_equations):
        one = MultiPoly.from_terms(system.field, system.n_vars, [((0,) * system.n_vars, 1)])
        g = one
        for i, f in enumerate(system.polys):
            g = g * f ** system.exponents[i][j]
        out.append(g)
    return out


def oracle_count_affine(system: PolySystem, nu: int = 1) -> int:
    """Brute-force affine count via expanded equations."""
    big, emb = extension_of(system.field, nu)
    gs = expanded_equations(system)
    elements = enumerate_elements(big)
    count = 0
    for point in itertools.product(elements, repeat=system.n_vars):
        if all(g.eval(list(point), emb).is_zero() for g in gs):
            count += 1
    return count


def oracle_projective_points(big, n_vars):
    """Normalized representatives of P^(n_vars-1): first nonzero coordinate 1."""
    elements = enumerate_elements(big)
    zero, one = big.zero(), big.one()
    for lead in range(n_vars):
        for tail in itertools.product(elements, repeat=n_vars - lead - 1):
            yield [zero] * lead + [one] + list(tail)


def oracle_count_projective(system: PolySystem, nu: int = 1) -> int:
    big, emb = extension_of(system.field, nu)
    gs = expanded_equations(system)
    count = 0
    for point in oracle_projective_points(big, system.n_vars):
        if all(g.eval(point, emb).is_zero() for g in gs):
            count += 1
    return count


@pytest.fixture(scope="session")
def f2():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def f3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def f5():
    return make_field(5, 1)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def quadric_system(f3):
    """f = x1^2 + x2^2 + x3^2 over F_3, a = [[1]]."""
    f = MultiPoly.from_terms(f3, 3, [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)])
    return PolySystem([f], [[1]])
