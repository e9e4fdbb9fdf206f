"""Polynomials, systems, homogenization, and the factored vanishing test."""

import itertools
import random

import pytest

from zetadiv.counting import extension_of
from zetadiv.errors import (
    ArityMismatchError,
    FieldMismatchError,
    NotHomogeneousError,
    ZeroPolynomialError,
)
from zetadiv.field import enumerate_elements, make_field
from zetadiv.poly import MultiPoly, PolySystem, vanishes_on_system

from conftest import expanded_equations


def test_eval_monomial(f5):
    f = MultiPoly.from_terms(f5, 2, [((1, 2), 1)])
    assert f.eval([f5.from_int(2), f5.from_int(3)]) == f5.from_int(3)  # 18 mod 5


def test_eval_at_origin_gives_constant_term(f5):
    f = MultiPoly.from_terms(f5, 2, [((1, 1), 2), ((0, 0), 4)])
    assert f.eval([f5.zero(), f5.zero()]) == f5.from_int(4)


def test_eval_quadric_at_ones(f3):
    f = MultiPoly.from_terms(f3, 3, [((2, 0, 0), 1), ((0, 2, 0), 1), ((0, 0, 2), 1)])
    assert f.eval([f3.one()] * 3).is_zero()


def test_eval_arity_checked(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    with pytest.raises(ArityMismatchError):
        f.eval([f3.one()])


def test_eval_field_checked(f3, f5):
    f = MultiPoly.from_terms(f3, 1, [((1,), 1)])
    with pytest.raises(FieldMismatchError):
        f.eval([f5.one()])


def test_eval_through_embedding(f3):
    f9, emb = extension_of(f3, 2)
    f = MultiPoly.from_terms(f3, 1, [((1,), 2), ((0,), 1)])  # 2x + 1
    t = f9.element((0, 1))
    assert f.eval([t], emb) == f9.from_int(2) * t + f9.one()


def test_vanishes_simple_cases(f3):
    fx = MultiPoly.from_terms(f3, 1, [((1,), 1)])
    system = PolySystem([fx], [[1]])
    assert vanishes_on_system(system, [f3.zero()])
    assert not vanishes_on_system(system, [f3.one()])


def test_vanishes_constant_one_never(f3):
    fx = MultiPoly.from_terms(f3, 1, [((1,), 1)])
    system = PolySystem([fx], [[0]])  # g_1 = 1
    for e in enumerate_elements(f3):
        assert not vanishes_on_system(system, [e])


def test_vanishes_product_column(f3):
    fx = MultiPoly.from_terms(f3, 1, [((1,), 1)])
    fx1 = MultiPoly.from_terms(f3, 1, [((1,), 1), ((0,), -1)])
    system = PolySystem([fx, fx1], [[1], [1]])  # one g = f1 * f2
    assert vanishes_on_system(system, [f3.one()])
    assert vanishes_on_system(system, [f3.zero()])
    assert not vanishes_on_system(system, [f3.from_int(2)])


def _random_poly(rng, field, n_vars, max_degree=3, max_terms=4):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * n_vars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(n_vars)] += 1
        terms.append((tuple(exps), rng.randrange(1, field.order)))
    return MultiPoly.from_terms(field, n_vars, terms)


def test_vanishes_agrees_with_expanded_oracle():
    """Factored test versus explicit expansion, all points, random systems."""
    rng = random.Random(20240811)
    for _ in range(25):
        p, k = rng.choice([(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)])
        field = make_field(p, k)
        n_vars = rng.randint(1, 3)
        r = rng.randint(1, 2)
        R = rng.randint(1, 2)
        polys = []
        while len(polys) < r:
            f = _random_poly(rng, field, n_vars)
            if not f.is_zero() and f.degree >= 1:
                polys.append(f)
        matrix = [[rng.randint(0, 2) for _ in range(R)] for _ in range(r)]
        system = PolySystem(polys, matrix)
        gs = expanded_equations(system)
        for point in itertools.product(enumerate_elements(field), repeat=n_vars):
            expected = all(g.eval(list(point)).is_zero() for g in gs)
            assert vanishes_on_system(system, list(point)) == expected


def test_homogenize_example(f3):
    f = MultiPoly.from_terms(f3, 3, [((1, 1, 0), 1), ((0, 0, 1), 1)])  # x1 x2 + x3
    F = f.homogenize()
    assert F.n_vars == 4
    assert F.terms.keys() == {(0, 1, 1, 0), (1, 0, 0, 1)}  # x1 x2 + x0 x3


def test_homogenize_of_homogeneous_adds_nothing(f3):
    f = MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((0, 2), 2)])
    F = f.homogenize()
    assert all(exps[0] == 0 for exps in F.terms)


def test_homogenize_substitute_one_recovers(f3, f5):
    rng = random.Random(8)
    for field in (f3, f5):
        for _ in range(10):
            f = _random_poly(rng, field, 3)
            if f.is_zero():
                continue
            F = f.homogenize()
            assert F.degree == f.degree
            assert F.is_homogeneous()
            assert F.substitute(0, field.one()) == f


def test_leading_form_is_top_slice(f3):
    f = MultiPoly.from_terms(f3, 3, [((1, 1, 0), 1), ((0, 0, 1), 1)])
    assert f.leading_form().terms.keys() == {(1, 1, 0)}


def test_leading_form_of_homogeneous_is_identity(f3):
    f = MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((1, 1), 2)])
    assert f.leading_form() == f


def test_leading_form_matches_homogenization_at_zero():
    rng = random.Random(9)
    field = make_field(5, 1)
    for _ in range(15):
        f = _random_poly(rng, field, 3)
        if f.is_zero():
            continue
        assert f.homogenize().substitute(0, field.zero()) == f.leading_form()
        lead = f.leading_form()
        assert lead.is_homogeneous()
        assert lead.degree == f.degree


def test_is_homogeneous_examples(f3):
    assert MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((0, 2), 1)]).is_homogeneous()
    assert not MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((0, 1), 1)]).is_homogeneous()
    assert MultiPoly.from_terms(f3, 2, [((1, 1), 2)]).is_homogeneous()


def test_zero_polynomial_is_rejected(f3):
    zero = MultiPoly.zero(f3, 2)
    with pytest.raises(ZeroPolynomialError):
        zero.homogenize()
    with pytest.raises(ZeroPolynomialError):
        zero.leading_form()
    with pytest.raises(ZeroPolynomialError):
        PolySystem([zero], [[1]])


def test_constant_polynomial_is_rejected(f3):
    const = MultiPoly.from_terms(f3, 2, [((0, 0), 2)])
    with pytest.raises(ZeroPolynomialError):
        PolySystem([const], [[1]])


def test_projective_mode_requires_homogeneous(f3):
    f = MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((0, 1), 1)])
    with pytest.raises(NotHomogeneousError):
        PolySystem([f], [[1]], mode="projective")


def test_system_shape_validation(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    with pytest.raises(ValueError):
        PolySystem([f], [[1], [1]])  # extra matrix row
    with pytest.raises(ValueError):
        PolySystem([f], [[-1]])  # negative exponent
    with pytest.raises(ValueError):
        PolySystem([f], [[]])  # empty row


def test_degrees_come_from_polynomials(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    g = MultiPoly.from_terms(f3, 2, [((2, 1), 1), ((0, 1), 2)])
    assert PolySystem([f, g], [[1], [1]]).degrees == (1, 3)


def test_coefficients_reduce_and_cancel(f3):
    f = MultiPoly.from_terms(f3, 1, [((1,), 2), ((1,), 1)])  # 2x + x = 3x = 0
    assert f.is_zero()
