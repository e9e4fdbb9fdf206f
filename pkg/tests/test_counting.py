"""Counting operations against the brute-force expansion oracle, plus the
count-level identities and the divisibility checker."""

import random

import pytest

from zetadiv.counting import (
    Budget,
    CountTable,
    cone_identity_check,
    count_affine,
    count_affine_complement,
    count_projective,
    count_projective_complement,
    count_table,
    divisibility_check,
    excision_identity_check,
    extension_of,
    inclusion_exclusion_check,
    projective_space_size,
)
from zetadiv.errors import (
    BudgetExceededError,
    ConstantEquationError,
    MissingTermError,
    NotHomogeneousError,
    RequiresSingleEquationError,
)
from zetadiv.exponents import mu
from zetadiv.harness import build_system, random_instance
from zetadiv.poly import MultiPoly, PolySystem

from conftest import oracle_count_affine, oracle_count_projective


def test_quadric_affine_count_matches_oracle(quadric_system):
    assert oracle_count_affine(quadric_system, 1) == 9
    assert count_affine(quadric_system, 1) == 9
    # Chevalley-Warning scale divisibility: mu(3; [2]) = 1 and 3 | 9
    assert 9 % 3 ** mu(3, [2]) == 0


def test_quadric_complement(quadric_system):
    assert count_affine_complement(quadric_system, 1) == 27 - 9 == 18


def test_constant_column_empty_scheme(quadric_system, f3):
    empty = PolySystem(quadric_system.polys, [[0]])
    assert count_affine(empty, 1) == 0
    assert count_affine_complement(empty, 1) == 27


def test_line_in_plane(f2):
    f = MultiPoly.from_terms(f2, 2, [((1, 0), 1)])
    system = PolySystem([f], [[1]])
    assert count_affine(system, 1) == 2


def test_quadric_projective(f3, quadric_system):
    proj = PolySystem(quadric_system.polys, [[1]], mode="projective")
    assert oracle_count_projective(proj, 1) == 4
    assert count_projective(proj, 1) == 4
    assert count_projective_complement(proj, 1) == 13 - 4 == 9
    # the projective complement carries the predicted divisibility
    assert 9 % 3 ** mu(3, [2]) == 0


def test_projective_space_sizes(f3):
    assert projective_space_size(3, 3) == 13
    empty = PolySystem(
        [MultiPoly.from_terms(f3, 3, [((2, 0, 0), 1)])], [[0]], mode="projective"
    )
    assert count_projective(empty, 1) == 0
    assert count_projective_complement(empty, 1) == 13


def test_linear_form_in_p1(f5):
    f = MultiPoly.from_terms(f5, 2, [((1, 0), 1)])
    system = PolySystem([f], [[1]], mode="projective")
    assert count_projective(system, 1) == 1


def test_projective_requires_homogeneous(f3):
    f = MultiPoly.from_terms(f3, 2, [((2, 0), 1), ((0, 1), 1)])
    system = PolySystem([f], [[1]])  # affine mode accepts it
    with pytest.raises(NotHomogeneousError):
        count_projective(system, 1)


def test_extension_counts_match_oracle(quadric_system):
    assert count_affine(quadric_system, 2) == oracle_count_affine(quadric_system, 2) == 81


def test_projective_extension_matches_oracle(f2):
    f = MultiPoly.from_terms(f2, 3, [((2, 0, 0), 1), ((1, 1, 0), 1), ((0, 0, 2), 1)])
    system = PolySystem([f], [[1]], mode="projective")
    assert count_projective(system, 2) == oracle_count_projective(system, 2)


def test_cone_identity_quadric(quadric_system):
    proj = PolySystem(quadric_system.polys, [[1]], mode="projective")
    for nu in (1, 2):
        res = cone_identity_check(proj, nu)
        assert res.ok
    res1 = cone_identity_check(proj, 1)
    assert (res1.affine_count, res1.projective_count) == (9, 4)


def test_cone_identity_linear_hyperplane(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    system = PolySystem([f], [[1]], mode="projective")
    res = cone_identity_check(system, 1)
    assert res.ok and res.affine_count == 3  # q^(n-1) telescopes


def test_cone_identity_rejects_constant_equation(quadric_system):
    empty = PolySystem(quadric_system.polys, [[0]], mode="projective")
    with pytest.raises(ConstantEquationError):
        cone_identity_check(empty, 1)


def test_excision_line(f3):
    f = MultiPoly.from_terms(f3, 1, [((1,), 1)])
    system = PolySystem([f], [[1]])
    res = excision_identity_check(system, 1)
    assert res.ok
    assert res.affine_complement == 2
    assert res.projective_complement == 3  # |P^1| - 1 = 4 - 1
    assert res.leading_complement == 1  # |P^0| - 0


def test_excision_quadric(quadric_system):
    res = excision_identity_check(quadric_system, 1)
    assert res.ok and res.affine_complement == 18


def test_excision_mixed_degrees_oracle(f2):
    # f = x1 x2 + x3 over F_2: all three sides enumerated independently
    f = MultiPoly.from_terms(f2, 3, [((1, 1, 0), 1), ((0, 0, 1), 1)])
    system = PolySystem([f], [[1]])
    res = excision_identity_check(system, 1)
    assert res.ok
    big, _ = extension_of(f2, 1)
    assert res.affine_complement == 8 - oracle_count_affine(system, 1)
    hom = PolySystem([f.homogenize()], [[1]], mode="projective")
    lead = PolySystem([f.leading_form()], [[1]], mode="projective")
    assert res.projective_complement == projective_space_size(2, 4) - oracle_count_projective(hom, 1)
    assert res.leading_complement == projective_space_size(2, 3) - oracle_count_projective(lead, 1)


def test_excision_needs_single_equation(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    g = MultiPoly.from_terms(f3, 2, [((0, 1), 1)])
    system = PolySystem([f, g], [[1, 0], [0, 1]])
    with pytest.raises(RequiresSingleEquationError):
        excision_identity_check(system, 1)


def test_inclusion_exclusion_two_axes(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    g = MultiPoly.from_terms(f3, 2, [((0, 1), 1)])
    system = PolySystem([f, g], [[1, 0], [0, 1]])
    res = inclusion_exclusion_check(system, 1)
    assert res.ok
    assert res.lhs == 8
    assert dict(res.subset_terms) == {(0,): 6, (1,): 6, (0, 1): 4}


def test_inclusion_exclusion_idempotent_columns(f3):
    f = MultiPoly.from_terms(f3, 2, [((1, 0), 1)])
    system = PolySystem([f], [[1, 1]])  # g_1 = g_2
    res = inclusion_exclusion_check(system, 1)
    assert res.ok
    assert res.lhs == res.subset_terms[0][1]  # telescopes to |U_1|


def test_inclusion_exclusion_random_r3(f2):
    rng = random.Random(77)
    for _ in range(5):
        polys = []
        while len(polys) < 3:
            terms = []
            for _ in range(rng.randint(1, 3)):
                exps = [0, 0, 0]
                for _ in range(rng.randint(1, 2)):
                    exps[rng.randrange(3)] += 1
                terms.append((tuple(exps), 1))
            f = MultiPoly.from_terms(f2, 3, terms)
            if not f.is_zero() and f.degree >= 1:
                polys.append(f)
        matrix = [[rng.randint(0, 1) for _ in range(3)] for _ in range(3)]
        system = PolySystem(polys, matrix)
        assert inclusion_exclusion_check(system, 1).ok


def test_inclusion_exclusion_needs_two_columns(quadric_system):
    with pytest.raises(RequiresSingleEquationError):
        inclusion_exclusion_check(quadric_system, 1)


def test_complement_plus_count_is_space(f5):
    rng = random.Random(5150)
    for _ in range(6):
        system = build_system(random_instance(rng))
        big, _ = extension_of(system.field, 1)
        total = big.order**system.n_vars
        assert count_affine(system, 1) + count_affine_complement(system, 1) == total


def test_divisibility_check_examples():
    table = CountTable(base_q=3, what="affine_X", counts={1: 9})
    [rec] = divisibility_check(table, 1)
    assert rec.divisible and rec.order == 2

    table = CountTable(base_q=3, what="affine_X", counts={1: 0})
    [rec] = divisibility_check(table, 5)
    assert rec.divisible and rec.order is None

    table = CountTable(base_q=3, what="affine_X", counts={1: 8})
    [rec] = divisibility_check(table, 1)
    assert not rec.divisible and rec.order == 0


def test_divisibility_check_scales_with_nu():
    # required power is q^(nu * exponent): nu=1 needs 3^2 | 9, nu=2 needs 3^4 | 81
    table = CountTable(base_q=3, what="affine_X", counts={1: 9, 2: 81})
    recs = divisibility_check(table, 2)
    assert recs[0].divisible and recs[1].divisible
    # but 3^6 must not divide 81: exponent 3 fails at nu=2
    recs = divisibility_check(table, 3)
    assert not recs[1].divisible


def test_budget_exceeded_reports_numbers(quadric_system):
    with pytest.raises(BudgetExceededError) as err:
        count_affine(quadric_system, 1, budget=Budget(10))
    assert err.value.required == 27
    assert err.value.allowed == 10


def test_count_table_and_gap_detection(quadric_system):
    table = count_table(quadric_system, "affine_complement", 3)
    assert table.sequence() == [18, 648, 18954]
    table.counts.pop(2)
    with pytest.raises(MissingTermError):
        table.sequence()


def test_counting_accepts_custom_modulus_fields():
    """Fields built with a non-canonical modulus still embed and count."""
    from zetadiv.field import FiniteField

    custom = FiniteField(3, 2, (2, 2, 1))  # x^2 + 2x + 2, irreducible over F_3
    t = custom.element((0, 1))
    f = MultiPoly.from_terms(custom, 2, [((2, 0), 1), ((0, 1), t)])  # x1^2 + t*x2
    system = PolySystem([f], [[1]])
    for nu in (1, 2):
        assert count_affine(system, nu) == oracle_count_affine(system, nu)


def test_theorem_divisibility_on_random_grid():
    """q^(nu*mu) divides the affine count for random systems (mainline claim)."""
    rng = random.Random(31337)
    for _ in range(25):
        system = build_system(random_instance(rng))
        exponent = mu(system.n_vars, system.degrees)
        q = system.field.order
        for nu in (1, 2):
            n = count_affine(system, nu)
            assert n % q ** (nu * exponent) == 0


def test_projective_theorem_divisibility_on_random_grid():
    rng = random.Random(60601)
    for _ in range(15):
        system = build_system(random_instance(rng, homogeneous=True))
        exponent = mu(system.n_vars, system.degrees)
        q = system.field.order
        for nu in (1, 2):
            n = count_projective_complement(system, nu)
            assert n % q ** (nu * exponent) == 0
