"""Field construction, arithmetic, enumeration, and embeddings."""

import itertools

import pytest

from zetadiv.errors import (
    ExtensionDegreeError,
    FieldMismatchError,
    NoEmbeddingError,
    NotPrimeError,
)
from zetadiv.field import FiniteField, embed, enumerate_elements, make_field

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def test_make_field_prime():
    f = make_field(3, 1)
    assert (f.p, f.k, f.modulus) == (3, 1, (0, 1))  # modulus is x itself


def test_make_field_f4_unique_quadratic():
    assert make_field(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1


def test_make_field_rejects_composite():
    with pytest.raises(NotPrimeError):
        make_field(4, 1)


def test_make_field_rejects_degree_zero():
    with pytest.raises(ExtensionDegreeError):
        make_field(3, 0)


def test_explicit_modulus_must_be_irreducible():
    with pytest.raises(ValueError):
        FiniteField(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over F_2


def test_inv_in_f3():
    f3 = make_field(3, 1)
    assert f3.from_int(2).inv() == f3.from_int(2)  # 2*2 = 4 = 1


def test_f4_product_reduces():
    f4 = make_field(2, 2)
    t = f4.element((0, 1))
    assert t * (t + f4.one()) == f4.one()  # t^2 + t = 1 mod t^2+t+1


def test_fermat_in_f5():
    f5 = make_field(5, 1)
    assert f5.from_int(2) ** 4 == f5.one()


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        make_field(5, 1).zero().inv()


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        make_field(5, 1).from_int(2) ** -1


def test_cross_field_operations_are_errors():
    a = make_field(3, 1).one()
    b = make_field(5, 1).one()
    with pytest.raises(FieldMismatchError):
        a + b
    with pytest.raises(FieldMismatchError):
        a * b


def test_enumerate_f3():
    els = enumerate_elements(make_field(3, 1))
    assert [e.coeffs for e in els] == [(0,), (1,), (2,)]


def test_enumerate_starts_zero_one_no_duplicates():
    for p, k in SMALL_FIELDS:
        f = make_field(p, k)
        els = enumerate_elements(f)
        assert len(els) == f.order
        assert len(set(els)) == f.order
        assert els[0] == f.zero()
        assert els[1] == f.one()


def test_frobenius_fixed_points_f9():
    f9 = make_field(3, 2)
    for e in enumerate_elements(f9):
        assert e ** 9 == e


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 4)])
def test_frobenius_is_additive(p, k):
    f = make_field(p, k)
    els = enumerate_elements(f)
    for a, b in itertools.product(els, repeat=2):
        assert (a + b) ** p == a**p + b**p


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)])
def test_field_axioms_on_all_triples(p, k):
    f = make_field(p, k)
    els = enumerate_elements(f)
    one = f.one()
    for a in els:
        if not a.is_zero():
            assert a * a.inv() == one
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_embed_prime_field_fixes_constants():
    f3, f9 = make_field(3, 1), make_field(3, 2)
    phi = embed(f3, f9)
    for c in range(3):
        assert phi(f3.from_int(c)) == f9.from_int(c)


def test_embed_f4_into_f16_root_property():
    f4, f16 = make_field(2, 2), make_field(2, 4)
    phi = embed(f4, f16)
    img = phi(f4.element((0, 1)))
    # the image of t must satisfy t^2 + t + 1 = 0
    assert (img * img + img + f16.one()).is_zero()


def test_embed_degree_must_divide():
    with pytest.raises(NoEmbeddingError):
        embed(make_field(2, 2), make_field(2, 3))
    with pytest.raises(NoEmbeddingError):
        embed(make_field(2, 1), make_field(3, 1))


@pytest.mark.parametrize(
    "small,big",
    [((2, 2), (2, 4)), ((2, 2), (2, 8)), ((3, 1), (3, 3)), ((3, 2), (3, 4)), ((2, 4), (2, 8))],
)
def test_embed_is_a_homomorphism(small, big):
    fs, fb = make_field(*small), make_field(*big)
    phi = embed(fs, fb)
    els = enumerate_elements(fs)
    for a, b in itertools.product(els, repeat=2):
        assert phi(a + b) == phi(a) + phi(b)
        assert phi(a * b) == phi(a) * phi(b)
    assert phi(fs.one()) == fb.one()


def test_embedding_rejects_foreign_elements():
    f3, f9 = make_field(3, 1), make_field(3, 2)
    phi = embed(f3, f9)
    with pytest.raises(FieldMismatchError):
        phi(make_field(5, 1).one())
