from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from oracles import close, to_mpc
from polydendrite.errors import FieldMismatch
from polydendrite.field import compare_real, cyclotomic_field, cyclotomic_polynomial, euler_phi

ORDERS = [3, 4, 5, 6, 8, 10, 12]

small_q = st.fractions(min_value=-4, max_value=4, max_denominator=12)


@st.composite
def scalars(draw, order=None):
    order = order or draw(st.sampled_from(ORDERS))
    fld = cyclotomic_field(order)
    coeffs = draw(st.lists(small_q, min_size=fld.degree, max_size=fld.degree))
    return fld.element(coeffs)


@st.composite
def scalar_pairs(draw):
    order = draw(st.sampled_from(ORDERS))
    return draw(scalars(order)), draw(scalars(order))


@pytest.mark.parametrize(
    "n, coeffs",
    [(1, (-1, 1)), (2, (1, 1)), (3, (1, 1, 1)), (4, (1, 0, 1)), (6, (1, -1, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_cyclotomic_polynomial(n, coeffs):
    assert cyclotomic_polynomial(n) == coeffs


@pytest.mark.parametrize("n, phi", [(3, 2), (4, 2), (5, 4), (8, 4), (12, 4), (15, 8)])
def test_degree(n, phi):
    assert euler_phi(n) == phi
    assert cyclotomic_field(n).degree == phi


def test_zeta_is_a_root_of_unity():
    for n in ORDERS:
        fld = cyclotomic_field(n)
        assert fld.zeta() ** n == fld.one
        assert all(fld.zeta() ** k != fld.one for k in range(1, n))


def test_i_squared():
    fld = cyclotomic_field(4)
    assert fld.i * fld.i == -fld.one
    with pytest.raises(FieldMismatch):
        cyclotomic_field(6).i


def test_element_too_many_coefficients():
    with pytest.raises(FieldMismatch):
        cyclotomic_field(4).element([1, 2, 3])


def test_canonical_form_and_hash():
    fld = cyclotomic_field(4)
    a = fld.element([Fraction(2, 4), Fraction(1, 3)])
    b = fld.element([Fraction(1, 2), Fraction(2, 6)])
    assert a == b and hash(a) == hash(b)
    assert a.literal() == "poly(1/2, 1/3)"


def test_division_by_zero():
    fld = cyclotomic_field(5)
    with pytest.raises(ZeroDivisionError):
        fld.one / fld.zero


def test_sqrt5_sign_near_rational():
    # zeta5 + zeta5^4 = (sqrt 5 - 1)/2: compare against a close rational
    fld = cyclotomic_field(5)
    golden = fld.zeta(1) + fld.zeta(4)
    approx = Fraction(618033988749894848, 10**18)
    assert compare_real(golden, fld.rational(approx)) == 1
    assert compare_real(golden, fld.rational(approx + Fraction(1, 10**18))) == -1


@given(scalar_pairs())
def test_arithmetic_matches_numeric_evaluation(pair):
    x, y = pair
    with mpmath.workdps(60):
        assert close(to_mpc(x + y), to_mpc(x) + to_mpc(y))
        assert close(to_mpc(x - y), to_mpc(x) - to_mpc(y))
        assert close(to_mpc(x * y), to_mpc(x) * to_mpc(y))
        assert close(to_mpc(x.conjugate()), mpmath.conj(to_mpc(x)))
        if not y.is_zero():
            assert close(to_mpc(x / y), to_mpc(x) / to_mpc(y), 1e-30)


@given(scalars())
def test_inverse(x):
    assume(not x.is_zero())
    assert x * x.inverse() == x.field.one


@given(scalars())
def test_conjugation_is_an_involution(x):
    assert x.conjugate().conjugate() == x
    assert x.abs2().imag_sign() == 0


@given(scalars())
def test_exact_signs_agree_with_numerics(x):
    z = complex(to_mpc(x))
    for sign, value in ((x.real_sign(), z.real), (x.imag_sign(), z.imag)):
        if abs(value) > 1e-9:
            assert sign == (1 if value > 0 else -1)
    # the real part of x - conj(x) is exactly zero
    assert (x - x.conjugate()).real_sign() == 0


@given(scalar_pairs())
def test_ring_laws(pair):
    x, y = pair
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    assert (x - y) + y == x
