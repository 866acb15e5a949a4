"""Exact rational helpers: coercion rules and string round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sightlines import Q, qstr, rat


def test_rat_accepts_int_str_fraction():
    assert rat(3) == 3
    assert rat("-7/2") == Q(-7, 2)
    assert rat(Fraction(5, 10)) == Q(1, 2)
    assert rat(rat(4)) == 4


def test_rat_rejects_floats_and_bools():
    # Floats smuggle rounding error into exact predicates; bools are a
    # classic silent int coercion. Both must fail loudly.
    with pytest.raises(TypeError):
        rat(0.5)
    with pytest.raises(TypeError):
        rat(True)
    with pytest.raises(TypeError):
        rat(None)


def test_rat_rejects_garbage_strings():
    for bad in ("", "1/0", "one", "nan"):
        with pytest.raises(TypeError):
            rat(bad)


def test_rat_accepts_decimal_strings_exactly():
    # "2.5" is an exact literal (unlike the float 2.5) and is welcome.
    assert rat("2.5") == Q(5, 2)
    assert rat("-0.125") == Q(-1, 8)


def test_qstr_integers_render_as_json_numbers():
    assert qstr(Q(4, 2)) == 2
    assert qstr(Q(0)) == 0
    assert qstr(Q(-9, 3)) == -3


def test_qstr_reduced_fraction_form():
    assert qstr(Q(6, 4)) == "3/2"
    assert qstr(Q(-1, 3)) == "-1/3"


rationals = st.builds(
    Q, st.integers(min_value=-10**9, max_value=10**9), st.integers(min_value=1, max_value=10**6)
)


@given(rationals)
def test_qstr_rat_round_trip(q):
    assert rat(qstr(q)) == q


@given(rationals, rationals)
def test_arithmetic_is_exact(a, b):
    # (a + b) - b recovers a exactly; floats would not survive this.
    assert (a + b) - b == a
    if b != 0:
        assert (a / b) * b == a
