"""Form arithmetic and the substitution action."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zred.forms import (
    Form,
    UnimodularMatrix,
    act,
    check_indefinite,
    form,
    form_from_json,
    form_to_json,
)

T = UnimodularMatrix(1, 1, 0, 1)
L = UnimodularMatrix(1, 0, 1, 1)
IDENT = UnimodularMatrix(1, 0, 0, 1)

coeff = st.integers(min_value=-50, max_value=50)
forms = st.builds(Form, coeff, coeff, coeff)


@st.composite
def unimodular(draw):
    """Random word in the two triangular generators."""
    m = IDENT
    for g, k in draw(st.lists(st.tuples(st.sampled_from((T, L)),
                                        st.integers(0, 4)), max_size=6)):
        for _ in range(k):
            m = m @ g
    return m


def test_det_and_product():
    assert T.det() == L.det() == IDENT.det() == 1
    assert (T @ L).det() == 1
    assert T @ IDENT == IDENT @ T == T
    assert UnimodularMatrix(0, -1, 1, 0).det() == 1
    assert UnimodularMatrix(1, 0, 0, -1).det() == -1


@given(unimodular(), unimodular(), unimodular())
def test_matmul_associative(m, n, k):
    assert (m @ n) @ k == m @ (n @ k)


@given(forms, unimodular(), unimodular())
def test_action_composes(f, m, n):
    assert act(act(f, m), n) == act(f, m @ n)


@given(forms, unimodular())
def test_action_preserves_discriminant_and_content(f, m):
    g = act(f, m)
    assert g.discriminant() == f.discriminant()
    if f != Form(0, 0, 0):
        assert g.content() == f.content()


def test_action_requires_det_one():
    with pytest.raises(ValueError):
        act(Form(1, 5, 2), UnimodularMatrix(1, 0, 0, -1))
    with pytest.raises(ValueError):
        act(Form(1, 5, 2), UnimodularMatrix(2, 0, 0, 2))


def test_worked_action():
    # x -> x + y sends (1, 3, -2) to (1, 5, 2)
    assert act(Form(1, 3, -2), T) == Form(1, 5, 2)


def test_reduced_predicates():
    assert Form(1, 5, 2).is_z_reduced()
    assert not Form(1, 5, 2).is_g_reduced()
    assert Form(1, 3, -2).is_g_reduced()
    assert Form(-2, 3, 1).is_g_reduced()
    assert not Form(1, 3, -2).is_z_reduced()
    assert not Form(1, 3, 2).is_z_reduced()  # b = a + c is excluded
    assert not Form(1, 2, -3).is_g_reduced()  # b = |a + c| is excluded


def test_indefinite_check():
    assert Form(1, 5, 2).is_indefinite()
    assert check_indefinite(Form(1, 5, 2)) == 17
    for f in (Form(1, 3, 2), Form(1, 0, 1), Form(1, 0, -1), Form(2, 4, 2)):
        assert not f.is_indefinite()
        with pytest.raises(ValueError):
            check_indefinite(f)


def test_content_scaling():
    f = Form(2, 10, 4)
    assert f.content() == 2
    assert not f.is_primitive()
    assert Form(1, 5, 2).scalar_mul(2) == f
    with pytest.raises(ValueError):
        Form(1, 5, 2).scalar_mul(0)
    with pytest.raises(ValueError):
        Form(0, 0, 0).content()


def test_reverse_and_rho_are_involutions():
    f = Form(1, 3, -2)
    assert f.reverse() == Form(-2, 3, 1)
    assert f.rho() == Form(-1, 3, 2)
    assert f.reverse().reverse() == f
    assert f.rho().rho() == f
    assert f.reverse().discriminant() == f.discriminant()
    assert f.rho().discriminant() == f.discriminant()


def test_str_and_json():
    f = Form(1, 5, 2)
    assert str(f) == "(1, 5, 2)"
    assert form_to_json(f) == ["1", "5", "2"]
    assert form_from_json(["1", "5", "2"]) == f
    big = Form(10**40, -(10**41), 3)
    assert form_from_json(form_to_json(big)) == big
    with pytest.raises(ValueError):
        form_from_json(["1", "2"])
    with pytest.raises(ValueError):
        form_from_json("nope")


def test_form_coerces_to_int():
    assert form(1, 5, 2) == Form(1, 5, 2)
    assert form("1", "5", "2") == Form(1, 5, 2)
