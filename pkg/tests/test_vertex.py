"""Vertex-operator modes, polynomial construction, and the adjoint lowering
operators.  The one-row polynomials are cross-checked against a directly
expanded exponential generating function."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hlvir.exactnum import QQ, RHO_GENERIC, RHO_ZERO, RhoSpec
from hlvir.tring import TPoly, inner_product, mono_from_exponents
from hlvir.vertex import (AdjointUndefinedError, QCombination, apply_B,
                          clear_caches, hl_q, one_row, perp_p, perp_t,
                          set_cache_enabled)


def exp_series(arg_terms, max_degree):
    """exp(sum of homogeneous terms), truncated above max_degree."""
    field = arg_terms.field
    out = TPoly.one(field)
    power = TPoly.one(field)
    for k in range(1, max_degree + 1):
        power = power * arg_terms
        power = TPoly.from_terms(
            field, ((m, c) for m, c in power.terms.items()
                    if sum(v * e for v, e in m) <= max_degree))
        out = out + power.scale(Fraction(1, _factorial(k)))
        if not power:
            break
    return out


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


@pytest.mark.parametrize("rho", [RHO_GENERIC, RHO_ZERO, RhoSpec.root(2), RhoSpec.root(3)])
def test_one_row_matches_generating_function(rho):
    """Degree-i part of exp(sum_n (1 - rho^n) t_n) is the i-th row polynomial."""
    max_degree = 6
    field = rho.field
    arg = TPoly.zero(field)
    for n in range(1, max_degree + 1):
        c = rho.one_minus_rho_pow(n)
        if c:
            arg = arg + TPoly.var(field, n).scale(c)
    series = exp_series(arg, max_degree)
    for i in range(max_degree + 1):
        graded = TPoly.from_terms(
            field, ((m, c) for m, c in series.terms.items()
                    if sum(v * e for v, e in m) == i))
        assert one_row(i, rho) == graded


def test_one_row_examples():
    x2 = RhoSpec.root(2)
    f = one_row(3, x2)
    want = TPoly.from_terms(x2.field, (
        (((1, 3),), x2.field.from_fraction(Fraction(4, 3))),
        (((3, 1),), x2.field.from_fraction(2)),
    ))
    assert f == want
    assert one_row(0, RHO_GENERIC) == TPoly.one(RHO_GENERIC.field)
    assert not one_row(-1, RHO_GENERIC)


def test_apply_b_degree_shift_and_cutoff():
    x2 = RhoSpec.root(2)
    t2 = TPoly.var(x2.field, 2)
    out = apply_B(1, t2, x2)
    assert out.degree() == 3
    assert apply_B(-3, t2, x2) == TPoly.zero(x2.field)
    # frozen hand computation
    want = TPoly.from_terms(x2.field, (
        (((1, 1), (2, 1)), x2.field.from_fraction(2)),
        (((1, 3),), x2.field.from_fraction(Fraction(-2, 3))),
        (((3, 1),), x2.field.from_fraction(-1)),
    ))
    assert out == want
    assert apply_B(-1, t2, x2) == TPoly.var(x2.field, 1, -1)


def test_hl_q_frozen_values():
    x2 = RhoSpec.root(2)
    assert hl_q((2,), x2).to_text() == "2*t1^2"
    assert hl_q((1, 1), RHO_ZERO).to_text() == "1/2*t1^2 - 1*t2"
    assert hl_q((2, -1), RHO_GENERIC).to_text() == "0"
    assert hl_q((), RHO_ZERO) == TPoly.one(QQ)
    generic_row = hl_q((1,), RHO_GENERIC)
    assert generic_row == TPoly.var(RHO_GENERIC.field, 1).scale(
        RHO_GENERIC.one_minus_rho_pow(1))


def test_hl_q_trailing_zeros_and_negative_tail():
    for rho in (RHO_GENERIC, RHO_ZERO, RhoSpec.root(3)):
        assert hl_q((3, 1, 0), rho) == hl_q((3, 1), rho)
        assert hl_q((2, 1, -4), rho) == TPoly.zero(rho.field)


def test_hl_q_homogeneous_of_weight():
    for lam in [(2, 1), (3, 1, 1), (4,), (2, 2, 2)]:
        f = hl_q(lam, RHO_ZERO)
        assert f.is_homogeneous()
        assert f.degree() == sum(lam)


def test_schur_q_modes_square_to_zero():
    """At the second root the same nonzero mode applied twice annihilates;
    the zero mode squares to the identity."""
    x2 = RhoSpec.root(2)
    mono = TPoly.from_terms(x2.field, ((mono_from_exponents(((1, 1), (3, 1))),
                                        x2.field.one),))
    for n in (1, 2, 3):
        assert apply_B(n, apply_B(n, mono, x2), x2) == TPoly.zero(x2.field)
    assert apply_B(0, apply_B(0, mono, x2), x2) == mono


def test_perp_t_is_adjoint_to_multiplication():
    rho = RHO_GENERIC
    field = rho.field
    f = hl_q((2, 1), rho)
    g = hl_q((3,), rho)
    r = 2
    lhs = inner_product(perp_t(r, f, rho), g, rho)
    rhs = inner_product(f, g.mul_var(r), rho)
    assert lhs == rhs


def test_perp_t_undefined_at_degenerate_index():
    x3 = RhoSpec.root(3)
    f = hl_q((3, 1), x3)
    with pytest.raises(AdjointUndefinedError):
        perp_t(3, f, x3)
    # non-multiples are fine
    perp_t(2, f, x3)


def test_perp_p_label_rule():
    comb = QCombination.single(QQ, (3, 2))
    out = perp_p(2, comb)
    assert out == QCombination.from_terms(QQ, (((1, 2), Fraction(1)),
                                               ((3, 0), Fraction(1))))


def test_qcombination_text_and_json():
    comb = QCombination.from_terms(QQ, (((2,), Fraction(1)),
                                        ((1, 1), Fraction(-1, 2))))
    assert comb.to_text() == "1*Q[2] - 1/2*Q[1,1]"
    assert QCombination.from_json(QQ, comb.to_json()) == comb
    assert QCombination.zero(QQ).to_text() == "0"


def test_qcombination_evaluate_linearity():
    rho = RHO_ZERO
    comb = QCombination.from_terms(QQ, (((2,), Fraction(2)),
                                        ((1, 1), Fraction(-1))))
    direct = hl_q((2,), rho).scale(2) - hl_q((1, 1), rho)
    assert comb.evaluate(rho) == direct


def test_cache_toggle_preserves_results():
    x2 = RhoSpec.root(2)
    with_cache = hl_q((3, 2, 1), x2)
    set_cache_enabled(False)
    try:
        without = hl_q((3, 2, 1), x2)
    finally:
        set_cache_enabled(True)
    assert with_cache == without
    clear_caches()
    assert hl_q((3, 2, 1), x2) == with_cache
