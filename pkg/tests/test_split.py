"""Splitting constructions: Phi, transported P, gauges, and refutations."""

import pytest

from diffsym import (
    PhiMap,
    SymbolAlgebra,
    compute_Ps,
    compute_w,
    find_twist_partner,
    inner_derivation,
    maximal_subfield_necessary,
    norm_split_check,
    random_valid_derivation,
    split_generic,
    split_inner_cyclic,
    split_inner_even_half,
    split_standard,
    standard_derivation,
    t_r_value,
    verify_diff_isomorphism,
)
from diffsym.scalars import CycloField, KummerField, RatFuncField
from diffsym.split import closed_form_P, compute_P_with_diagnostics


def make_algebra(m, derivation="dt"):
    k = RatFuncField(CycloField(m), "t", derivation)
    t = k.gen()
    return SymbolAlgebra(k, t, t + k.one(), m)


def make_phi(alg):
    return PhiMap(alg, KummerField(alg.field, alg.alpha, alg.m, "xi"))


@pytest.mark.parametrize("m", [2, 3, 4, 5, 7])
def test_t_r_closed_form(m):
    from fractions import Fraction

    for r in range(m):
        assert t_r_value(m, r) == Fraction(m - 1, 2) - r


@pytest.mark.parametrize("m", [2, 3, 5])
def test_phi_relations(m):
    # constructor asserts A^m = alpha I, B^m = beta I, BA = w AB
    phi = make_phi(make_algebra(m))
    assert phi.apply(phi.algebra.one()) == phi.a_mat * 0 + phi.b_mat**0


@pytest.mark.parametrize("m", [2, 3])
def test_phi_is_multiplicative(m, rng):
    alg = make_algebra(m)
    phi = make_phi(alg)
    for _ in range(6):
        a, b = alg.random_element(rng), alg.random_element(rng)
        assert phi.apply(a * b) == phi.apply(a) * phi.apply(b)


@pytest.mark.parametrize("m", [2, 3])
def test_w_conjugates_the_standard_derivation(m):
    # d_s + inner(w) on A tensor k(xi) is the Phi-pullback of delta^c
    alg = make_algebra(m)
    phi = make_phi(alg)
    w = compute_w(phi)
    ds_ext = standard_derivation(alg).extend(phi.ext_field)
    d_phi = ds_ext + inner_derivation(w)
    for x in phi.ext_algebra.basis():
        assert phi.apply(d_phi.apply(x)) == phi.apply(x).derive()


@pytest.mark.parametrize("m", [2, 3])
def test_transported_P_closed_form_and_iso(m, rng):
    alg = make_algebra(m)
    phi = make_phi(alg)
    for _ in range(4):
        d = random_valid_derivation(alg, rng)
        p, diags = compute_P_with_diagnostics(d, phi)
        assert diags == []
        assert verify_diff_isomorphism(phi, d, p).ok


def test_closed_form_matches_for_standard(rng):
    from diffsym import decompose

    alg = make_algebra(3)
    phi = make_phi(alg)
    d = standard_derivation(alg)
    assert closed_form_P(decompose(d), phi) == compute_Ps(phi)


@pytest.mark.parametrize("m,deg", [(3, 9), (5, 25)])
def test_split_standard_odd(m, deg):
    rep = split_standard(make_algebra(m))
    assert rep.passed
    assert rep.degree == deg
    assert rep.transcendence_degree == 0


@pytest.mark.parametrize("m,deg", [(2, 8), (4, 32)])
def test_split_standard_even(m, deg):
    rep = split_standard(make_algebra(m))
    assert rep.passed
    assert rep.degree == deg


def test_split_standard_constant_beta():
    k = RatFuncField(CycloField(2), "t")
    alg = SymbolAlgebra(k, k.gen(), k.coerce(3), 2)
    rep = split_standard(alg)
    assert rep.passed
    assert rep.degree == 2  # only the xi level is needed when delta(beta) = 0


@pytest.mark.parametrize("m", [2, 3])
def test_split_inner_cyclic(m):
    alg = make_algebra(m, derivation="zero")
    rep = split_inner_cyclic(alg, alg.u())
    assert rep.passed
    assert rep.transcendence_degree == m


def test_split_inner_rejects_degenerate():
    alg = make_algebra(2, derivation="zero")
    with pytest.raises(ValueError):
        split_inner_cyclic(alg, alg.one())  # scalar: no degree-m subfield
    with pytest.raises(ValueError):
        split_inner_cyclic(alg, alg.v())    # not a polynomial in u
    with pytest.raises(ValueError):
        split_inner_cyclic(make_algebra(2), alg.u())  # nonzero base derivation


@pytest.mark.parametrize("m", [2, 4])
def test_split_inner_even_half(m):
    alg = make_algebra(m, derivation="zero")
    rep = split_inner_even_half(alg, alg.u())
    assert rep.passed
    assert rep.transcendence_degree == m // 2
    assert rep.diagnostics == []
    # P agrees with the image of u
    phi = make_phi(alg)
    assert rep.p == phi.apply(alg.coerce_elem(alg.u()))


def test_split_inner_even_half_rejects_odd():
    alg = make_algebra(3, derivation="zero")
    with pytest.raises(ValueError):
        split_inner_even_half(alg, alg.u())


def test_split_generic(rng):
    alg = make_algebra(2)
    phi = make_phi(alg)
    d = random_valid_derivation(alg, rng)
    p, _ = compute_P_with_diagnostics(d, phi)
    rep = split_generic(p)
    assert rep.passed
    assert rep.gauge.det_nonzero
    assert rep.transcendence_degree == 4


def test_find_twist_partner():
    alg = make_algebra(3, derivation="zero")
    x = find_twist_partner(alg.u())
    assert x is not None
    w = alg.field.coerce(alg.omega)
    assert x * alg.u() == (alg.u() * x).scale(w)
    assert (x**3).is_scalar()


def test_norm_split_check():
    k = RatFuncField(CycloField(3), "t")
    t = k.gen()
    alg = SymbolAlgebra(k, t * 2, t, 3)
    ds = standard_derivation(alg)
    theta = alg.monomial(1, 2, k.one() / t)
    rep = norm_split_check(alg, ds, theta)
    assert rep.ok
    assert rep.p == 2
    assert rep.c.derive().is_zero()


def test_norm_split_check_rejects_non_constant():
    alg = make_algebra(3)
    ds = standard_derivation(alg)
    with pytest.raises(ValueError):
        norm_split_check(alg, ds, alg.v())


def test_maximal_subfield_refutes():
    alg = make_algebra(3)
    t = alg.field.gen()
    one = alg.field.one()
    for a in range(3):
        for b in range(3):
            if a == 0 and b == 0:
                continue
            rep = maximal_subfield_necessary(alg, t**a * (t + one) ** b)
            assert rep.refuted


def test_maximal_subfield_accepts_alpha_root():
    # nu = alpha itself satisfies the alpha-side necessary condition trivially,
    # but the beta side still fails here
    alg = make_algebra(3)
    rep = maximal_subfield_necessary(alg, alg.alpha)
    assert rep.alpha_witness is not None
    assert rep.beta_witness is None


def test_maximal_subfield_hypothesis_guard():
    k = RatFuncField(CycloField(3), "t")
    t = k.gen()
    alg = SymbolAlgebra(k, t**3, t + k.one(), 3)
    with pytest.raises(ValueError):
        maximal_subfield_necessary(alg, t)
