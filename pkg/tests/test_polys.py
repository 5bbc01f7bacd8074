"""Polynomial layer: arithmetic, gcd, Yun decomposition, coprime basis."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from diffsym.scalars import (
    Poly,
    QQ,
    coprime_basis,
    multiplicity,
    poly_extended_gcd,
    poly_gcd,
    squarefree_decompose,
)

coeffs = st.lists(st.integers(min_value=-6, max_value=6), min_size=0, max_size=5)


def P(cs):
    return Poly(QQ, [Fraction(c) for c in cs])


def test_normalization_drops_leading_zeros():
    assert P([1, 2, 0, 0]).degree == 1
    assert P([]).is_zero()
    assert P([0]).is_zero()


@given(coeffs, coeffs)
def test_add_commutes(a, b):
    assert P(a) + P(b) == P(b) + P(a)


@given(coeffs, coeffs, coeffs)
@settings(max_examples=60)
def test_mul_distributes(a, b, c):
    pa, pb, pc = P(a), P(b), P(c)
    assert pa * (pb + pc) == pa * pb + pa * pc


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_divmod_roundtrip(a, b):
    pa, pb = P(a), P(b)
    if pb.is_zero():
        return
    q, r = divmod(pa, pb)
    assert q * pb + r == pa
    assert r.is_zero() or r.degree < pb.degree


@given(coeffs, coeffs)
@settings(max_examples=60)
def test_extended_gcd_bezout(a, b):
    pa, pb = P(a), P(b)
    g, s, t = poly_extended_gcd(pa, pb)
    assert s * pa + t * pb == g
    if not g.is_zero():
        assert (pa % g).is_zero() and (pb % g).is_zero()


def test_yun_known_decomposition():
    t = Poly.gen(QQ)
    p = (t + 1) ** 3 * (t - 2) ** 2 * t
    dec = squarefree_decompose(p)
    assert sorted(j for _, j in dec) == [1, 2, 3]
    recombined = Poly.one(QQ)
    for q, j in dec:
        recombined = recombined * q**j
    assert recombined == p.monic()


@given(st.lists(coeffs, min_size=1, max_size=3))
@settings(max_examples=40)
def test_yun_recombines(css):
    p = Poly.one(QQ)
    for i, cs in enumerate(css):
        q = P(cs)
        if q.degree < 1:
            continue
        p = p * q ** (i + 1)
    if p.degree < 1:
        return
    recombined = Poly.one(QQ)
    for q, j in squarefree_decompose(p):
        assert poly_gcd(q, q.derivative()).degree == 0
        recombined = recombined * q**j
    assert recombined == p.monic()


def test_coprime_basis_pairwise_coprime():
    t = Poly.gen(QQ)
    inputs = [t * (t + 1), (t + 1) * (t - 1), t**2 - 1]
    basis = coprime_basis(inputs)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert poly_gcd(basis[i], basis[j]).degree == 0
    # each input factors over the basis
    for p in inputs:
        rem = p.monic()
        for b in basis:
            rem_next, r = divmod(rem, b ** multiplicity(rem, b))
            assert r.is_zero()
            rem = rem_next
        assert rem.degree == 0


def test_multiplicity_counts():
    t = Poly.gen(QQ)
    assert multiplicity((t + 1) ** 4 * t, t + 1) == 4
    assert multiplicity((t + 1) ** 4 * t, t) == 1
    assert multiplicity(t + 2, t + 3) == 0
