"""Power detection and irreducibility certificates."""

from fractions import Fraction

import pytest

from diffsym.scalars import (
    CycloField,
    RatFuncField,
    ReducibleRadicandError,
    cyclo_nth_root,
    kummer_vahlen_certify,
    mth_power_up_to_constant,
    rational_nth_root,
)
from diffsym.scalars.powers import certify_power_free_over_kummer


@pytest.fixture
def k():
    return RatFuncField(CycloField(3), "t")


def test_rational_nth_root():
    assert rational_nth_root(Fraction(8, 27), 3) == Fraction(2, 3)
    assert rational_nth_root(Fraction(-8), 3) == -2
    assert rational_nth_root(Fraction(-4), 2) is None
    assert rational_nth_root(Fraction(5), 2) is None


def test_cyclo_nth_root_nonrational():
    f = CycloField(4)
    w = f.omega()
    # -1 = w^2 even though -1 has no rational square root
    r = cyclo_nth_root(f.from_rational(-1), 2)
    assert r is not None and r * r == f.from_rational(-1)
    assert cyclo_nth_root(f.from_rational(2), 2) is None


def test_power_detection_roundtrip(k, rng):
    t = k.gen()
    for m in (2, 3, 5):
        for _ in range(10):
            h = (t + rng.randint(-3, 3)) ** rng.randint(1, 2) / (t**2 + rng.randint(1, 4))
            c = k.cyclo.from_rational(Fraction(rng.randint(1, 5), rng.randint(1, 5)))
            f = h**m * k.coerce(c)
            res = mth_power_up_to_constant(f, m)
            assert res is not None
            c2, h2 = res
            assert f == h2**m * k.coerce(c2)


def test_power_detection_rejects(k):
    t = k.gen()
    assert mth_power_up_to_constant(t**2 * (t + 1) ** 3, 3) is None
    assert mth_power_up_to_constant(t, 2) is None
    with pytest.raises(ValueError):
        mth_power_up_to_constant(k.zero(), 2)


def test_kummer_vahlen_accepts(k):
    t = k.gen()
    kummer_vahlen_certify(t, 3)
    kummer_vahlen_certify(t + 1, 3)
    kummer_vahlen_certify(t**2, 3)  # multiplicity 2, not divisible by 3


def test_kummer_vahlen_rejects(k):
    t = k.gen()
    with pytest.raises(ReducibleRadicandError):
        kummer_vahlen_certify(t**3, 3)
    with pytest.raises(ReducibleRadicandError):
        kummer_vahlen_certify(t**2 * 4, 2)
    k4 = RatFuncField(CycloField(4), "t")
    with pytest.raises(ReducibleRadicandError):
        # -4 t^4 lies in -4 k^4, so z^4 + 4t^4 is reducible
        kummer_vahlen_certify(k4.gen() ** 4 * (-4), 4)


def test_tower_certificate(k):
    t = k.gen()
    certify_power_free_over_kummer(t, 3, t + 1, 3)
    with pytest.raises(ReducibleRadicandError):
        # valuations of alpha at every place of beta's support: inconclusive
        certify_power_free_over_kummer(t, 2, t**2, 2)
