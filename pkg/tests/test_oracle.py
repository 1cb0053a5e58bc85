from fractions import Fraction

import pytest

from hkfsig.errors import DimensionMismatch
from hkfsig.fan import ExponentData
from hkfsig.linear import bounds
from hkfsig.oracle import contains, fsig_box, hk_box, mc_volume
from hkfsig.regions import LinearAtom, RegionFormula, fsig_region, hk_region
from hkfsig.volume import shannon_cells

from helpers import monoid_fiber_mc

D5223 = ExponentData((5, 2), (2, 3))


def test_contains_examples():
    hk = hk_region(D5223)
    assert contains(hk, (0, 0, 0, 0))
    assert not contains(hk, (1, 1, 5, 3))
    assert contains(fsig_region(D5223), (0, 0, Fraction(1, 2), Fraction(1, 2)))


def test_contains_honours_strictness():
    fs = fsig_region(ExponentData((1,), (1,)))
    assert contains(fs, (0, 0, 0))
    assert not contains(fs, (0, 0, 1))


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        contains(hk_region(D5223), (0, 0, 0))
    with pytest.raises(DimensionMismatch):
        mc_volume(hk_region(D5223), (1, 1, 1), 10)


def test_reproducible():
    r = fsig_region(D5223)
    assert mc_volume(r, samples=50_000, seed=3) == mc_volume(r, samples=50_000, seed=3)
    assert mc_volume(r, samples=50_000, seed=3) != mc_volume(r, samples=50_000, seed=4)


def test_empty_region_estimate_is_zero():
    r = RegionFormula(("x",), (LinearAtom((1,), 2, ">="),), (), (Fraction(1),))
    res = mc_volume(r, samples=1000)
    assert res.estimate == 0 and res.hits == 0


def test_unit_cube_is_exact():
    r = RegionFormula(("x", "y"), (LinearAtom((1, 0), 0, ">="),), (), (Fraction(1), Fraction(1)))
    res = mc_volume(r, samples=1000)
    assert res.estimate == 1 and res.stderr == 0


@pytest.mark.parametrize(
    "data",
    [ExponentData((1,), (1,)), ExponentData((3,), (2,)), D5223, ExponentData((2, 7, 4), (1, 5, 6))],
)
def test_hk_box_contains_region(data):
    box = hk_box(data)
    for c in shannon_cells(hk_region(data)):
        s = c.system()
        for k, b in enumerate(box):
            lo, hi = bounds(s, k)
            assert lo >= 0 and hi <= b


def test_fsig_box_contains_region():
    for data in [D5223, ExponentData((3,), (2,))]:
        box = fsig_box(data)
        s = shannon_cells(fsig_region(data))[0].system()
        for k, b in enumerate(box):
            assert bounds(s, k)[1] <= b


@pytest.mark.parametrize(
    "data, exact",
    [(ExponentData((3,), (2,)), Fraction(41, 18)), (D5223, Fraction(37283, 9900))],
)
def test_box_doubling(data, exact):
    region = hk_region(data)
    box = hk_box(data)
    small = mc_volume(region, box, 200_000, seed=1)
    big = mc_volume(region, tuple(2 * b for b in box), 200_000, seed=2)
    combined = (small.stderr ** 2 + big.stderr ** 2) ** 0.5
    assert abs(small.estimate - big.estimate) < 5 * combined
    assert small.agrees(exact)


@pytest.mark.parametrize(
    "data, exact",
    [
        (ExponentData((1,), (1,)), Fraction(4, 3)),
        (ExponentData((3,), (2,)), Fraction(41, 18)),
        (D5223, Fraction(37283, 9900)),
        (ExponentData((1, 6, 5), (1, 6, 5)), Fraction(1633, 864)),
    ],
)
def test_monoid_oracle(data, exact):
    box = hk_box(data)
    est, err = monoid_fiber_mc(data, int(box[0]), int(box[1]), 400_000, seed=7)
    assert abs(est - float(exact)) <= 4 * err


def _random_cases(count, seed=31):
    import random

    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice([1, 2, 3])
        out.append(ExponentData(tuple(rng.randint(1, 7) for _ in range(n)),
                                tuple(rng.randint(1, 7) for _ in range(n))))
    return out


@pytest.mark.parametrize("data", _random_cases(6))
def test_monoid_oracle_random(data):
    from hkfsig.volume import region_volume

    exact = region_volume(hk_region(data))
    box = hk_box(data)
    est, err = monoid_fiber_mc(data, int(box[0]), int(box[1]), 200_000, seed=3)
    assert abs(est - float(exact)) <= 4 * err
