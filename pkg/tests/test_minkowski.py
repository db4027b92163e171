import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from lorentz_bridge.minkowski import (
    Boost,
    FourVector,
    boost,
    boost_array,
    boost_axis,
    boost_x,
    compose_rapidity,
    minkowski_norm_sq,
    norm_sq_array,
)

comp = st.floats(-1e3, 1e3, allow_nan=False)
four = st.tuples(comp, comp, comp, comp)
betas = st.floats(-0.99, 0.99)
axes = st.sampled_from(["x", "y", "z"])


def close(a, b, rel=1e-15, abs_=1e-15):
    return all(math.isclose(float(x), float(y), rel_tol=rel, abs_tol=abs_) for x, y in zip(a, b))


# frozen from tests/oracles.py (mpmath, 50 digits)
BOOST_CASES = [
    ((1, 0, 0, 0), 0.0, "x", (1, 0, 0, 0)),
    ((1, 0, 0, 0), 0.6, "x", (1.25, -0.75, 0, 0)),
    ((1, 1, 0, 0), 0.6, "x", (0.5, 0.5, 0, 0)),
    ((1, 0, 2, 0), 0.0, "y", (1, 0, 2, 0)),
    ((1, 0, 0, 0), 0.6, "y", (1.25, 0, -0.75, 0)),
    ((2.5, 1.5, 0, 0), 0.8, "z", (25 / 6, 1.5, 0, -10 / 3)),
]


class TestNorm:
    @pytest.mark.parametrize("v, expected", [((1, 0, 0, 0), 1.0), ((1.25, 0.75, 0, 0), 1.0), ((1, 1, 0, 0), 0.0)])
    def test_examples(self, v, expected):
        assert minkowski_norm_sq(FourVector(*v)) == expected

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            FourVector(math.nan, 0, 0, 0)
        with pytest.raises(ValueError):
            FourVector(1.0, math.inf)

    @given(four)
    def test_array_matches_scalar(self, v):
        assert norm_sq_array(np.array([v]))[0] == pytest.approx(minkowski_norm_sq(FourVector(*v)), rel=1e-15, abs=1e-9)


class TestBoost:
    @pytest.mark.parametrize("v, beta, axis, expected", BOOST_CASES)
    def test_examples(self, v, beta, axis, expected):
        out = boost_axis(FourVector(*v), axis, beta)
        assert close(out.as_tuple(), expected)

    @pytest.mark.parametrize("v, beta, axis, expected", BOOST_CASES)
    def test_examples_match_oracle(self, v, beta, axis, expected):
        ref = oracles.boost(v, beta, "xyz".index(axis))
        assert close(ref, expected)

    def test_boost_x_is_axis_x(self):
        v = FourVector(3.0, 1.0, -2.0, 0.5)
        assert boost_x(v, 0.3) == boost_axis(v, "x", 0.3)

    @pytest.mark.parametrize("beta", [1.0, -1.0, 1.5, math.nan])
    def test_rejects_unphysical(self, beta):
        with pytest.raises(ValueError):
            boost_x(FourVector(1, 0, 0, 0), beta)
        with pytest.raises(ValueError):
            Boost.from_beta(beta)

    def test_rejects_off_axis_boost(self):
        with pytest.raises(ValueError):
            boost_axis(FourVector(1, 0, 0, 0), "x", Boost.from_beta(0.5, "y"))

    def test_gamma_from_rapidity(self):
        b = Boost.from_beta(0.6)
        assert b.gamma() == pytest.approx(1.25, rel=1e-15)
        assert b.beta() == pytest.approx((0.6, 0.0, 0.0), rel=1e-15)

    @given(four, st.tuples(st.floats(-0.5, 0.5), st.floats(-0.5, 0.5), st.floats(-0.5, 0.5)))
    def test_general_boost_matches_textbook_matrix(self, v, bvec):
        out = boost(FourVector(*v), Boost.from_velocity(bvec))
        ref = oracles.boost_general(v, bvec)
        scale = max(1.0, max(abs(c) for c in v))
        assert all(abs(float(a) - float(b)) <= 1e-13 * scale for a, b in zip(out.as_tuple(), ref))

    @given(four, betas, axes)
    def test_norm_preserved(self, v, beta, axis):
        fv = FourVector(*v)
        out = boost_axis(fv, axis, beta)
        g2 = 1.0 / (1.0 - beta * beta)
        scale = max(1.0, abs(fv.norm_sq()), g2 * sum(c * c for c in v))
        assert abs(out.norm_sq() - fv.norm_sq()) <= 1e-12 * scale

    @given(four, betas, axes)
    def test_inverse_roundtrip(self, v, beta, axis):
        fv = FourVector(*v)
        back = boost_axis(boost_axis(fv, axis, beta), axis, -beta)
        g2 = 1.0 / (1.0 - beta * beta)
        scale = max(1.0, g2 * sum(c * c for c in v))
        assert all(abs(a - b) <= 1e-12 * math.sqrt(scale) for a, b in zip(back.as_tuple(), v))

    @given(four, betas, axes)
    def test_orthogonal_components_bit_identical(self, v, beta, axis):
        fv = FourVector(*v)
        out = boost_axis(fv, axis, beta)
        i = "xyz".index(axis)
        for j in range(3):
            if j != i:
                assert out.spatial[j] == fv.spatial[j]

    @given(st.lists(four, min_size=1, max_size=20), st.data())
    def test_array_kernel_matches_scalar(self, vs, data):
        n = len(vs)
        bs = data.draw(st.lists(betas, min_size=n, max_size=n))
        ax = data.draw(st.lists(st.integers(0, 2), min_size=n, max_size=n))
        arr = boost_array(np.array(vs, dtype=float), np.array(bs), np.array(ax))
        for row, v, b, a in zip(arr, vs, bs, ax):
            ref = boost_axis(FourVector(*v), a, b).as_tuple()
            scale = max(1.0, max(abs(c) for c in v)) / math.sqrt(1 - b * b)
            assert np.all(np.abs(row - ref) <= 1e-14 * scale)

    def test_array_kernel_rejects_unphysical(self):
        with pytest.raises(ValueError):
            boost_array(np.ones((2, 4)), np.array([0.1, 1.0]), 0)


class TestComposition:
    def test_identity(self):
        a = Boost.from_rapidity(0.7)
        assert compose_rapidity(Boost(), a).rapidity == a.rapidity

    def test_velocity_addition(self):
        out = compose_rapidity(Boost.from_beta(0.6), Boost.from_beta(0.6))
        assert out.speed() == pytest.approx(float(oracles.velocity_addition(0.6, 0.6)), rel=1e-15)
        assert out.speed() == pytest.approx(15 / 17, rel=1e-15)

    def test_inverse(self):
        out = compose_rapidity(Boost.from_beta(0.6), Boost.from_beta(-0.6))
        assert out.speed() == pytest.approx(0.0, abs=1e-16)

    def test_rejects_non_collinear(self):
        with pytest.raises(ValueError):
            compose_rapidity(Boost.from_beta(0.3, "x"), Boost.from_beta(0.3, "y"))

    @given(four, betas, betas, axes)
    def test_equals_sequential_boosting(self, v, b1, b2, axis):
        fv = FourVector(*v)
        seq = boost_axis(boost_axis(fv, axis, b1), axis, b2)
        comp_b = compose_rapidity(Boost.from_beta(b1, axis), Boost.from_beta(b2, axis))
        one = boost(fv, comp_b)
        scale = max(1.0, comp_b.gamma() / math.sqrt(1 - b1 * b1) * max(abs(c) for c in v))
        assert all(abs(a - b) <= 1e-12 * scale for a, b in zip(seq.as_tuple(), one.as_tuple()))
