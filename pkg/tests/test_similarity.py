"""Comparison operators: worked values, algebra, and oracle equivalence."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from propnorm._kernels import one_to_many_values
from propnorm.errors import DivisionByZeroError, UndefinedInteriorityError, ValidationError
from propnorm.similarity import (
    IndexParams,
    NpSetVector,
    abs_diff,
    coincidence,
    diff,
    euclidean,
    modified_jaccard,
    nonneg_jaccard,
    np_interiority,
    np_jaccard,
    power_compare,
    ratio,
    scalar_jaccard,
)

from oracles import (
    brute_coincidence,
    brute_interiority,
    brute_jaccard,
    brute_modified_jaccard,
)

X_EXAMPLE = np.array([3.0, -1.0])
Y_EXAMPLE = np.array([1.0, -2.0])

vectors = st.lists(
    st.floats(min_value=-50.0, max_value=50.0, allow_nan=False), min_size=1, max_size=6
)


def random_mixed_vectors(rng, count, max_dim=5):
    for _ in range(count):
        dim = rng.integers(1, max_dim + 1)
        v = rng.normal(0.0, 2.0, dim)
        v[rng.random(dim) < 0.2] = 0.0
        yield v


class TestUniformComparisons:
    def test_diff_examples(self):
        assert diff(2.0, 5.0) == 3.0
        assert diff(5.0, 2.0) == -3.0
        assert diff(4.2, 4.2) == 0.0

    def test_abs_diff_examples(self):
        assert abs_diff(2.0, 5.0) == 3.0
        assert abs_diff(5.0, 2.0) == 3.0

    @given(
        st.floats(-1e6, 1e6, allow_nan=False),
        st.floats(-1e6, 1e6, allow_nan=False),
        st.floats(-1e6, 1e6, allow_nan=False),
    )
    def test_diff_translation_invariance_exact(self, x, y, alpha):
        assert diff(x + alpha, y + alpha) == pytest.approx(diff(x, y), abs=1e-9 * max(1, abs(x), abs(y)))

    def test_euclidean_examples(self):
        assert euclidean([0.0, 0.0], [3.0, 4.0]) == 5.0
        assert euclidean([1.0, -2.0], [1.0, -2.0]) == 0.0
        assert euclidean([1.0, 1.0], [2.0, 2.0]) == pytest.approx(math.sqrt(2.0), rel=1e-12)

    def test_euclidean_dimension_mismatch(self):
        with pytest.raises(ValidationError, match="mismatch"):
            euclidean([1.0], [1.0, 2.0])

    def test_euclidean_translation_invariance(self):
        rng = np.random.default_rng(0)
        for _ in range(200):
            x, y, shift = rng.normal(0, 10, (3, 4))
            assert euclidean(x + shift, y + shift) == pytest.approx(euclidean(x, y), rel=1e-12, abs=1e-12)

    def test_abs_diff_scales_linearly(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            x, y = rng.normal(0, 10, 2)
            a = rng.uniform(-5, 5)
            assert abs_diff(a * x, a * y) == pytest.approx(abs(a) * abs_diff(x, y), rel=1e-12, abs=1e-15)


class TestRatio:
    def test_example(self):
        assert ratio(2.0, 6.0) == 3.0

    def test_scaling_invariance(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            r = rng.uniform(-5, 5)
            if r == 0.0:
                continue
            assert ratio(r * 2.0, r * 6.0) == pytest.approx(3.0, rel=1e-12)

    def test_zero_denominator(self):
        with pytest.raises(DivisionByZeroError):
            ratio(0.0, 1.0)


class TestScalarJaccard:
    def test_examples(self):
        assert scalar_jaccard(2.0, 4.0) == 0.5
        assert scalar_jaccard(3.3, 3.3) == 1.0
        assert scalar_jaccard(0.0, 5.0) == 0.0

    def test_both_zero_convention(self):
        assert scalar_jaccard(0.0, 0.0) == 1.0

    def test_rejects_negative(self):
        with pytest.raises(ValidationError):
            scalar_jaccard(-1.0, 2.0)


class TestNonnegJaccard:
    def test_example(self):
        assert nonneg_jaccard([1.0, 2.0], [2.0, 1.0]) == 0.5

    def test_identity(self):
        assert nonneg_jaccard([0.5, 3.0], [0.5, 3.0]) == 1.0

    def test_scaling_invariance(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            r = rng.uniform(1e-3, 1e3)
            assert nonneg_jaccard([r * 1.0, r * 2.0], [r * 2.0, r * 1.0]) == pytest.approx(0.5, rel=1e-12)

    def test_all_zero_pair(self):
        assert nonneg_jaccard([0.0, 0.0], [0.0, 0.0]) == 1.0


class TestNpSetVector:
    @given(vectors)
    def test_decomposition_invariants(self, values):
        npset = NpSetVector.from_vector(values)
        assert np.all(npset.pos >= 0.0) and np.all(npset.neg_mag >= 0.0)
        # at most one side nonzero per dimension
        assert not np.any((npset.pos > 0.0) & (npset.neg_mag > 0.0))
        assert np.array_equal(npset.to_vector(), np.asarray(values, dtype=float))


class TestNpJaccard:
    def test_worked_example(self):
        assert np_jaccard(X_EXAMPLE, Y_EXAMPLE) == pytest.approx(0.4, abs=1e-15)

    def test_disjoint_sign_supports(self):
        assert np_jaccard([2.0], [-2.0]) == 0.0

    def test_identity(self):
        assert np_jaccard([1.5, -2.5, 0.0], [1.5, -2.5, 0.0]) == 1.0

    def test_both_zero_convention(self):
        assert np_jaccard([0.0, 0.0], [0.0, 0.0]) == 1.0


class TestNpInteriority:
    def test_worked_example(self):
        assert np_interiority(X_EXAMPLE, Y_EXAMPLE) == pytest.approx(2.0 / 3.0, rel=1e-15)

    def test_full_containment(self):
        assert np_interiority([1.0, 0.0], [2.0, 0.0]) == 1.0

    def test_identity(self):
        assert np_interiority([1.0, -2.0], [1.0, -2.0]) == 1.0

    def test_zero_vector_undefined(self):
        with pytest.raises(UndefinedInteriorityError):
            np_interiority([0.0, 0.0], [1.0, 2.0])


class TestCoincidence:
    def test_worked_example(self):
        value = coincidence(X_EXAMPLE, Y_EXAMPLE, IndexParams(d=1.0, e=1.0))
        assert value == pytest.approx(4.0 / 15.0, rel=1e-14)

    def test_identity_any_exponents(self):
        for d, e in ((1.0, 1.0), (5.0, 1.0), (2.5, 3.5)):
            assert coincidence([1.0, -2.0], [1.0, -2.0], IndexParams(d, e)) == 1.0

    def test_network_configuration(self):
        params = IndexParams(d=5.0, e=1.0)
        expected = np_jaccard(X_EXAMPLE, Y_EXAMPLE) ** 5 * np_interiority(X_EXAMPLE, Y_EXAMPLE)
        assert coincidence(X_EXAMPLE, Y_EXAMPLE, params) == pytest.approx(expected, rel=1e-15)

    def test_params_validation(self):
        with pytest.raises(ValidationError):
            IndexParams(d=0.0)
        with pytest.raises(ValidationError):
            IndexParams(e=-1.0)


class TestModifiedJaccard:
    def test_worked_example(self):
        assert modified_jaccard(X_EXAMPLE, Y_EXAMPLE, d=1.0) == pytest.approx(5.0 / 12.0, rel=1e-14)

    def test_zero_over_zero_term_counts_as_one(self):
        assert modified_jaccard([0.0, 1.0], [0.0, 1.0], d=1.0) == 1.0

    def test_exponent_applies_to_the_mean(self):
        base = modified_jaccard(X_EXAMPLE, Y_EXAMPLE, d=1.0)
        assert modified_jaccard(X_EXAMPLE, Y_EXAMPLE, d=5.0) == pytest.approx(base**5, rel=1e-13)


class TestPowerCompare:
    def test_examples(self):
        assert power_compare(0.5, 2.0) == 0.25
        assert power_compare(1.0, 7.3) == 1.0
        assert power_compare(0.9, 5.0) == pytest.approx(0.59049, rel=1e-12)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValidationError):
            power_compare(1.5, 2.0)

    def test_order_preserving(self):
        values = [0.0, 0.2, 0.5, 0.9, 1.0]
        powered = [power_compare(v, 3.0) for v in values]
        assert powered == sorted(powered)


class TestProportionalScalingInvariance:
    INDICES = (
        ("jaccard", lambda x, y: np_jaccard(x, y)),
        ("interiority", lambda x, y: np_interiority(x, y)),
        ("coincidence", lambda x, y: coincidence(x, y, IndexParams(2.0, 1.5))),
        ("mjaccard", lambda x, y: modified_jaccard(x, y, d=3.0)),
    )

    def _pairs(self, rng, count):
        xs = list(random_mixed_vectors(rng, count))
        ys = list(random_mixed_vectors(rng, count))
        for x, y in zip(xs, ys):
            if y.shape != x.shape:
                y = rng.normal(0.0, 2.0, x.shape)
            yield x, y

    def test_invariant_under_positive_scaling(self):
        rng = np.random.default_rng(4)
        for x, y in self._pairs(rng, 150):
            if not np.any(x) or not np.any(y):
                continue
            r = rng.uniform(1e-3, 1e3)
            for _, index in self.INDICES:
                assert index(r * x, r * y) == pytest.approx(index(x, y), rel=1e-12, abs=1e-12)

    def test_exact_under_power_of_two_scaling(self):
        # powers of two rescale mantissas exactly, so the identity is bitwise
        rng = np.random.default_rng(5)
        for x, y in self._pairs(rng, 60):
            if not np.any(x) or not np.any(y):
                continue
            r = 2.0 ** rng.integers(-10, 11)
            for _, index in self.INDICES:
                assert index(r * x, r * y) == index(x, y)


class TestCommutativityAndBounds:
    def test_commutative_exact(self):
        rng = np.random.default_rng(6)
        for _ in range(150):
            dim = rng.integers(1, 6)
            x, y = rng.normal(0, 3, (2, dim))
            assert np_jaccard(x, y) == np_jaccard(y, x)
            assert np_interiority(x, y) == np_interiority(y, x)
            assert coincidence(x, y, IndexParams(2.0, 3.0)) == coincidence(y, x, IndexParams(2.0, 3.0))
            assert modified_jaccard(x, y, 2.0) == modified_jaccard(y, x, 2.0)

    @given(vectors, vectors)
    def test_bounds_hold_for_all_finite_inputs(self, x, y):
        size = min(len(x), len(y))
        x, y = np.array(x[:size]), np.array(y[:size])
        assert 0.0 <= np_jaccard(x, y) <= 1.0
        assert 0.0 <= modified_jaccard(x, y, d=2.0) <= 1.0
        if np.any(x != 0.0) and np.any(y != 0.0):
            assert 0.0 <= np_interiority(x, y) <= 1.0
            assert 0.0 <= coincidence(x, y, IndexParams(3.0, 2.0)) <= 1.0


class TestDuality:
    """Translate in the uniform domain, scale in the proportional one."""

    def _draws(self, rng, count):
        for _ in range(count):
            c = rng.uniform(1.1, 5.0)
            x1 = rng.uniform(-5.0, 5.0)
            x2 = x1 + rng.choice([-1.0, 1.0]) * rng.uniform(0.01, 3.0)
            alpha = rng.choice([-1.0, 1.0]) * rng.uniform(0.1, 3.0)
            yield c, x1, x2, alpha

    def test_ratio_invariant_under_uniform_translation(self):
        rng = np.random.default_rng(7)
        for c, x1, x2, alpha in self._draws(rng, 2000):
            before = ratio(c**x1, c**x2)
            after = ratio(c ** (x1 + alpha), c ** (x2 + alpha))
            assert after == pytest.approx(before, rel=1e-12)

    def test_diff_invariant_in_uniform_domain(self):
        rng = np.random.default_rng(8)
        for _, x1, x2, alpha in self._draws(rng, 500):
            assert diff(x1 + alpha, x2 + alpha) == pytest.approx(diff(x1, x2), rel=1e-12, abs=1e-12)

    def test_negative_control_diff_in_proportional_domain(self):
        # a uniform comparison applied to proportional features picks up c**alpha
        rng = np.random.default_rng(9)
        for c, x1, x2, alpha in self._draws(rng, 2000):
            before = diff(c**x1, c**x2)
            after = diff(c ** (x1 + alpha), c ** (x2 + alpha))
            assert abs(after - before) > 1e-6 * max(abs(before), abs(after))

    def test_relating_comparisons_base_two(self):
        rng = np.random.default_rng(10)
        for _ in range(500):
            x1, x2 = rng.uniform(-10, 10, 2)
            y1, y2 = 2.0**x1, 2.0**x2
            assert ratio(y1, y2) == pytest.approx(2.0 ** diff(x1, x2), rel=1e-12)


class TestPowerTransformApproximation:
    def test_ratio_nearly_invariant_for_large_arguments(self):
        # x**q features behave proportionally when the translation is tiny
        # relative to the argument magnitudes
        rng = np.random.default_rng(11)
        alpha = 0.01
        for q in (1, 2, 3):
            for _ in range(1000):
                x1, x2 = rng.uniform(100.0, 1000.0, 2)
                exact = ratio(x1**q, x2**q)
                translated = ratio((x1 + alpha) ** q, (x2 + alpha) ** q)
                assert abs(translated - exact) / exact < 1e-3


class TestBruteForceEquivalence:
    def test_exhaustive_small_dims_scalar(self):
        values = [float(v) for v in range(-3, 4)]
        for dim in (1, 2):
            for x in itertools.product(values, repeat=dim):
                for y in itertools.product(values, repeat=dim):
                    assert np_jaccard(x, y) == pytest.approx(brute_jaccard(x, y), abs=1e-12)
                    assert modified_jaccard(x, y, 1.0) == pytest.approx(
                        brute_modified_jaccard(x, y, 1.0), abs=1e-12
                    )

    def test_exhaustive_dim_three_batched(self):
        # batched kernel path (parity with the scalar ops is covered in
        # test_kernels); oracle stays plain Python
        values = [float(v) for v in range(-3, 4)]
        vecs = np.array(list(itertools.product(values, repeat=3)))
        for x in vecs:
            jac = one_to_many_values("jaccard", x, vecs)
            mjac = one_to_many_values("mjaccard", x, vecs)
            for idx in range(len(vecs)):
                y = vecs[idx]
                assert jac[idx] == pytest.approx(brute_jaccard(x, y), abs=1e-12)
                assert mjac[idx] == pytest.approx(brute_modified_jaccard(x, y, 1.0), abs=1e-12)

    def test_random_vectors_all_indices(self):
        rng = np.random.default_rng(12)
        for _ in range(300):
            dim = rng.integers(1, 6)
            x, y = rng.normal(0, 2, (2, dim))
            assert np_jaccard(x, y) == pytest.approx(brute_jaccard(x, y), abs=1e-12)
            assert modified_jaccard(x, y, 2.0) == pytest.approx(
                brute_modified_jaccard(x, y, 2.0), abs=1e-12
            )
            expected_interiority = brute_interiority(x, y)
            assert expected_interiority is not None
            assert np_interiority(x, y) == pytest.approx(expected_interiority, abs=1e-12)
            assert coincidence(x, y, IndexParams(2.0, 1.0)) == pytest.approx(
                brute_coincidence(x, y, 2.0, 1.0), abs=1e-12
            )
