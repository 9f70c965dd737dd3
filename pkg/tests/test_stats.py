"""Column statistics and the tabular round trip."""

import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from propnorm.errors import ValidationError
from propnorm.stats import FeatureMatrix, column_stats, load_matrix, write_matrix

from oracles import brute_rms

finite_columns = st.lists(
    st.floats(min_value=-100.0, max_value=100.0, allow_nan=False), min_size=1, max_size=30
)


class TestColumnStats:
    def test_symmetric_three_points(self):
        stats = column_stats([1.0, 2.0, 3.0])
        assert stats.mean == pytest.approx(2.0)
        assert stats.std == pytest.approx(1.0)  # sqrt((1+0+1)/2)
        assert stats.min == 1.0
        assert stats.max == 3.0

    def test_positive_dispersion(self):
        # frozen from brute_rms([3, 4]) = sqrt((9+16)/2)
        stats = column_stats([3.0, 4.0])
        assert stats.xi_p == pytest.approx(3.5355339059327378, rel=1e-12)
        assert stats.xi_p == pytest.approx(brute_rms([3.0, 4.0]), rel=1e-12)
        assert stats.xi_n == 0.0
        assert stats.n_n == 0

    def test_mixed_sign_dispersions(self):
        stats = column_stats([-1.0, 2.0, 4.0])
        assert stats.xi_n == pytest.approx(1.0, rel=1e-12)
        assert stats.xi_p == pytest.approx(math.sqrt(10.0), rel=1e-12)
        assert stats.xi_p == pytest.approx(brute_rms([2.0, 4.0]), rel=1e-12)
        assert (stats.n_p, stats.n_n) == (2, 1)

    def test_zeros_in_neither_population(self):
        stats = column_stats([0.0, 0.0, 2.0])
        assert (stats.n_p, stats.n_n) == (1, 0)
        assert stats.xi_p == pytest.approx(2.0)
        assert stats.xi_n == 0.0

    def test_single_sample_std_zero(self):
        assert column_stats([7.0]).std == 0.0

    def test_constant_column_mean_and_std_exact(self):
        # raw float summation puts the mean of this column an ulp below min
        value = 85.66330577063579
        stats = column_stats([value, value, value])
        assert stats.mean == value
        assert stats.std == 0.0

    def test_empty_column(self):
        with pytest.raises(ValidationError):
            column_stats([])

    def test_non_finite_entry(self):
        with pytest.raises(ValidationError):
            column_stats([1.0, float("nan"), 2.0])

    def test_large_magnitudes_do_not_overflow_xi(self):
        stats = column_stats([1e200, 3e200])
        assert stats.xi_p == pytest.approx(brute_rms([1.0, 3.0]) * 1e200, rel=1e-12)

    @given(finite_columns)
    def test_min_mean_max_ordering(self, column):
        stats = column_stats(column)
        assert stats.min <= stats.mean <= stats.max
        assert stats.std >= 0.0
        assert stats.xi_p >= 0.0 and stats.xi_n >= 0.0
        if stats.n_p == 0:
            assert stats.xi_p == 0.0
        if stats.n_n == 0:
            assert stats.xi_n == 0.0

    @given(finite_columns, st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
    def test_std_translation_invariance(self, column, shift):
        base = column_stats(column).std
        shifted = column_stats([v + shift for v in column]).std
        assert abs(shifted - base) < 1e-12

    @given(finite_columns, st.floats(min_value=1e-3, max_value=1e3, allow_nan=False))
    def test_xi_pure_scaling(self, column, factor):
        base = column_stats(column)
        scaled = column_stats([factor * v for v in column])
        assert scaled.xi_p == pytest.approx(factor * base.xi_p, rel=1e-12, abs=1e-300)
        assert scaled.xi_n == pytest.approx(factor * base.xi_n, rel=1e-12, abs=1e-300)


class TestFeatureMatrix:
    def test_basic_construction(self):
        m = FeatureMatrix(np.array([[1.0, 2.0]]), ("f1", "f2"), ("A",))
        assert m.n_rows == 1 and m.n_features == 2
        assert m.column("f2")[0] == 2.0

    def test_rejects_nan(self):
        with pytest.raises(ValidationError, match="non-finite"):
            FeatureMatrix(np.array([[1.0], [float("inf")]]), ("f1",))

    def test_rejects_duplicate_names(self):
        with pytest.raises(ValidationError, match="duplicate"):
            FeatureMatrix(np.array([[1.0, 2.0]]), ("f1", "f1"))

    def test_rejects_label_length_mismatch(self):
        with pytest.raises(ValidationError):
            FeatureMatrix(np.array([[1.0], [2.0]]), ("f1",), ("A",))

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            FeatureMatrix(np.empty((0, 1)), ("f1",))


class TestLoadMatrix:
    def test_parses_labels(self):
        m = load_matrix(io.StringIO("f1,f2,label\n1.0,2.0,A\n"))
        assert m.n_rows == 1 and m.n_features == 2
        assert m.labels == ("A",)
        assert m.feature_names == ("f1", "f2")

    def test_non_numeric_cell_reports_position(self):
        with pytest.raises(ValidationError, match=r"row 1, column 'f1'"):
            load_matrix(io.StringIO("f1\nx\n"))

    def test_empty_stream(self):
        with pytest.raises(ValidationError, match="no header"):
            load_matrix(io.StringIO(""))

    def test_ragged_row_reports_row(self):
        with pytest.raises(ValidationError, match="ragged row 2"):
            load_matrix(io.StringIO("f1,f2\n1,2\n3\n"))

    def test_duplicate_header(self):
        with pytest.raises(ValidationError, match="duplicate"):
            load_matrix(io.StringIO("f1,f1\n1,2\n"))

    def test_label_column_any_position(self):
        m = load_matrix(io.StringIO("label,f1\nB,4.5\n"))
        assert m.labels == ("B",)
        assert m.values[0, 0] == 4.5


class TestRoundTrip:
    @given(
        st.lists(
            st.lists(st.floats(min_value=-1e9, max_value=1e9, allow_nan=False), min_size=2, max_size=2),
            min_size=1,
            max_size=8,
        )
    )
    @settings(max_examples=50)
    def test_write_then_load_exact(self, rows):
        m = FeatureMatrix(np.array(rows), ("f1", "f2"), ("A",) * len(rows))
        buffer = io.StringIO()
        write_matrix(m, buffer)
        buffer.seek(0)
        again = load_matrix(buffer)
        assert np.array_equal(again.values, m.values)
        assert again.labels == m.labels
        assert again.feature_names == m.feature_names

    def test_awkward_floats_round_trip(self, tmp_path):
        values = np.array([[0.1, 1 / 3], [math.pi, 2**-40]])
        m = FeatureMatrix(values, ("f1", "f2"))
        path = tmp_path / "data.csv"
        write_matrix(m, path)
        again = load_matrix(path)
        assert np.array_equal(again.values, values)
        assert again.labels is None
