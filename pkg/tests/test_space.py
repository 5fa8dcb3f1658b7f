"""Indefinite inner product, orthonormality, and basis changes in 2D."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyperq.algebra import EPS_ALG, J, ONE, ZERO, SplitComplex
from hyperq.errors import NotUnitaryError
from hyperq.space import (
    Mat2,
    Vec2,
    change_basis,
    doubly_stochastic_residual,
    inner,
    is_orthonormal_rows,
    orthonormality_residual,
    prob_matrix,
)
from hyperq.witness import UnitaryParams, make_decomposable_unitary

coords = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
numbers = st.builds(SplitComplex, coords, coords)
vectors = st.builds(Vec2, numbers, numbers)

unit_interval = st.floats(min_value=0.05, max_value=0.95)
small_phases = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)
unitaries = st.builds(
    lambda p, g1, g2, d: make_decomposable_unitary(UnitaryParams(p, g1, g2, d)),
    unit_interval,
    small_phases,
    small_phases,
    small_phases,
)


def hyperbolic_rotation(t: float) -> Mat2:
    c, s = math.cosh(t), math.sinh(t)
    return Mat2(
        SplitComplex(c, 0), SplitComplex(0, s), SplitComplex(0, s), SplitComplex(c, 0)
    )


class TestVec2:
    def test_arithmetic(self):
        u = Vec2(ONE, J)
        v = Vec2(J, ONE)
        assert u + v == Vec2(SplitComplex(1, 1), SplitComplex(1, 1))
        assert u - v == Vec2(SplitComplex(1, -1), SplitComplex(-1, 1))
        assert -u == Vec2(-ONE, -J)
        assert 2 * u == Vec2(SplitComplex(2, 0), SplitComplex(0, 2))
        assert u * J == Vec2(J, ONE)

    def test_norms(self):
        v = Vec2(SplitComplex(3, 2), J)
        assert v.norms_sq() == (5.0, -1.0)
        assert v.norm_sq_sum() == 4.0

    def test_list_round_trip(self):
        v = Vec2(SplitComplex(1, 2), SplitComplex(3, 4))
        assert v.to_list() == [[1, 2], [3, 4]]
        assert Vec2.from_list(v.to_list()) == v

    @pytest.mark.parametrize("bad", [[[1, 2]], [[1, 2], [3]], "xy", [1, 2]])
    def test_from_list_rejects(self, bad):
        with pytest.raises(ValueError):
            Vec2.from_list(bad)


class TestMat2:
    def test_rows_and_entries(self):
        m = Mat2.identity()
        assert m.row1 == Vec2.basis1()
        assert m.row2 == Vec2.basis2()
        assert m.entries() == (ONE, ZERO, ZERO, ONE)
        assert Mat2.from_rows(m.row1, m.row2) == m

    def test_list_round_trip(self):
        m = hyperbolic_rotation(0.3)
        assert Mat2.from_list(m.to_list()) == m

    @pytest.mark.parametrize("bad", [[[1, 2], [3, 4]], [[[1, 2]]], None])
    def test_from_list_rejects(self, bad):
        with pytest.raises(ValueError):
            Mat2.from_list(bad)


class TestInner:
    def test_unit_basis_vector(self):
        assert inner(Vec2.basis1(), Vec2.basis1()) == ONE

    def test_indefiniteness(self):
        v = Vec2(J, ZERO)
        assert inner(v, v) == SplitComplex(-1, 0)

    @given(vectors, vectors)
    def test_conjugate_symmetry(self, u, v):
        assert inner(u, v) == inner(v, u).conj()

    @given(vectors)
    def test_self_product_is_real(self, u):
        assert inner(u, u).y == 0.0

    @given(vectors, vectors, vectors, numbers, numbers)
    def test_linear_in_first_argument(self, u, w, v, a, b):
        left = inner(u * a + w * b, v)
        right = inner(u, v) * a + inner(w, v) * b
        scale = (a.mag() + b.mag()) * (u.c1.mag() + u.c2.mag() + w.c1.mag() + w.c2.mag())
        scale *= v.c1.mag() + v.c2.mag()
        assert left.dist(right) <= EPS_ALG * max(1.0, scale)

    @given(vectors)
    def test_nondegenerate_on_probes(self, z):
        # the four real-coordinate probes pin down every component
        probes = [
            Vec2(ONE, ZERO),
            Vec2(J, ZERO),
            Vec2(ZERO, ONE),
            Vec2(ZERO, J),
        ]
        if all(inner(z, e) == SplitComplex(0, 0) for e in probes):
            assert z == Vec2(ZERO, ZERO)


class TestOrthonormality:
    def test_identity(self):
        assert is_orthonormal_rows(Mat2.identity())
        assert orthonormality_residual(Mat2.identity()) == 0.0

    def test_hyperbolic_rotation(self):
        assert is_orthonormal_rows(hyperbolic_rotation(0.7), 1e-9)

    def test_repeated_row(self):
        m = Mat2(ONE, ZERO, ONE, ZERO)
        assert not is_orthonormal_rows(m)

    def test_rejects_negative_tolerance(self):
        with pytest.raises(ValueError):
            is_orthonormal_rows(Mat2.identity(), -1.0)

    @given(unitaries)
    def test_generated_unitaries_pass(self, m):
        assert is_orthonormal_rows(m, 1e-9)


class TestChangeBasis:
    def test_identity_change(self):
        v = Vec2.basis1()
        assert change_basis(v, Mat2.identity()) == v

    def test_basis_vector_maps_to_row(self):
        m = hyperbolic_rotation(0.4)
        assert change_basis(Vec2.basis1(), m) == m.row1

    def test_rejects_non_unitary(self):
        with pytest.raises(NotUnitaryError):
            change_basis(Vec2.basis1(), Mat2(ONE, ZERO, ONE, ZERO))

    @given(vectors, unitaries)
    def test_preserves_norm_sum(self, v, m):
        before = v.norm_sq_sum()
        after = change_basis(v, m).norm_sq_sum()
        scale = max(1.0, v.c1.mag() ** 2 + v.c2.mag() ** 2)
        assert abs(after - before) <= 1e-7 * scale


class TestProbMatrix:
    def test_identity(self):
        np.testing.assert_array_equal(prob_matrix(Mat2.identity()), np.eye(2))

    def test_balanced_generator(self):
        m = make_decomposable_unitary(UnitaryParams(0.5, 0.8, 0.8, 0.2))
        np.testing.assert_allclose(prob_matrix(m), np.full((2, 2), 0.5), atol=1e-12)

    @given(unitaries)
    def test_generated_unitaries_are_doubly_stochastic(self, m):
        assert doubly_stochastic_residual(prob_matrix(m)) <= 1e-9

    def test_residual_measures_worst_sum(self):
        p = np.array([[0.6, 0.4], [0.3, 0.5]])
        assert doubly_stochastic_residual(p) == pytest.approx(0.2)
