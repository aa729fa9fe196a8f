"""Tests for the fiber operation and inverse keys."""

import numpy as np
import pytest

from zsigil.config.schema import FiberConfig
from zsigil.exceptions import (
    BasePointMismatchError,
    FiberError,
    GenerationError,
    InverseUndefinedError,
    KeyDerivationError,
)
from zsigil.geometry.fiber import (
    CubicFrameRealization,
    Endomorphism,
    FiberOperation,
    derive_operation,
    forward_key,
    inverse_key,
    normalized_trace,
    seed_generator,
    star,
)
from zsigil.geometry.manifold import TangentVector, sample_point


def _random_key(rng, r):
    magnitudes = 10.0 ** rng.uniform(-2.0, 2.0, size=r)
    return magnitudes * rng.choice([-1.0, 1.0], size=r)


class TestStar:
    """Tests for the fiber operation itself."""

    def test_degenerate_worked_example(self, model2):
        p = model2.point([0.0, 0.0])
        op = FiberOperation.degenerate(p)
        x = star(op, TangentVector(p, [42.0, 10.5]), TangentVector(p, [0.5, 2.0]))
        assert np.array_equal(x.entries, np.diag([21.0, 21.0]))
        assert normalized_trace(x.scaled(1.0 / 3.0)) == pytest.approx(7.0)

    def test_homogeneous_in_first_slot(self, model, rng):
        p = sample_point(model, rng)
        op = derive_operation(model, p, rng.bytes(32))
        u = TangentVector(p, rng.standard_normal(6))
        v = TangentVector(p, rng.standard_normal(6))
        base = star(op, u, v).entries
        for lam in (-2.0, 0.5):
            assert np.array_equal(star(op, u.scaled(lam), v).entries, lam * base)
        assert np.allclose(star(op, u.scaled(3.0), v).entries, 3.0 * base)

    def test_noncommutative(self, model, rng):
        for _ in range(100):
            p = sample_point(model, rng)
            op = derive_operation(model, p, rng.bytes(32))
            assert np.all(op.keymap_b > 0.0)
            u = TangentVector(p, rng.standard_normal(6))
            v = TangentVector(p, rng.standard_normal(6))
            assert star(op, u, v).distance(star(op, v, u)) > 1e-6

    def test_image_algebra_associative(self, model, rng):
        for _ in range(100):
            p = sample_point(model, rng)
            op = derive_operation(model, p, rng.bytes(32))
            x, y, z = (
                star(
                    op,
                    TangentVector(p, rng.uniform(0.5, 1.5, size=6)),
                    TangentVector(p, rng.uniform(0.5, 1.5, size=6)),
                )
                for _ in range(3)
            )
            # Round-off of a matrix product is bounded by the product of norms
            scale = np.prod([np.linalg.norm(m.entries) for m in (x, y, z)])
            assert ((x @ y) @ z).distance(x @ (y @ z)) <= 1e-10 * scale

    def test_mixing_fibers_rejected(self, model2):
        p = model2.point([0.0, 0.0])
        q = model2.point([0.5, 0.0])
        op = FiberOperation.degenerate(p)
        with pytest.raises(BasePointMismatchError):
            star(op, TangentVector(p, [1.0, 1.0]), TangentVector(q, [1.0, 1.0]))

    def test_depends_on_base_point(self, model):
        seed = bytes(32)
        a = derive_operation(model, model.point([0.1] * 6), seed)
        b = derive_operation(model, model.point([0.4] * 6), seed)
        assert not np.array_equal(a.frame, b.frame)

    def test_deterministic(self, model):
        p = model.point([0.3] * 6)
        a = derive_operation(model, p, bytes(range(32)))
        b = derive_operation(model, p, bytes(range(32)))
        assert np.array_equal(a.frame, b.frame)
        assert np.array_equal(a.keymap_a, b.keymap_a)
        assert np.array_equal(a.keymap_b, b.keymap_b)


class TestInverseKey:
    """Tests for the identity law e (*) inverse_key(e) = 1."""

    def test_identity_law_random_instances(self, model, rng):
        for _ in range(200):
            p = sample_point(model, rng)
            op = derive_operation(model, p, rng.bytes(32))
            e = TangentVector(p, _random_key(rng, 6))
            d = inverse_key(op, e)
            assert star(op, e, d).distance_to_identity() < 1e-9

    @pytest.mark.slow
    def test_identity_law_thousand_instances(self, model):
        rng = np.random.default_rng(99)
        worst = 0.0
        for _ in range(1000):
            p = sample_point(model, rng)
            op = derive_operation(model, p, rng.bytes(32))
            e = TangentVector(p, _random_key(rng, 6))
            worst = max(worst, star(op, e, inverse_key(op, e)).distance_to_identity())
        assert worst < 1e-9

    def test_degenerate_reciprocal(self, model2):
        p = model2.point([0.0, 0.0])
        op = FiberOperation.degenerate(p)
        d = inverse_key(op, TangentVector(p, [2.0, 0.5]))
        assert d.components == pytest.approx([0.5, 2.0])

    def test_cubic_inverse_solves_key_map(self, model2):
        p = model2.point([0.0, 0.0])
        op = FiberOperation.degenerate(p, b=1.0)
        # eta(x) = x + x^3, eta(1) = 2, eta(-2) = -10
        d = inverse_key(op, TangentVector(p, [0.5, -0.1]))
        assert d.components == pytest.approx([1.0, -2.0], rel=1e-12)

    def test_inverse_stays_in_fiber(self, model, rng):
        p = sample_point(model, rng)
        op = derive_operation(model, p, rng.bytes(32))
        d = inverse_key(op, TangentVector(p, _random_key(rng, 6)))
        assert d.base == p

    def test_zero_component_undefined(self, model2):
        p = model2.point([0.0, 0.0])
        op = FiberOperation.degenerate(p)
        with pytest.raises(InverseUndefinedError):
            inverse_key(op, TangentVector(p, [1.0, 0.0]))

    def test_forward_key_inverts_inverse_key(self, model, rng):
        p = sample_point(model, rng)
        op = derive_operation(model, p, rng.bytes(32))
        e = TangentVector(p, _random_key(rng, 6))
        back = forward_key(op, inverse_key(op, e))
        assert np.allclose(back.components, e.components, rtol=1e-12)

    def test_forward_key_of_zero_fails(self, model2):
        p = model2.point([0.0, 0.0])
        op = FiberOperation.degenerate(p)
        with pytest.raises(KeyDerivationError):
            forward_key(op, TangentVector(p, [0.0, 1.0]))


class TestFiberOperation:
    """Tests for operation construction and derivation."""

    def test_keymap_must_be_increasing(self, model2):
        p = model2.point([0.0, 0.0])
        with pytest.raises(FiberError):
            FiberOperation.from_frame(p, np.eye(2), [-1.0, 1.0], [0.0, 0.0])

    def test_frame_determinant_guard(self, model, rng):
        p = sample_point(model, rng)
        for _ in range(20):
            op = derive_operation(model, p, rng.bytes(32))
            assert abs(op.frame_det) >= 1e-6

    def test_frame_budget_exhaustion(self, model, rng):
        config = FiberConfig(min_frame_det=1e12)
        with pytest.raises(GenerationError):
            derive_operation(model, sample_point(model, rng), rng.bytes(32), config, 4)

    def test_keymap_ranges(self, model, rng):
        op = derive_operation(model, sample_point(model, rng), rng.bytes(32))
        assert np.all((op.keymap_a > 0.0) & (op.keymap_a <= 2.0))
        assert np.all((op.keymap_b >= 0.0) & (op.keymap_b <= 1.0))

    def test_degenerate_config(self, model, rng):
        realization = CubicFrameRealization(FiberConfig(degenerate=True))
        op = realization.derive(model, sample_point(model, rng), rng.bytes(32))
        assert realization.name == "degenerate"
        assert np.array_equal(op.frame, np.eye(6))
        assert np.array_equal(op.keymap_b, np.zeros(6))

    def test_seed_must_be_32_bytes(self):
        with pytest.raises(FiberError):
            seed_generator(b"short")


class TestEndomorphism:
    """Tests for the matrix wrapper and normalized trace."""

    def test_identity_distance(self):
        assert Endomorphism.identity(4).distance_to_identity() == 0.0

    def test_composition(self):
        a = Endomorphism(np.diag([2.0, 3.0]))
        assert np.array_equal((a @ a).entries, np.diag([4.0, 9.0]))

    def test_normalized_trace(self):
        assert normalized_trace(np.diag([1.0, 2.0, 3.0, 6.0])) == 3.0
        assert normalized_trace(Endomorphism.identity(6)) == 1.0
