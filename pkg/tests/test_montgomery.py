"""Montgomery arithmetic: exhaustive small-modulus checks and 160-bit spot checks."""

import random

import pytest

from montecc import FieldElem, MontCtx, Nat, OpCounters

P160 = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF7FFFFFFF  # 2**160 - 2**31 - 1


@pytest.fixture
def ctx13(each_backend):
    # p = 13, one 4-bit limb: R = 16, R^-1 mod 13 = 9, R^2 mod 13 = 9.
    return MontCtx(13, t=1, w=4)


@pytest.fixture(scope="module")
def ctx160():
    return MontCtx(P160, t=10, w=16)


def elem(ctx, montgomery_value):
    return FieldElem(Nat.from_int(montgomery_value, ctx.t, ctx.w), ctx)


class TestCtxNew:
    def test_pbar_13(self, ctx13):
        assert ctx13.pbar == 11  # 13^-1 mod 16 = 5, -5 mod 16 = 11

    def test_pbar_23(self):
        ctx = MontCtx(23, t=2, w=4)
        assert ctx.pbar == 9  # 23 = 7 mod 16; 7^-1 = 7; -7 mod 16 = 9

    def test_pbar_identity(self):
        # (p * p^-1) mod 2^w = 1 with p^-1 = -pbar mod 2^w, over assorted moduli.
        for p, t, w in [(13, 1, 4), (23, 2, 4), (17, 1, 16), (P160, 10, 16)]:
            ctx = MontCtx(p, t=t, w=w)
            b = 1 << w
            assert (p * (-ctx.pbar % b)) % b == 1

    def test_r2(self, ctx13):
        assert ctx13.r2.to_int() == 9  # 256 mod 13

    def test_even_modulus(self):
        with pytest.raises(ValueError, match="odd"):
            MontCtx(12, t=1, w=4)

    def test_zero_modulus(self):
        with pytest.raises(ValueError, match="nonzero"):
            MontCtx(0, t=1, w=4)

    def test_modulus_at_least_r(self):
        with pytest.raises(ValueError, match="fit"):
            MontCtx(23, t=1, w=4)  # R = 16 < 23
        with pytest.raises(ValueError, match="fit"):
            MontCtx(17, t=1, w=4)


class TestToMont:
    def test_zero(self, ctx13):
        assert ctx13.to_mont(0).value.to_int() == 0

    def test_one(self, ctx13):
        assert ctx13.to_mont(1).value.to_int() == 3  # 16 mod 13

    def test_nine(self, ctx13):
        assert ctx13.to_mont(9).value.to_int() == 1  # 144 mod 13

    def test_rejects_unreduced(self, ctx13):
        with pytest.raises(ValueError, match="reduced"):
            ctx13.to_mont(13)

    def test_loop_equals_mul_by_r2(self, ctx13):
        for x in range(13):
            assert ctx13.to_mont(x) == ctx13.to_mont_by_mul(x)

    def test_loop_equals_mul_by_r2_160(self, ctx160, rng):
        for _ in range(100):
            x = rng.randrange(P160)
            assert ctx160.to_mont(x) == ctx160.to_mont_by_mul(x)


class TestMontMul:
    def test_annihilator(self, ctx13):
        y = ctx13.to_mont(7)
        assert ctx13.mont_mul(ctx13.zero(), y).is_zero()

    def test_worked_example(self, ctx13):
        # to_mont(5) = 2, to_mont(7) = 8, 5*7 = 9 mod 13, to_mont(9) = 1.
        X, Y = elem(ctx13, 2), elem(ctx13, 8)
        assert ctx13.mont_mul(X, Y) == elem(ctx13, 1)

    def test_plain_times_r2_converts(self, ctx13):
        # Multiplying a plain residue by R^2 lands in Montgomery form.
        assert ctx13.mont_mul(elem(ctx13, 5), elem(ctx13, 9)) == ctx13.to_mont(5)

    def test_exhaustive_against_oracle(self, ctx13):
        # Z = X*Y*R^-1 mod p for every residue pair; R^-1 = 9 mod 13.
        for x in range(13):
            for y in range(13):
                got = ctx13.mont_mul(elem(ctx13, x), elem(ctx13, y))
                assert got.value.to_int() == x * y * 9 % 13

    def test_context_mismatch(self, ctx13):
        other = MontCtx(11, t=1, w=4)
        with pytest.raises(ValueError, match="context"):
            ctx13.mont_mul(ctx13.one(), other.one())

    def test_counter(self, ctx13):
        ctr = OpCounters()
        ctx13.mont_mul(ctx13.one(), ctx13.one(), ctr)
        assert ctr.mont_muls == 1


class TestFromMont:
    def test_zero(self, ctx13):
        assert ctx13.from_mont(ctx13.zero()).to_int() == 0

    def test_halving_trace_3(self, ctx13):
        # 3 -> 8 -> 4 -> 2 -> 1 over n_bits = 4 steps.
        assert ctx13.from_mont(elem(ctx13, 3)).to_int() == 1

    def test_halving_trace_2(self, ctx13):
        # 2 -> 1 -> 7 -> 10 -> 5.
        assert ctx13.from_mont(elem(ctx13, 2)).to_int() == 5

    @pytest.mark.parametrize("p,t,w", [(13, 1, 4), (23, 2, 4)])
    def test_round_trip_exhaustive(self, each_backend, p, t, w):
        ctx = MontCtx(p, t=t, w=w)
        for x in range(p):
            assert ctx.from_mont(ctx.to_mont(x)).to_int() == x

    @pytest.mark.parametrize("p,t,w", [(13, 1, 4), (23, 2, 4)])
    def test_halving_equals_mul_by_one(self, each_backend, p, t, w):
        ctx = MontCtx(p, t=t, w=w)
        for v in range(p):
            X = elem(ctx, v)
            assert ctx.from_mont(X) == ctx.from_mont_by_mul(X)

    def test_round_trip_160(self, ctx160, rng):
        for _ in range(1000):
            x = rng.randrange(P160)
            assert ctx160.from_mont(ctx160.to_mont(x)).to_int() == x

    def test_halving_equals_mul_by_one_160(self, ctx160, rng):
        for _ in range(200):
            X = ctx160.to_mont(rng.randrange(P160))
            assert ctx160.from_mont(X) == ctx160.from_mont_by_mul(X)


class TestModAddSub:
    def test_add_identity(self, ctx13):
        x = ctx13.to_mont(7)
        assert ctx13.mod_add(x, ctx13.zero()) == x

    def test_add_wraps(self, ctx13):
        assert ctx13.mod_add(elem(ctx13, 7), elem(ctx13, 9)) == elem(ctx13, 3)

    def test_sub_wraps(self, ctx13):
        assert ctx13.mod_sub(elem(ctx13, 3), elem(ctx13, 7)) == elem(ctx13, 9)

    def test_closed_and_inverse(self, ctx160, rng):
        for _ in range(300):
            a = ctx160.to_mont(rng.randrange(P160))
            b = ctx160.to_mont(rng.randrange(P160))
            s = ctx160.mod_add(a, b)
            assert s.value.to_int() < P160
            d = ctx160.mod_sub(s, b)
            assert d == a
            assert ctx160.mod_sub(a, b).value.to_int() < P160

    def test_counters(self, ctx13):
        ctr = OpCounters()
        ctx13.mod_add(ctx13.one(), ctx13.one(), ctr)
        ctx13.mod_sub(ctx13.one(), ctx13.one(), ctr)
        assert (ctr.field_adds, ctr.field_subs) == (1, 1)


class TestHomomorphism:
    def test_products_map_correctly_160(self, ctx160, rng):
        for _ in range(200):
            a = rng.randrange(P160)
            b = rng.randrange(P160)
            got = ctx160.from_mont(
                ctx160.mont_mul(ctx160.to_mont(a), ctx160.to_mont(b))
            ).to_int()
            assert got == a * b % P160

    def test_products_exhaustive_13(self, ctx13):
        for a in range(13):
            for b in range(13):
                got = ctx13.from_mont(
                    ctx13.mont_mul(ctx13.to_mont(a), ctx13.to_mont(b))
                ).to_int()
                assert got == a * b % 13


class TestMontInv:
    def test_one_is_self_inverse(self, ctx13):
        assert ctx13.mont_inv(ctx13.one()) == ctx13.one()

    def test_worked_example(self, ctx13):
        assert ctx13.mont_inv(ctx13.to_mont(5)) == ctx13.to_mont(8)  # 5*8 = 40 = 1

    def test_zero_rejected(self, ctx13):
        with pytest.raises(ZeroDivisionError):
            ctx13.mont_inv(ctx13.zero())

    def test_exhaustive_13(self, ctx13):
        for x in range(1, 13):
            X = ctx13.to_mont(x)
            assert ctx13.mont_mul(X, ctx13.mont_inv(X)) == ctx13.one()

    def test_random_160(self, ctx160, rng):
        for _ in range(50):
            X = ctx160.to_mont(rng.randrange(1, P160))
            assert ctx160.mont_mul(X, ctx160.mont_inv(X)) == ctx160.one()

    def test_counts_inversion_and_muls(self, ctx160):
        ctr = OpCounters()
        ctx160.mont_inv(ctx160.to_mont(12345), ctr)
        assert ctr.inversions == 1
        e = P160 - 2
        assert ctr.mont_muls == (e.bit_length() - 1) + (bin(e).count("1") - 1)


class TestFieldElem:
    def test_constructor_rejects_unreduced(self, ctx13):
        with pytest.raises(ValueError, match="reduced"):
            FieldElem(Nat.from_int(13, 1, 4), ctx13)

    def test_constructor_rejects_wrong_shape(self, ctx13):
        with pytest.raises(ValueError, match="shape"):
            FieldElem(Nat.from_int(1, 2, 4), ctx13)

    def test_equality_requires_same_modulus(self, ctx13):
        other = MontCtx(11, t=1, w=4)
        assert elem(ctx13, 1) != FieldElem(Nat.from_int(1, 1, 4), other)

    def test_nat_operand_wrong_shape(self, ctx13):
        with pytest.raises(ValueError, match="shape"):
            ctx13.to_mont(Nat.from_int(1, 2, 4))
