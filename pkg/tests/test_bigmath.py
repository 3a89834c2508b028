"""Limb arithmetic against plain-integer oracles, plus the frozen examples."""

import random

import pytest

from montecc import Nat

# (t, w) shapes whose full width fits native integers for oracle checks.
SMALL_SHAPES = [(1, 4), (2, 8), (4, 16), (16, 4), (8, 8)]


def nat(value, t, w):
    return Nat.from_int(value, t, w)


class TestHex:
    def test_zero(self):
        assert Nat.from_hex("00", 1, 16).limbs == (0,)

    def test_single_limb(self):
        assert Nat.from_hex("0d", 1, 16).limbs == (13,)

    def test_two_limbs(self):
        # 0x0001000a = 65546 = 1*2^16 + 10
        assert Nat.from_hex("0001000a", 2, 16).limbs == (10, 1)

    def test_to_hex_even_digits(self):
        assert nat(0, 1, 16).to_hex() == "00"
        assert nat(13, 1, 16).to_hex() == "0d"
        assert nat(0x1234, 2, 16).to_hex() == "1234"
        assert nat(0x123, 2, 16).to_hex() == "0123"

    @pytest.mark.parametrize("t,w", SMALL_SHAPES)
    def test_round_trip_random(self, t, w, rng):
        for _ in range(200):
            x = nat(rng.getrandbits(t * w), t, w)
            assert Nat.from_hex(x.to_hex(), t, w) == x

    @pytest.mark.parametrize("bad", ["", "zz", "+12", "1_2", "0x12", "12 34"])
    def test_invalid_hex(self, bad):
        with pytest.raises(ValueError):
            Nat.from_hex(bad, 2, 16)

    def test_overflow(self):
        with pytest.raises(ValueError):
            Nat.from_hex("010000", 1, 16)

    def test_bytes_round_trip(self):
        x = nat(0xBEEF, 2, 16)
        assert x.to_bytes(4) == b"\x00\x00\xbe\xef"
        assert Nat.from_bytes(x.to_bytes(), 2, 16) == x


class TestAdd:
    def test_identity(self):
        x = nat(1234, 2, 16)
        total, carry = Nat.zero(2, 16).add(x)
        assert (total, carry) == (x, 0)

    def test_wraparound(self):
        total, carry = nat(65535, 1, 16).add(nat(1, 1, 16))
        assert total.to_int() == 0 and carry == 1

    def test_cross_limb_carry(self):
        total, carry = nat(65535, 2, 16).add(nat(2, 2, 16))
        assert total.limbs == (1, 1) and carry == 0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape mismatch"):
            nat(1, 1, 16).add(nat(1, 2, 16))
        with pytest.raises(ValueError, match="shape mismatch"):
            nat(1, 2, 8).add(nat(1, 2, 16))


class TestSub:
    def test_identity(self):
        x = nat(777, 2, 16)
        diff, borrow = x.sub(Nat.zero(2, 16))
        assert (diff, borrow) == (x, 0)

    def test_borrow_wrap(self):
        diff, borrow = nat(5, 1, 16).sub(nat(7, 1, 16))
        assert diff.to_int() == 65534 and borrow == 1

    def test_self_cancel(self):
        diff, borrow = nat(13, 1, 16).sub(nat(13, 1, 16))
        assert diff.to_int() == 0 and borrow == 0

    def test_add_sub_inverse(self, rng):
        for _ in range(300):
            a = nat(rng.getrandbits(30), 2, 16)
            b = nat(rng.getrandbits(30), 2, 16)
            total, carry = a.add(b)
            if carry == 0:
                assert total.sub(b) == (a, 0)


class TestCmp:
    def test_equal(self):
        assert Nat.zero(2, 16).cmp(Nat.zero(2, 16)) == 0

    def test_high_limb_wins(self):
        a = Nat((0, 1), 16)
        b = Nat((65535, 0), 16)
        assert a.cmp(b) == 1
        assert b.cmp(a) == -1

    def test_less(self):
        assert nat(12, 1, 16).cmp(nat(13, 1, 16)) == -1

    def test_total_order_exhaustive_w4(self):
        values = [nat(v, 1, 4) for v in range(16)]
        for i, a in enumerate(values):
            for j, b in enumerate(values):
                expected = (i > j) - (i < j)
                assert a.cmp(b) == expected

    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape mismatch"):
            nat(0, 1, 4).cmp(nat(0, 2, 4))


class TestShl1:
    def test_zero(self):
        shifted, carry = Nat.zero(1, 16).shl1()
        assert shifted.to_int() == 0 and carry == 0

    def test_top_bit_out(self):
        shifted, carry = nat(32768, 1, 16).shl1()
        assert shifted.to_int() == 0 and carry == 1

    def test_double(self):
        shifted, carry = nat(13, 1, 16).shl1()
        assert shifted.to_int() == 26 and carry == 0


class TestBits:
    def test_bit_values(self):
        x = nat(13, 1, 16)  # 0b1101
        assert [x.bit(i) for i in range(4)] == [1, 0, 1, 1]

    def test_bit_out_of_range(self):
        x = nat(13, 1, 16)
        with pytest.raises(IndexError):
            x.bit(16)
        with pytest.raises(IndexError):
            x.bit(-1)

    def test_bitlen_zero(self):
        assert Nat.zero(3, 16).bitlen() == 0

    def test_bitlen_cross_limb(self):
        assert Nat((0, 1), 16).bitlen() == 17

    def test_bitlen_random(self, rng):
        for _ in range(200):
            v = rng.getrandbits(60)
            assert nat(v, 4, 16).bitlen() == v.bit_length()


class TestConstruction:
    def test_negative(self):
        with pytest.raises(ValueError):
            Nat.from_int(-1, 1, 16)

    def test_capacity(self):
        with pytest.raises(ValueError):
            Nat.from_int(1 << 16, 1, 16)

    def test_limb_range(self):
        with pytest.raises(ValueError):
            Nat((16,), 4)

    def test_bad_width(self):
        with pytest.raises(ValueError):
            Nat((0,), 0)
        with pytest.raises(ValueError):
            Nat((0,), 65)

    def test_no_limbs(self):
        with pytest.raises(ValueError):
            Nat((), 16)


@pytest.mark.parametrize("t,w", SMALL_SHAPES)
def test_against_wide_integer_oracle(each_backend, t, w):
    """add/sub/cmp/shl1/bit/bitlen all agree with native int arithmetic."""
    rng = random.Random(t * 1000 + w)
    width = t * w
    mask = (1 << width) - 1
    for _ in range(2000):
        av = rng.getrandbits(width)
        bv = rng.getrandbits(width)
        a, b = nat(av, t, w), nat(bv, t, w)

        total, carry = a.add(b)
        assert total.to_int() == (av + bv) & mask
        assert carry == (av + bv) >> width

        diff, borrow = a.sub(b)
        assert diff.to_int() == (av - bv) & mask
        assert borrow == (1 if av < bv else 0)

        assert a.cmp(b) == (av > bv) - (av < bv)

        shifted, out = a.shl1()
        assert shifted.to_int() == (av << 1) & mask
        assert out == av >> (width - 1)

        i = rng.randrange(width)
        assert a.bit(i) == (av >> i) & 1
        assert a.bitlen() == av.bit_length()
