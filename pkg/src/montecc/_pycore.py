"""Pure-Python limb kernels.

This is the portable fallback for the compiled core in ``_core.pyx``; both
expose the same nine functions with identical semantics. Operands are limb
tuples (little-endian, every limb < 2**w) of equal length. Functions return
fresh tuples and never mutate their inputs.
"""

from __future__ import annotations

NAME = "py"


def add(a, b, w):
    """Limb-wise a + b mod 2**(w*t); returns (limbs, carry_out)."""
    mask = (1 << w) - 1
    out = []
    carry = 0
    for x, y in zip(a, b):
        s = x + y + carry
        out.append(s & mask)
        carry = s >> w
    return tuple(out), carry


def sub(a, b, w):
    """Limb-wise a - b mod 2**(w*t); returns (limbs, borrow_out)."""
    mask = (1 << w) - 1
    out = []
    borrow = 0
    for x, y in zip(a, b):
        s = x - y - borrow
        out.append(s & mask)
        borrow = 1 if s < 0 else 0
    return tuple(out), borrow


def cmp(a, b):
    """-1, 0 or 1 as a <, ==, > b; most-significant limb decides first."""
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return -1 if x < y else 1
    return 0


def shl1(a, w):
    """Left shift by one bit; returns (limbs, shifted-out top bit)."""
    mask = (1 << w) - 1
    out = []
    carry = 0
    for x in a:
        s = (x << 1) | carry
        out.append(s & mask)
        carry = s >> w
    return tuple(out), carry


def mod_add(a, b, p, w):
    """(a + b) mod p for a, b < p."""
    s, carry = add(a, b, w)
    if carry or cmp(s, p) >= 0:
        s, _ = sub(s, p, w)
    return s


def mod_sub(a, b, p, w):
    """(a - b) mod p for a, b < p."""
    d, borrow = sub(a, b, w)
    if borrow:
        d, _ = add(d, p, w)
    return d


def to_mont(x, p, n_bits, w):
    """Shift-and-reduce conversion: returns x * 2**n_bits mod p.

    Runs exactly n_bits doubling steps, each followed by a conditional
    subtract of p, for x < p.
    """
    for _ in range(n_bits):
        x, carry = shl1(x, w)
        if carry or cmp(x, p) >= 0:
            x, _ = sub(x, p, w)
    return x


def from_mont(x, p, n_bits, w):
    """Halving restoration: returns x * 2**(-n_bits) mod p.

    Each of the n_bits steps halves x, adding p first when x is odd so the
    division by two is exact mod p.
    """
    t = len(x)
    low = w - 1
    for _ in range(n_bits):
        if x[0] & 1:
            x, carry = add(x, p, w)
        else:
            carry = 0
        out = []
        for i in range(t - 1):
            out.append((x[i] >> 1) | ((x[i + 1] & 1) << low))
        out.append((x[t - 1] >> 1) | (carry << low))
        x = tuple(out)
    return x


def mont_mul(x, y, p, pbar, w):
    """Montgomery product x * y * 2**(-w*t) mod p, limb-serial (CIOS shape).

    pbar is -p**-1 mod 2**w. Each round adds one limb of x times y, then a
    multiple of p chosen so the low limb cancels exactly; the divide-by-base
    is a limb shift whose exactness is asserted.
    """
    t = len(x)
    mask = (1 << w) - 1
    z = [0] * t
    z_hi = 0
    for xj in x:
        carry = 0
        for i in range(t):
            v = z[i] + xj * y[i] + carry
            z[i] = v & mask
            carry = v >> w
        hi = z_hi + carry
        u = (z[0] * pbar) & mask
        carry = 0
        for i in range(t):
            v = z[i] + u * p[i] + carry
            z[i] = v & mask
            carry = v >> w
        hi += carry
        if z[0]:
            raise ArithmeticError("montgomery reduction: low limb not divisible by base")
        for i in range(t - 1):
            z[i] = z[i + 1]
        z[t - 1] = hi & mask
        z_hi = hi >> w
    out = tuple(z)
    if z_hi or cmp(out, p) >= 0:
        out, _ = sub(out, p, w)
    return out
