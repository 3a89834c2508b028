"""Affine group law on toy binary curves y^2 + xy = x^3 + a*x^2 + b.

Small polynomial-basis fields GF(2^m), m <= 8, with the textbook affine
doubling and addition written exactly as:

    doubling:  lam = x1 + y1/x1
               x2 = a + lam + lam^2
               y2 = (x1 + x2)*lam + x2 + y1

    addition:  lam = (y1 + y2)/(x1 + x2)
               x3 = a + lam + lam^2 + x1 + x2
               y3 = (x2 + x3)*lam + x3 + y2

This module exists to exercise those formulas exhaustively on tiny fields;
it is deliberately not a standards-grade GF(2^m) implementation.
"""

from __future__ import annotations

_MAX_DEGREE = 8

_verified_moduli: set[int] = set()


def _poly_mulmod(a: int, b: int, modulus: int, m: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        if (a >> m) & 1:
            a ^= modulus
        b >>= 1
    return acc


def _check_irreducible(modulus: int) -> None:
    m = modulus.bit_length() - 1
    if not 1 <= m <= _MAX_DEGREE:
        raise ValueError(f"modulus degree must be in [1, {_MAX_DEGREE}], got {m}")
    if modulus in _verified_moduli:
        return
    # Exhaustive factor search: irreducible iff no polynomial of degree
    # 1..m//2 divides it (carry-less long division).
    for cand in range(2, 1 << (m // 2 + 1)):
        rem = modulus
        shift = rem.bit_length() - cand.bit_length()
        while shift >= 0:
            rem ^= cand << shift
            shift = rem.bit_length() - cand.bit_length()
        if rem == 0:
            raise ValueError(
                f"modulus {modulus:#b} is reducible (divisible by {cand:#b})"
            )
    _verified_moduli.add(modulus)


class BinFieldElem:
    """GF(2^m) element: polynomial coefficients packed into an int."""

    __slots__ = ("bits", "modulus")

    def __init__(self, bits: int, modulus: int):
        _check_irreducible(modulus)
        m = modulus.bit_length() - 1
        if not 0 <= bits < (1 << m):
            raise ValueError(f"element {bits:#x} out of range for GF(2^{m})")
        self.bits = bits
        self.modulus = modulus

    @property
    def m(self) -> int:
        return self.modulus.bit_length() - 1

    def _check(self, other: "BinFieldElem") -> None:
        if self.modulus != other.modulus:
            raise ValueError("elements from different fields")

    def is_zero(self) -> bool:
        return self.bits == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinFieldElem):
            return NotImplemented
        return self.bits == other.bits and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.bits, self.modulus))

    def __repr__(self) -> str:
        return f"BinFieldElem({self.bits:#x}, modulus={self.modulus:#b})"


def bin_add(a: BinFieldElem, b: BinFieldElem) -> BinFieldElem:
    """Characteristic-2 addition: coefficient-wise XOR."""
    a._check(b)
    return BinFieldElem(a.bits ^ b.bits, a.modulus)


def bin_mul(a: BinFieldElem, b: BinFieldElem) -> BinFieldElem:
    """Carry-less product reduced mod the irreducible polynomial."""
    a._check(b)
    return BinFieldElem(_poly_mulmod(a.bits, b.bits, a.modulus, a.m), a.modulus)


def bin_inv(a: BinFieldElem) -> BinFieldElem:
    """Multiplicative inverse by exhaustive search (fields are tiny)."""
    if a.is_zero():
        raise ZeroDivisionError("zero is not invertible")
    for x in range(1, 1 << a.m):
        if _poly_mulmod(a.bits, x, a.modulus, a.m) == 1:
            return BinFieldElem(x, a.modulus)
    raise ArithmeticError("no inverse found; modulus not irreducible?")


class BinAffinePoint:
    """Affine point on a binary curve; x = y = None encodes infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x: BinFieldElem | None, y: BinFieldElem | None):
        if (x is None) != (y is None):
            raise ValueError("point needs both coordinates or neither")
        self.x = x
        self.y = y

    @classmethod
    def at_infinity(cls) -> "BinAffinePoint":
        return cls(None, None)

    @property
    def infinity(self) -> bool:
        return self.x is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinAffinePoint):
            return NotImplemented
        if self.infinity or other.infinity:
            return self.infinity and other.infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        if self.infinity:
            return "BinAffinePoint(infinity)"
        return f"BinAffinePoint({self.x.bits}, {self.y.bits})"


def bin_is_on_curve(P: BinAffinePoint, a: BinFieldElem, b: BinFieldElem) -> bool:
    """y^2 + xy = x^3 + a*x^2 + b; infinity counts as on-curve."""
    if P.infinity:
        return True
    x, y = P.x, P.y
    lhs = bin_add(bin_mul(y, y), bin_mul(x, y))
    xsq = bin_mul(x, x)
    rhs = bin_add(bin_add(bin_mul(xsq, x), bin_mul(a, xsq)), b)
    return lhs == rhs


def bin_point_double(P: BinAffinePoint, a: BinFieldElem) -> BinAffinePoint:
    """2P; doubling infinity or an x = 0 point (order two) gives infinity."""
    if P.infinity:
        return P
    x1, y1 = P.x, P.y
    if x1.is_zero():
        return BinAffinePoint.at_infinity()
    lam = bin_add(x1, bin_mul(y1, bin_inv(x1)))
    x2 = bin_add(bin_add(a, lam), bin_mul(lam, lam))
    y2 = bin_add(bin_add(bin_mul(bin_add(x1, x2), lam), x2), y1)
    return BinAffinePoint(x2, y2)


def bin_point_add(P: BinAffinePoint, Q: BinAffinePoint, a: BinFieldElem) -> BinAffinePoint:
    """P + Q; equal x routes to doubling (P = Q) or infinity (P = -Q)."""
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    if x1 == x2:
        if y1 == y2:
            return bin_point_double(P, a)
        return BinAffinePoint.at_infinity()
    lam = bin_mul(bin_add(y1, y2), bin_inv(bin_add(x1, x2)))
    x3 = bin_add(bin_add(bin_add(bin_add(a, lam), bin_mul(lam, lam)), x1), x2)
    y3 = bin_add(bin_add(bin_mul(bin_add(x2, x3), lam), x3), y2)
    return BinAffinePoint(x3, y3)


def bin_curve_points(a: BinFieldElem, b: BinFieldElem) -> list[BinAffinePoint]:
    """All finite points of the curve, by exhaustive enumeration."""
    modulus = a.modulus
    m = a.m
    points = []
    for x in range(1 << m):
        for y in range(1 << m):
            P = BinAffinePoint(BinFieldElem(x, modulus), BinFieldElem(y, modulus))
            if bin_is_on_curve(P, a, b):
                points.append(P)
    return points
