"""Prime-field elliptic-curve group law in Jacobian coordinates.

Curves are short Weierstrass, y^2 = x^3 + a*x + b over GF(p). A Jacobian
triple (X, Y, Z) stands for the affine point (X/Z^2, Y/Z^3); Z = 0 encodes
the point at infinity. Coordinates are Montgomery-form field elements, so
the only primitives consumed here are the Montgomery multiplier and modular
add/sub, plus one Fermat inversion when converting back to affine.

Scalar multiplication is the plain MSB-first double-and-add walk: the
accumulator starts at infinity and every bit costs one doubling, plus one
addition when the bit is set. That makes the operation counts exact
functions of the scalar (bitlen doublings, hamming-weight additions),
which the benchmark layer relies on. No window methods, no NAF.

All operations thread an optional :class:`OpCounters`; callers own the
counter, there is no global state.

The doubling/addition formula set is the general-a Jacobian one from the
standard ECC reference text; its per-operation costs are fixed constants
(see DOUBLE_OP_COST / ADD_OP_COST) independent of the operand values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigmath import Nat
from .montgomery import FieldElem

# Field-op cost of one generic doubling / addition (degenerate routes are
# cheaper; the benchmark asserts these hold on random inputs).
DOUBLE_OP_COST = {"mont_muls": 10, "field_adds": 9, "field_subs": 4}
ADD_OP_COST = {"mont_muls": 16, "field_adds": 0, "field_subs": 7}


@dataclass
class OpCounters:
    """Per-session operation tally; pass one in, read it back out."""

    mont_muls: int = 0
    field_adds: int = 0
    field_subs: int = 0
    point_doubles: int = 0
    point_adds: int = 0
    inversions: int = 0

    def copy(self) -> "OpCounters":
        return OpCounters(
            self.mont_muls,
            self.field_adds,
            self.field_subs,
            self.point_doubles,
            self.point_adds,
            self.inversions,
        )

    def __sub__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(
            self.mont_muls - other.mont_muls,
            self.field_adds - other.field_adds,
            self.field_subs - other.field_subs,
            self.point_doubles - other.point_doubles,
            self.point_adds - other.point_adds,
            self.inversions - other.inversions,
        )


class AffinePoint:
    """Affine curve point; x = y = None encodes the point at infinity."""

    __slots__ = ("x", "y")

    def __init__(self, x: FieldElem | None, y: FieldElem | None):
        if (x is None) != (y is None):
            raise ValueError("affine point needs both coordinates or neither")
        self.x = x
        self.y = y

    @classmethod
    def at_infinity(cls) -> "AffinePoint":
        return cls(None, None)

    @property
    def infinity(self) -> bool:
        return self.x is None

    def to_ints(self) -> tuple[int, int] | None:
        """Plain-integer coordinates via Montgomery restoration; None for infinity."""
        if self.infinity:
            return None
        ctx = self.x.ctx
        return ctx.from_mont(self.x).to_int(), ctx.from_mont(self.y).to_int()

    def __eq__(self, other) -> bool:
        if not isinstance(other, AffinePoint):
            return NotImplemented
        if self.infinity or other.infinity:
            return self.infinity and other.infinity
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        if self.infinity:
            return "AffinePoint(infinity)"
        return f"AffinePoint({self.to_ints()})"


class JacobianPoint:
    """Projective (X, Y, Z) with x = X/Z^2, y = Y/Z^3; Z = 0 is infinity."""

    __slots__ = ("X", "Y", "Z")

    def __init__(self, X: FieldElem, Y: FieldElem, Z: FieldElem):
        self.X = X
        self.Y = Y
        self.Z = Z

    @property
    def infinity(self) -> bool:
        return self.Z.is_zero()

    def __repr__(self) -> str:
        return "JacobianPoint(infinity)" if self.infinity else "JacobianPoint(...)"


def jacobian_infinity(ctx) -> JacobianPoint:
    return JacobianPoint(ctx.one(), ctx.one(), ctx.zero())


def to_jacobian(P: AffinePoint, curve) -> JacobianPoint:
    """Embed an affine point with Z = 1; infinity becomes (1, 1, 0)."""
    ctx = curve.ctx
    if P.infinity:
        return jacobian_infinity(ctx)
    return JacobianPoint(P.x, P.y, ctx.one())


def to_affine(P: JacobianPoint, ctr: OpCounters | None = None) -> AffinePoint:
    """Divide out Z: x = X/Z^2, y = Y/Z^3 (one inversion, four products)."""
    if P.infinity:
        return AffinePoint.at_infinity()
    ctx = P.Z.ctx
    zinv = ctx.mont_inv(P.Z, ctr)
    zinv2 = ctx.mont_mul(zinv, zinv, ctr)
    x = ctx.mont_mul(P.X, zinv2, ctr)
    zinv3 = ctx.mont_mul(zinv2, zinv, ctr)
    y = ctx.mont_mul(P.Y, zinv3, ctr)
    return AffinePoint(x, y)


def _double_body(P: JacobianPoint, curve, ctr: OpCounters | None) -> JacobianPoint:
    # 10 muls, 9 adds, 4 subs; doubling a y = 0 point lands on Z3 = 0.
    if P.infinity:
        return P
    ctx = curve.ctx
    X1, Y1, Z1 = P.X, P.Y, P.Z
    A = ctx.mont_mul(Y1, Y1, ctr)
    B = ctx.mont_mul(X1, A, ctr)
    B = ctx.mod_add(B, B, ctr)
    B = ctx.mod_add(B, B, ctr)  # 4*X1*Y1^2
    C = ctx.mont_mul(A, A, ctr)
    C = ctx.mod_add(C, C, ctr)
    C = ctx.mod_add(C, C, ctr)
    C = ctx.mod_add(C, C, ctr)  # 8*Y1^4
    X1sq = ctx.mont_mul(X1, X1, ctr)
    D = ctx.mod_add(X1sq, X1sq, ctr)
    D = ctx.mod_add(D, X1sq, ctr)  # 3*X1^2
    Z1sq = ctx.mont_mul(Z1, Z1, ctr)
    Z1q = ctx.mont_mul(Z1sq, Z1sq, ctr)
    D = ctx.mod_add(D, ctx.mont_mul(curve.a_m, Z1q, ctr), ctr)  # + a*Z1^4
    X3 = ctx.mont_mul(D, D, ctr)
    X3 = ctx.mod_sub(X3, B, ctr)
    X3 = ctx.mod_sub(X3, B, ctr)
    Y3 = ctx.mont_mul(D, ctx.mod_sub(B, X3, ctr), ctr)
    Y3 = ctx.mod_sub(Y3, C, ctr)
    Z3 = ctx.mont_mul(Y1, Z1, ctr)
    Z3 = ctx.mod_add(Z3, Z3, ctr)
    return JacobianPoint(X3, Y3, Z3)


def point_double(P: JacobianPoint, curve, ctr: OpCounters | None = None) -> JacobianPoint:
    """2P. Doubling infinity (or an order-2 point) yields infinity."""
    if ctr is not None:
        ctr.point_doubles += 1
    return _double_body(P, curve, ctr)


def point_add(
    P: JacobianPoint, Q: JacobianPoint, curve, ctr: OpCounters | None = None
) -> JacobianPoint:
    """P + Q with the degenerate cases routed explicitly.

    P = Q falls through to the doubling formula (the chord slope would be
    0/0) and P = -Q to infinity; both are detected from H = U2 - U1 and
    r = S2 - S1 rather than left to produce a garbage triple.
    """
    if ctr is not None:
        ctr.point_adds += 1
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    ctx = curve.ctx
    Z1sq = ctx.mont_mul(P.Z, P.Z, ctr)
    Z2sq = ctx.mont_mul(Q.Z, Q.Z, ctr)
    U1 = ctx.mont_mul(P.X, Z2sq, ctr)
    U2 = ctx.mont_mul(Q.X, Z1sq, ctr)
    Z1cu = ctx.mont_mul(Z1sq, P.Z, ctr)
    Z2cu = ctx.mont_mul(Z2sq, Q.Z, ctr)
    S1 = ctx.mont_mul(P.Y, Z2cu, ctr)
    S2 = ctx.mont_mul(Q.Y, Z1cu, ctr)
    H = ctx.mod_sub(U2, U1, ctr)
    r = ctx.mod_sub(S2, S1, ctr)
    if H.is_zero():
        if r.is_zero():
            return _double_body(P, curve, ctr)
        return jacobian_infinity(ctx)
    Hsq = ctx.mont_mul(H, H, ctr)
    Hcu = ctx.mont_mul(Hsq, H, ctr)
    V = ctx.mont_mul(U1, Hsq, ctr)
    X3 = ctx.mont_mul(r, r, ctr)
    X3 = ctx.mod_sub(X3, Hcu, ctr)
    X3 = ctx.mod_sub(X3, V, ctr)
    X3 = ctx.mod_sub(X3, V, ctr)
    Y3 = ctx.mont_mul(r, ctx.mod_sub(V, X3, ctr), ctr)
    Y3 = ctx.mod_sub(Y3, ctx.mont_mul(S1, Hcu, ctr), ctr)
    Z3 = ctx.mont_mul(ctx.mont_mul(P.Z, Q.Z, ctr), H, ctr)
    return JacobianPoint(X3, Y3, Z3)


def _scalar_bits(k):
    if isinstance(k, Nat):
        return k.bitlen(), k.bit
    k = int(k)
    if k < 0:
        raise ValueError("scalar must be non-negative")
    return k.bit_length(), lambda i: (k >> i) & 1


def scalar_mult(k, P: AffinePoint, curve, ctr: OpCounters | None = None) -> AffinePoint:
    """k*P by MSB-first double-and-add.

    Walks the scalar from its most significant bit down to bit 0; every
    step doubles the accumulator (the first step doubles infinity) and a
    set bit adds P. Counts exactly bitlen(k) doublings and weight(k)
    additions. k = 0 returns infinity.
    """
    nbits, bit = _scalar_bits(k)
    acc = jacobian_infinity(curve.ctx)
    Pj = to_jacobian(P, curve)
    for i in range(nbits - 1, -1, -1):
        acc = point_double(acc, curve, ctr)
        if bit(i):
            acc = point_add(acc, Pj, curve, ctr)
    return to_affine(acc, ctr)


def reference_scalar_mult(k, P: AffinePoint, curve) -> AffinePoint:
    """Independent scalar-multiplication oracle.

    Plain affine Weierstrass arithmetic on Python integers with a modular
    inversion at every step; no Montgomery form, no Jacobian coordinates,
    no shared code with :func:`scalar_mult`. Used by tests and the bench
    harness's cross-check mode only.
    """
    p, a = curve.p_int, curve.a_int

    def dbl(pt):
        if pt is None:
            return None
        x, y = pt
        if y == 0:
            return None
        lam = (3 * x * x + a) * pow(2 * y, -1, p) % p
        x3 = (lam * lam - 2 * x) % p
        return x3, (lam * (x - x3) - y) % p

    def add(p1, p2):
        if p1 is None:
            return p2
        if p2 is None:
            return p1
        (x1, y1), (x2, y2) = p1, p2
        if x1 == x2:
            if (y1 + y2) % p == 0:
                return None
            return dbl(p1)
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
        x3 = (lam * lam - x1 - x2) % p
        return x3, (lam * (x1 - x3) - y1) % p

    k = k.to_int() if isinstance(k, Nat) else int(k)
    if k < 0:
        raise ValueError("scalar must be non-negative")
    pt = P.to_ints()
    acc = None
    for i in range(k.bit_length() - 1, -1, -1):
        acc = dbl(acc)
        if (k >> i) & 1:
            acc = add(acc, pt)
    if acc is None:
        return AffinePoint.at_infinity()
    ctx = curve.ctx
    return AffinePoint(ctx.to_mont(acc[0]), ctx.to_mont(acc[1]))


def is_on_curve(P: AffinePoint, curve) -> bool:
    """y^2 = x^3 + a*x + b in GF(p); infinity counts as on-curve."""
    if P.infinity:
        return True
    ctx = curve.ctx
    lhs = ctx.mont_mul(P.y, P.y)
    rhs = ctx.mont_mul(ctx.mont_mul(P.x, P.x), P.x)
    rhs = ctx.mod_add(rhs, ctx.mont_mul(curve.a_m, P.x))
    rhs = ctx.mod_add(rhs, curve.b_m)
    return lhs == rhs


# -- SEC1-style uncompressed encoding ---------------------------------------


def encode_point(P: AffinePoint, curve) -> bytes:
    """0x04 || x || y, coordinates padded to field length; infinity is 0x00."""
    if P.infinity:
        return b"\x00"
    x, y = P.to_ints()
    size = curve.field_bytes
    return b"\x04" + x.to_bytes(size, "big") + y.to_bytes(size, "big")


def decode_point(data, curve) -> AffinePoint:
    """Inverse of :func:`encode_point`; accepts bytes or a hex string.

    Checks structure and coordinate range only; curve membership is the
    caller's concern (protocol entry points validate it).
    """
    if isinstance(data, str):
        try:
            data = bytes.fromhex(data)
        except ValueError:
            raise ValueError("point encoding is not valid hex") from None
    if data == b"\x00":
        return AffinePoint.at_infinity()
    size = curve.field_bytes
    if len(data) != 1 + 2 * size or data[0] != 0x04:
        raise ValueError("malformed uncompressed point encoding")
    x = int.from_bytes(data[1 : 1 + size], "big")
    y = int.from_bytes(data[1 + size :], "big")
    if x >= curve.p_int or y >= curve.p_int:
        raise ValueError("point coordinate exceeds the field size")
    ctx = curve.ctx
    return AffinePoint(ctx.to_mont(x), ctx.to_mont(y))
