"""Key agreement and signatures over the prime-field curve core.

Three schemes: Diffie-Hellman (both sides scalar-multiply the other's
public point), MQV (implicitly authenticated agreement combining one
static and one ephemeral pair per party), and the elliptic-curve DSA
analogue. Everything here is stateless: functions of value inputs, with
scalar (mod n) algebra done in a Montgomery context over the group order.

Peer-supplied points are always validated (on-curve, not infinity, and
for DH/DSA correct order) before use; skipping that is a classic source
of invalid-curve key-extraction attacks.

Shared secrets are raw x-coordinates, big-endian, padded to field length;
no key-derivation step. Signatures serialize as r || s, fixed width.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigmath import Nat
from .curve_gfp import (
    AffinePoint,
    is_on_curve,
    point_add,
    scalar_mult,
    to_affine,
    to_jacobian,
)
from .digests import sha1_digest
from .params import CurveParams, keygen, registry_get


class RetryNonce(Exception):
    """The nonce produced r = 0 or s = 0; sign again with a fresh nonce."""


def _resolve(curve) -> CurveParams:
    if isinstance(curve, str):
        return registry_get(curve)
    return curve


@dataclass(frozen=True)
class KeyPair:
    """Private scalar d in [1, n-1] with its public point Q = d*G."""

    d: Nat
    Q: AffinePoint
    curve: str

    @classmethod
    def generate(cls, curve_name: str, rng) -> "KeyPair":
        c = registry_get(curve_name)
        d, Q = keygen(c, rng)
        return cls(d, Q, curve_name)

    @classmethod
    def from_secret(cls, curve_name: str, d: int) -> "KeyPair":
        c = registry_get(curve_name)
        if not 1 <= d <= c.n_int - 1:
            raise ValueError("secret scalar out of range [1, n-1]")
        return cls(c.scalar_nat(d), scalar_mult(d, c.G, c), curve_name)


@dataclass(frozen=True)
class Signature:
    """ECDSA signature pair; r and s both in [1, n-1]."""

    r: Nat
    s: Nat

    def to_hex(self, curve) -> str:
        c = _resolve(curve)
        size = c.scalar_bytes
        return (self.r.to_bytes(size) + self.s.to_bytes(size)).hex()

    @classmethod
    def from_hex(cls, text: str, curve) -> "Signature":
        c = _resolve(curve)
        data = bytes.fromhex(text)
        size = c.scalar_bytes
        if len(data) != 2 * size:
            raise ValueError(f"signature must be {2 * size} bytes, got {len(data)}")
        t, w = c.scalar_ctx.t, c.scalar_ctx.w
        return cls(
            Nat.from_bytes(data[:size], t, w),
            Nat.from_bytes(data[size:], t, w),
        )


def validate_public_key(Q: AffinePoint, c: CurveParams, check_order: bool = True) -> None:
    """Reject infinity, off-curve points, and (optionally) wrong-order points."""
    if Q.infinity:
        raise ValueError("public point is the point at infinity")
    if not is_on_curve(Q, c):
        raise ValueError("public point is not on the curve")
    if check_order and not scalar_mult(c.n_int, Q, c).infinity:
        raise ValueError("public point does not have order dividing n")


def ecdh_shared(my: KeyPair, peer_pub: AffinePoint) -> bytes:
    """Diffie-Hellman shared secret: x-coordinate of d * peer_pub.

    Both parties compute the same point a*b*G, so the returned bytes agree.
    """
    c = registry_get(my.curve)
    validate_public_key(peer_pub, c)
    S = scalar_mult(my.d, peer_pub, c)
    if S.infinity:
        raise ValueError("degenerate shared point")
    x, _ = S.to_ints()
    return x.to_bytes(c.field_bytes, "big")


def digest_for_curve(message: bytes, curve, digest_fn=None) -> int:
    """Message to signing integer: leftmost bitlen(n) bits of the digest, mod n.

    The digest function is injectable; the default is the 160-bit SHA-1.
    """
    c = _resolve(curve)
    digest = (digest_fn or sha1_digest)(message)
    z = int.from_bytes(digest, "big")
    nbits = c.n_int.bit_length()
    if z.bit_length() > nbits:
        z >>= z.bit_length() - nbits
    return z % c.n_int


def ecdsa_sign(key: KeyPair, e: int, k: int) -> Signature:
    """Sign digest integer e with nonce k: r = x(k*G) mod n, s = (e + d*r)/k mod n.

    Raises :class:`RetryNonce` when r or s comes out zero (the caller picks
    a fresh nonce); a nonce outside [1, n-1] is a hard error.
    """
    c = registry_get(key.curve)
    n = c.n_int
    k = int(k)
    if not 1 <= k <= n - 1:
        raise ValueError("nonce out of range [1, n-1]")
    R = scalar_mult(k, c.G, c)
    r = R.to_ints()[0] % n
    if r == 0:
        raise RetryNonce("r = 0 for this nonce")
    sctx = c.scalar_ctx
    km = sctx.to_mont(k)
    dr = sctx.mont_mul(sctx.to_mont(key.d.to_int()), sctx.to_mont(r))
    s_m = sctx.mont_mul(sctx.mont_inv(km), sctx.mod_add(sctx.to_mont(int(e) % n), dr))
    s = sctx.from_mont(s_m).to_int()
    if s == 0:
        raise RetryNonce("s = 0 for this nonce")
    return Signature(c.scalar_nat(r), c.scalar_nat(s))


def ecdsa_verify(pub: AffinePoint, e: int, sig: Signature, curve) -> bool:
    """Check sig against digest integer e: accept iff x(u1*G + u2*pub) mod n = r.

    Out-of-range r or s rejects (returns False); an invalid public point
    raises, since that is a broken input rather than a bad signature.
    """
    c = _resolve(curve)
    n = c.n_int
    r, s = sig.r.to_int(), sig.s.to_int()
    if not (1 <= r <= n - 1 and 1 <= s <= n - 1):
        return False
    validate_public_key(pub, c)
    sctx = c.scalar_ctx
    w = sctx.mont_inv(sctx.to_mont(s))
    u1 = sctx.from_mont(sctx.mont_mul(sctx.to_mont(int(e) % n), w)).to_int()
    u2 = sctx.from_mont(sctx.mont_mul(sctx.to_mont(r), w)).to_int()
    V = point_add(
        to_jacobian(scalar_mult(u1, c.G, c), c),
        to_jacobian(scalar_mult(u2, pub, c), c),
        c,
    )
    Va = to_affine(V)
    if Va.infinity:
        return False
    return Va.to_ints()[0] % n == r


def _avf(P: AffinePoint, c: CurveParams) -> int:
    # Associate value: x truncated to half the order's bit length, top bit forced.
    f = (c.n_int.bit_length() + 1) // 2
    x, _ = P.to_ints()
    return (x % (1 << f)) + (1 << f)


def ecmqv_shared(
    static_kp: KeyPair,
    eph_kp: KeyPair,
    peer_static: AffinePoint,
    peer_eph: AffinePoint,
) -> bytes:
    """MQV shared secret from one party's two key pairs and the peer's two points.

    implicit = (k_eph + avf(own ephemeral public) * d_static) mod n, then
    S = h * implicit * (peer_eph + avf(peer_eph) * peer_static). Both
    parties land on the same S; the cofactor multiple clears any small
    off-subgroup component.
    """
    if static_kp.curve != eph_kp.curve:
        raise ValueError("static and ephemeral pairs use different curves")
    c = registry_get(static_kp.curve)
    validate_public_key(peer_static, c, check_order=False)
    validate_public_key(peer_eph, c, check_order=False)
    sctx = c.scalar_ctx
    own = sctx.mont_mul(
        sctx.to_mont(_avf(eph_kp.Q, c) % c.n_int),
        sctx.to_mont(static_kp.d.to_int()),
    )
    implicit = sctx.from_mont(
        sctx.mod_add(sctx.to_mont(eph_kp.d.to_int()), own)
    ).to_int()
    T = to_affine(
        point_add(
            to_jacobian(peer_eph, c),
            to_jacobian(scalar_mult(_avf(peer_eph, c), peer_static, c), c),
            c,
        )
    )
    S = scalar_mult(c.h * implicit, T, c)
    if S.infinity:
        raise ValueError("degenerate shared point")
    x, _ = S.to_ints()
    return x.to_bytes(c.field_bytes, "big")
