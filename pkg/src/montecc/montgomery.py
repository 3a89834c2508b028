"""Montgomery-domain modular arithmetic.

A :class:`MontCtx` fixes an odd modulus p in t limbs of w bits, with
R = 2**(w*t). Residues live in Montgomery form (a :class:`FieldElem`
stores x*R mod p), where products cost one limb-serial Montgomery
multiplication instead of a trial division.

Three conversion/reduction routines are deliberately kept in their
shift-and-conditional-reduce form rather than routed through the
multiplier, so each path can cross-check the other:

* ``to_mont``    -- n_bits doubling steps (x -> x*R mod p),
* ``from_mont``  -- n_bits halving steps (X -> X/R mod p),
* ``mont_mul``   -- CIOS product X*Y/R mod p driven by pbar = -1/p mod 2**w.

``to_mont_by_mul`` / ``from_mont_by_mul`` are the multiplier-based
equivalents (via R^2 mod p and plain 1). Inversion is a Fermat
exponentiation chain, so the multiplier stays the module's only workhorse;
it assumes the modulus is prime.

Operations optionally take a counter object (duck-typed: ``mont_muls``,
``field_adds``, ``field_subs``, ``inversions`` attributes) and bump it for
every operation actually performed. None of this is constant-time;
branches depend on operand values throughout.
"""

from __future__ import annotations

from . import _backend
from .bigmath import Nat


class FieldElem:
    """Residue mod p in Montgomery form, bound to its context."""

    __slots__ = ("value", "ctx")

    def __init__(self, value: Nat, ctx: "MontCtx"):
        if value.w != ctx.w or value.t != ctx.t:
            raise ValueError("value shape does not match context")
        if _backend.kernels.cmp(value.limbs, ctx.p.limbs) >= 0:
            raise ValueError("residue not reduced mod p")
        self.value = value
        self.ctx = ctx

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.ctx == other.ctx and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.value, id(self.ctx)))

    def __repr__(self) -> str:
        return f"FieldElem(0x{self.value.to_hex()} mod 0x{self.ctx.p.to_hex()})"


class MontCtx:
    """Montgomery context: modulus p, limb shape (t, w), pbar and R^2 mod p."""

    __slots__ = ("p", "pbar", "r2", "n_bits", "_p_int", "_one", "_zero")

    def __init__(self, p, t: int | None = None, w: int = 16):
        if isinstance(p, Nat):
            p_int = p.to_int()
            if t is None:
                t, w = p.t, p.w
        else:
            p_int = int(p)
            if t is None:
                t = max(1, (p_int.bit_length() + w - 1) // w)
        if p_int == 0:
            raise ValueError("modulus must be nonzero")
        if p_int % 2 == 0:
            raise ValueError("modulus must be odd (gcd(R, p) = 1 needs an odd p)")
        if p_int >> (w * t):
            raise ValueError(f"modulus does not fit below R = 2**{w * t}")
        self.p = Nat.from_int(p_int, t, w)
        self._p_int = p_int
        self.n_bits = w * t
        b = 1 << w
        self.pbar = (-pow(p_int % b, -1, b)) % b
        kern = _backend.kernels
        one = Nat.from_int(1 % p_int, t, w)
        r_mod_p = kern.to_mont(one.limbs, self.p.limbs, self.n_bits, w)
        r2 = kern.to_mont(r_mod_p, self.p.limbs, self.n_bits, w)
        self.r2 = Nat._raw(r2, w)
        self._one = self._elem(r_mod_p)
        self._zero = self._elem((0,) * t)

    @property
    def t(self) -> int:
        return self.p.t

    @property
    def w(self) -> int:
        return self.p.w

    def __eq__(self, other) -> bool:
        if not isinstance(other, MontCtx):
            return NotImplemented
        return self.p == other.p

    def __repr__(self) -> str:
        return f"MontCtx(p=0x{self.p.to_hex()}, t={self.t}, w={self.w})"

    # -- helpers -----------------------------------------------------------

    def _elem(self, limbs: tuple) -> FieldElem:
        e = object.__new__(FieldElem)
        e.value = Nat._raw(limbs, self.p.w)
        e.ctx = self
        return e

    def _check_elem(self, x: FieldElem) -> None:
        if x.ctx is not self and x.ctx != self:
            raise ValueError("field element belongs to a different context")

    def zero(self) -> FieldElem:
        return self._zero

    def one(self) -> FieldElem:
        return self._one

    def _as_nat(self, x) -> Nat:
        if isinstance(x, Nat):
            if x.w != self.w or x.t != self.t:
                raise ValueError("operand shape does not match context")
            return x
        return Nat.from_int(int(x), self.t, self.w)

    # -- conversions ---------------------------------------------------------

    def to_mont(self, x) -> FieldElem:
        """x -> x*R mod p via the n_bits-step doubling loop; requires x < p."""
        x = self._as_nat(x)
        if _backend.kernels.cmp(x.limbs, self.p.limbs) >= 0:
            raise ValueError("operand must be reduced mod p")
        limbs = _backend.kernels.to_mont(x.limbs, self.p.limbs, self.n_bits, self.w)
        return self._elem(limbs)

    def to_mont_by_mul(self, x, ctr=None) -> FieldElem:
        """Same conversion through the multiplier: x * R^2 / R = x*R mod p."""
        x = self._as_nat(x)
        if _backend.kernels.cmp(x.limbs, self.p.limbs) >= 0:
            raise ValueError("operand must be reduced mod p")
        if ctr is not None:
            ctr.mont_muls += 1
        limbs = _backend.kernels.mont_mul(
            x.limbs, self.r2.limbs, self.p.limbs, self.pbar, self.w
        )
        return self._elem(limbs)

    def from_mont(self, X: FieldElem) -> Nat:
        """X -> X/R mod p via exactly n_bits halving steps."""
        self._check_elem(X)
        limbs = _backend.kernels.from_mont(
            X.value.limbs, self.p.limbs, self.n_bits, self.w
        )
        return Nat._raw(limbs, self.w)

    def from_mont_by_mul(self, X: FieldElem, ctr=None) -> Nat:
        """Same restoration through the multiplier: X * 1 / R mod p."""
        self._check_elem(X)
        if ctr is not None:
            ctr.mont_muls += 1
        one = Nat.from_int(1 % self._p_int, self.t, self.w)
        limbs = _backend.kernels.mont_mul(
            X.value.limbs, one.limbs, self.p.limbs, self.pbar, self.w
        )
        return Nat._raw(limbs, self.w)

    # -- field operations ----------------------------------------------------

    def mont_mul(self, X: FieldElem, Y: FieldElem, ctr=None) -> FieldElem:
        """Montgomery product X*Y/R mod p."""
        self._check_elem(X)
        self._check_elem(Y)
        if ctr is not None:
            ctr.mont_muls += 1
        limbs = _backend.kernels.mont_mul(
            X.value.limbs, Y.value.limbs, self.p.limbs, self.pbar, self.w
        )
        return self._elem(limbs)

    def mod_add(self, X: FieldElem, Y: FieldElem, ctr=None) -> FieldElem:
        self._check_elem(X)
        self._check_elem(Y)
        if ctr is not None:
            ctr.field_adds += 1
        limbs = _backend.kernels.mod_add(
            X.value.limbs, Y.value.limbs, self.p.limbs, self.w
        )
        return self._elem(limbs)

    def mod_sub(self, X: FieldElem, Y: FieldElem, ctr=None) -> FieldElem:
        self._check_elem(X)
        self._check_elem(Y)
        if ctr is not None:
            ctr.field_subs += 1
        limbs = _backend.kernels.mod_sub(
            X.value.limbs, Y.value.limbs, self.p.limbs, self.w
        )
        return self._elem(limbs)

    def mont_inv(self, X: FieldElem, ctr=None) -> FieldElem:
        """Inverse via the Fermat chain X**(p-2); modulus must be prime."""
        self._check_elem(X)
        if X.is_zero():
            raise ZeroDivisionError("zero is not invertible")
        if ctr is not None:
            ctr.inversions += 1
        e = self._p_int - 2
        result = X
        for i in range(e.bit_length() - 2, -1, -1):
            result = self.mont_mul(result, result, ctr)
            if (e >> i) & 1:
                result = self.mont_mul(result, X, ctr)
        return result
