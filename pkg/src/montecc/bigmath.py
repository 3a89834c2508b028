"""Fixed-capacity multi-precision naturals.

A :class:`Nat` holds exactly t limbs of w bits each (little-endian limb
order) and represents sum(limbs[i] * 2**(w*i)). Capacity never grows;
values are immutable. Limb width defaults to 16 bits throughout the
package to match a 16-bit word machine, but any width up to 64 works
(tests lean on w=4 so exhaustive checks stay tiny).

Import/export uses big-endian lowercase hex with an even digit count.
"""

from __future__ import annotations

from . import _backend

_HEXDIGITS = frozenset("0123456789abcdefABCDEF")


class Nat:
    """Unsigned integer with a fixed limb count; all arithmetic is mod 2**(w*t)."""

    __slots__ = ("limbs", "w")

    def __init__(self, limbs, w: int):
        limbs = tuple(limbs)
        if not limbs:
            raise ValueError("Nat needs at least one limb")
        if not 1 <= w <= 64:
            raise ValueError(f"limb width must be in [1, 64], got {w}")
        top = 1 << w
        for v in limbs:
            if not 0 <= v < top:
                raise ValueError(f"limb {v:#x} out of range for width {w}")
        self.limbs = limbs
        self.w = w

    @classmethod
    def _raw(cls, limbs: tuple, w: int) -> "Nat":
        # Internal fast path: limbs already canonical (kernel output).
        obj = object.__new__(cls)
        obj.limbs = limbs
        obj.w = w
        return obj

    @property
    def t(self) -> int:
        return len(self.limbs)

    # -- construction / conversion -------------------------------------

    @classmethod
    def zero(cls, t: int, w: int) -> "Nat":
        return cls((0,) * t, w)

    @classmethod
    def from_int(cls, value: int, t: int, w: int) -> "Nat":
        if value < 0:
            raise ValueError("Nat is unsigned")
        if value >> (w * t):
            raise ValueError(f"value needs more than {t} limbs of {w} bits")
        mask = (1 << w) - 1
        limbs = []
        for _ in range(t):
            limbs.append(value & mask)
            value >>= w
        return cls._raw(tuple(limbs), w)

    @classmethod
    def from_hex(cls, s: str, t: int, w: int) -> "Nat":
        if not s or any(c not in _HEXDIGITS for c in s):
            raise ValueError(f"invalid hex string {s!r}")
        return cls.from_int(int(s, 16), t, w)

    @classmethod
    def from_bytes(cls, data: bytes, t: int, w: int) -> "Nat":
        return cls.from_int(int.from_bytes(data, "big"), t, w)

    def to_int(self) -> int:
        value = 0
        for limb in reversed(self.limbs):
            value = (value << self.w) | limb
        return value

    def to_hex(self) -> str:
        """Minimal big-endian lowercase hex, padded to an even digit count."""
        s = f"{self.to_int():x}"
        if len(s) % 2:
            s = "0" + s
        return s

    def to_bytes(self, length: int | None = None) -> bytes:
        value = self.to_int()
        if length is None:
            length = max(1, (value.bit_length() + 7) // 8)
        return value.to_bytes(length, "big")

    # -- arithmetic ------------------------------------------------------

    def _check_shape(self, other: "Nat") -> None:
        if self.w != other.w or len(self.limbs) != len(other.limbs):
            raise ValueError(
                f"shape mismatch: (t={self.t}, w={self.w}) vs "
                f"(t={other.t}, w={other.w})"
            )

    def add(self, other: "Nat") -> tuple["Nat", int]:
        """(self + other) mod 2**(w*t) and the outgoing carry bit."""
        self._check_shape(other)
        limbs, carry = _backend.kernels.add(self.limbs, other.limbs, self.w)
        return Nat._raw(limbs, self.w), carry

    def sub(self, other: "Nat") -> tuple["Nat", int]:
        """(self - other) mod 2**(w*t) and the outgoing borrow (1 iff self < other)."""
        self._check_shape(other)
        limbs, borrow = _backend.kernels.sub(self.limbs, other.limbs, self.w)
        return Nat._raw(limbs, self.w), borrow

    def cmp(self, other: "Nat") -> int:
        """-1, 0 or 1 as self <, ==, > other."""
        self._check_shape(other)
        return _backend.kernels.cmp(self.limbs, other.limbs)

    def shl1(self) -> tuple["Nat", int]:
        """(self * 2) mod 2**(w*t) and the shifted-out top bit."""
        limbs, carry = _backend.kernels.shl1(self.limbs, self.w)
        return Nat._raw(limbs, self.w), carry

    def bit(self, i: int) -> int:
        """Bit i, little-endian bit order."""
        if not 0 <= i < self.w * self.t:
            raise IndexError(f"bit index {i} out of range [0, {self.w * self.t})")
        return (self.limbs[i // self.w] >> (i % self.w)) & 1

    def bitlen(self) -> int:
        """Index of the highest set bit plus one; 0 for zero."""
        for i in range(len(self.limbs) - 1, -1, -1):
            if self.limbs[i]:
                return i * self.w + self.limbs[i].bit_length()
        return 0

    def is_zero(self) -> bool:
        return not any(self.limbs)

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Nat):
            return NotImplemented
        return self.w == other.w and self.limbs == other.limbs

    def __hash__(self) -> int:
        return hash((self.limbs, self.w))

    def __repr__(self) -> str:
        return f"Nat(0x{self.to_hex()}, t={self.t}, w={self.w})"
