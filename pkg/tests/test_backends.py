"""Pure-Python and compiled kernels must agree bit-for-bit on every shape."""

import random
import subprocess
import sys

import pytest

from montecc import _backend

pytestmark = pytest.mark.skipif(
    "native" not in _backend.available_backends(),
    reason="compiled backend not built",
)

SHAPES = [(1, 4), (2, 8), (10, 16), (3, 32), (2, 31), (5, 16)]


def _random_odd_below_capacity(rng, t, w):
    while True:
        p = rng.getrandbits(t * w) | 1
        if p > 2:
            return p


@pytest.mark.parametrize("t,w", SHAPES)
def test_kernels_agree(t, w):
    py = _backend.get_kernels("py")
    native = _backend.get_kernels("native")
    rng = random.Random(t * 100 + w)
    mask = (1 << w) - 1
    for _ in range(100):
        p_int = _random_odd_below_capacity(rng, t, w)
        b = 1 << w
        pbar = (-pow(p_int % b, -1, b)) % b

        def limbs(v):
            return tuple((v >> (w * i)) & mask for i in range(t))

        p = limbs(p_int)
        a = limbs(rng.getrandbits(t * w))
        bv = limbs(rng.getrandbits(t * w))
        x = limbs(rng.randrange(p_int))
        y = limbs(rng.randrange(p_int))

        assert py.add(a, bv, w) == native.add(a, bv, w)
        assert py.sub(a, bv, w) == native.sub(a, bv, w)
        assert py.cmp(a, bv) == native.cmp(a, bv)
        assert py.shl1(a, w) == native.shl1(a, w)
        assert py.mod_add(x, y, p, w) == native.mod_add(x, y, p, w)
        assert py.mod_sub(x, y, p, w) == native.mod_sub(x, y, p, w)
        assert py.mont_mul(x, y, p, pbar, w) == native.mont_mul(x, y, p, pbar, w)
        n_bits = w * t
        assert py.to_mont(x, p, n_bits, w) == native.to_mont(x, p, n_bits, w)
        assert py.from_mont(x, p, n_bits, w) == native.from_mont(x, p, n_bits, w)


def test_native_delegates_wide_limbs():
    # w > 32 exceeds the compiled fast path; results must still be correct.
    native = _backend.get_kernels("native")
    w, t = 40, 2
    mask = (1 << w) - 1
    a = (0xDEADBEEF01, 0x123456789A)
    b = (0xFFFFFFFFFF, 0x1)
    total, carry = native.add(a, b, w)
    av = a[0] | (a[1] << w)
    bv = b[0] | (b[1] << w)
    expect = av + bv
    assert total == ((expect >> 0) & mask, (expect >> w) & mask)
    assert carry == expect >> (2 * w)


def test_native_delegates_many_limbs():
    native = _backend.get_kernels("native")
    t, w = 81, 16
    a = (1,) * t
    b = (2,) * t
    total, carry = native.add(a, b, w)
    assert total == (3,) * t and carry == 0


def test_backend_switching():
    previous = _backend.get_backend()
    try:
        assert _backend.set_backend("py") == "py"
        assert _backend.get_backend() == "py"
        assert _backend.set_backend("auto") == "native"
    finally:
        _backend.set_backend(previous)


def test_unknown_backend():
    with pytest.raises(ValueError, match="unknown backend"):
        _backend.set_backend("fortran")
    with pytest.raises(ValueError, match="unknown backend"):
        _backend.get_kernels("fortran")


def test_env_var_selects_backend():
    code = "import montecc; print(montecc.get_backend())"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"MONTECC_BACKEND": "py", "PATH": "/usr/bin:/bin"},
    )
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "py"


def test_scalar_mult_matches_across_backends(toy17, secp160r1):
    from montecc import scalar_mult

    previous = _backend.get_backend()
    try:
        k = 0x3A8F1C9E7B2D5A6F4E8C1B3D5F7A9C2E4B6D8F1A
        _backend.set_backend("native")
        fast = scalar_mult(k, secp160r1.G, secp160r1)
        toy_fast = [scalar_mult(j, toy17.G, toy17) for j in range(25)]
        _backend.set_backend("py")
        slow = scalar_mult(k, secp160r1.G, secp160r1)
        toy_slow = [scalar_mult(j, toy17.G, toy17) for j in range(25)]
        assert fast == slow
        assert toy_fast == toy_slow
    finally:
        _backend.set_backend(previous)
