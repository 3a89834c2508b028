# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled limb kernels.

Same nine-function surface as ``_pycore``; operands are limb tuples. The
fast paths cover w <= 32 and t <= 80 limbs (products and carries then fit
in 64-bit words); anything else is delegated to the pure-Python kernels so
both backends accept every shape.
"""

from libc.stdint cimport uint64_t

from . import _pycore

NAME = "native"

cdef enum:
    MAX_LIMBS = 80


cdef inline void _load(uint64_t *dst, tuple src, Py_ssize_t t):
    cdef Py_ssize_t i
    for i in range(t):
        dst[i] = src[i]


cdef inline tuple _dump(uint64_t *src, Py_ssize_t t):
    cdef Py_ssize_t i
    return tuple([src[i] for i in range(t)])


cdef inline int _cmp_raw(uint64_t *a, uint64_t *b, Py_ssize_t t):
    cdef Py_ssize_t i
    for i in range(t - 1, -1, -1):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef inline uint64_t _sub_raw(uint64_t *a, uint64_t *b, Py_ssize_t t,
                              uint64_t mask, unsigned int w):
    # a -= b in place; returns outgoing borrow.
    cdef Py_ssize_t i
    cdef uint64_t borrow = 0, bi
    for i in range(t):
        bi = b[i] + borrow
        if a[i] < bi:
            a[i] = (a[i] + (mask + 1)) - bi
            borrow = 1
        else:
            a[i] = a[i] - bi
            borrow = 0
    return borrow


def add(tuple a, tuple b, unsigned int w):
    cdef Py_ssize_t t = len(a)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.add(a, b, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rb[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry = 0, s
    cdef Py_ssize_t i
    _load(ra, a, t)
    _load(rb, b, t)
    for i in range(t):
        s = ra[i] + rb[i] + carry
        ra[i] = s & mask
        carry = s >> w
    return _dump(ra, t), carry


def sub(tuple a, tuple b, unsigned int w):
    cdef Py_ssize_t t = len(a)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.sub(a, b, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rb[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t borrow
    _load(ra, a, t)
    _load(rb, b, t)
    borrow = _sub_raw(ra, rb, t, mask, w)
    return _dump(ra, t), borrow


def cmp(tuple a, tuple b):
    cdef Py_ssize_t t = len(a)
    if t > MAX_LIMBS:
        return _pycore.cmp(a, b)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rb[MAX_LIMBS]
    _load(ra, a, t)
    _load(rb, b, t)
    return _cmp_raw(ra, rb, t)


def shl1(tuple a, unsigned int w):
    cdef Py_ssize_t t = len(a)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.shl1(a, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry = 0, s
    cdef Py_ssize_t i
    _load(ra, a, t)
    for i in range(t):
        s = (ra[i] << 1) | carry
        ra[i] = s & mask
        carry = s >> w
    return _dump(ra, t), carry


def mod_add(tuple a, tuple b, tuple p, unsigned int w):
    cdef Py_ssize_t t = len(a)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.mod_add(a, b, p, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rb[MAX_LIMBS]
    cdef uint64_t rp[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry = 0, s
    cdef Py_ssize_t i
    _load(ra, a, t)
    _load(rb, b, t)
    _load(rp, p, t)
    for i in range(t):
        s = ra[i] + rb[i] + carry
        ra[i] = s & mask
        carry = s >> w
    if carry or _cmp_raw(ra, rp, t) >= 0:
        _sub_raw(ra, rp, t, mask, w)
    return _dump(ra, t)


def mod_sub(tuple a, tuple b, tuple p, unsigned int w):
    cdef Py_ssize_t t = len(a)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.mod_sub(a, b, p, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rb[MAX_LIMBS]
    cdef uint64_t rp[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry = 0, s
    cdef Py_ssize_t i
    _load(ra, a, t)
    _load(rb, b, t)
    _load(rp, p, t)
    if _sub_raw(ra, rb, t, mask, w):
        for i in range(t):
            s = ra[i] + rp[i] + carry
            ra[i] = s & mask
            carry = s >> w
    return _dump(ra, t)


def to_mont(tuple x, tuple p, unsigned int n_bits, unsigned int w):
    cdef Py_ssize_t t = len(x)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.to_mont(x, p, n_bits, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rp[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry, s
    cdef Py_ssize_t i
    cdef unsigned int it
    _load(ra, x, t)
    _load(rp, p, t)
    for it in range(n_bits):
        carry = 0
        for i in range(t):
            s = (ra[i] << 1) | carry
            ra[i] = s & mask
            carry = s >> w
        if carry or _cmp_raw(ra, rp, t) >= 0:
            _sub_raw(ra, rp, t, mask, w)
    return _dump(ra, t)


def from_mont(tuple x, tuple p, unsigned int n_bits, unsigned int w):
    cdef Py_ssize_t t = len(x)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.from_mont(x, p, n_bits, w)
    cdef uint64_t ra[MAX_LIMBS]
    cdef uint64_t rp[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t carry, s
    cdef unsigned int low = w - 1
    cdef Py_ssize_t i
    cdef unsigned int it
    _load(ra, x, t)
    _load(rp, p, t)
    for it in range(n_bits):
        carry = 0
        if ra[0] & 1:
            for i in range(t):
                s = ra[i] + rp[i] + carry
                ra[i] = s & mask
                carry = s >> w
        for i in range(t - 1):
            ra[i] = (ra[i] >> 1) | ((ra[i + 1] & 1) << low)
        ra[t - 1] = (ra[t - 1] >> 1) | (carry << low)
    return _dump(ra, t)


def mont_mul(tuple x, tuple y, tuple p, unsigned long long pbar, unsigned int w):
    cdef Py_ssize_t t = len(x)
    if w > 32 or t > MAX_LIMBS:
        return _pycore.mont_mul(x, y, p, pbar, w)
    cdef uint64_t rx[MAX_LIMBS]
    cdef uint64_t ry[MAX_LIMBS]
    cdef uint64_t rp[MAX_LIMBS]
    cdef uint64_t z[MAX_LIMBS]
    cdef uint64_t mask = ((<uint64_t>1) << w) - 1
    cdef uint64_t z_hi = 0, xj, u, carry, v, hi
    cdef Py_ssize_t i, j
    _load(rx, x, t)
    _load(ry, y, t)
    _load(rp, p, t)
    for i in range(t):
        z[i] = 0
    for j in range(t):
        xj = rx[j]
        carry = 0
        for i in range(t):
            v = z[i] + xj * ry[i] + carry
            z[i] = v & mask
            carry = v >> w
        hi = z_hi + carry
        u = (z[0] * pbar) & mask
        carry = 0
        for i in range(t):
            v = z[i] + u * rp[i] + carry
            z[i] = v & mask
            carry = v >> w
        hi += carry
        if z[0] != 0:
            raise ArithmeticError("montgomery reduction: low limb not divisible by base")
        for i in range(t - 1):
            z[i] = z[i + 1]
        z[t - 1] = hi & mask
        z_hi = hi >> w
    if z_hi or _cmp_raw(z, rp, t) >= 0:
        _sub_raw(z, rp, t, mask, w)
    return _dump(z, t)
