"""Operation benchmark harness and cycle-cost model.

The built-in :class:`CostTable` carries the per-operation CPU-cycle costs
of the reference implementation on a 160 MHz 16-bit fixed-point DSP; the
harness measures this package's operations (wall time plus exact operation
counters), composes model predictions from the table, and reports both
side by side.

The prediction for a scalar multiplication follows the double-and-add
shape exactly: bitlen(k) point doublings plus weight(k) point additions.
Conversions in and out of Montgomery form and the final inversion are
measured as separate rows and deliberately not folded into the prediction
(the reference table has no entries for them); the residual shows up as
the reported relative error instead of being attributed arbitrarily.

Wall-clock numbers are for humans; only counters and model arithmetic are
meant for assertions.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import _backend
from .bigmath import Nat
from .curve_gfp import (
    ADD_OP_COST,
    DOUBLE_OP_COST,
    JacobianPoint,
    OpCounters,
    point_add,
    point_double,
    scalar_mult,
    to_jacobian,
)
from .params import registry_get


@dataclass(frozen=True)
class CostTable:
    """Cycle cost per operation on the reference DSP, and its clock rate."""

    field_add: int = 315
    field_sub: int = 357
    mont_mul: int = 2860
    point_add: int = 33049
    point_double: int = 40737
    scalar_mult: int = 10148863
    clock_hz: float = 160e6

    def __post_init__(self):
        for name in (
            "field_add",
            "field_sub",
            "mont_mul",
            "point_add",
            "point_double",
            "scalar_mult",
            "clock_hz",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"cost table entry {name} must be positive")


DSP160_COSTS = CostTable()

# Ops with a row in the reference table; conversions/inversion have none.
_TABLE_OPS = {
    "field_add",
    "field_sub",
    "mont_mul",
    "point_add",
    "point_double",
    "scalar_mult",
}

BENCH_OPS = (
    "field_add",
    "field_sub",
    "mont_mul",
    "to_mont",
    "from_mont",
    "mont_inv",
    "point_double",
    "point_add",
    "scalar_mult",
)

CSV_HEADER = (
    "op,iters,ns_per_op,mont_muls_per_op,predicted_paper_cycles,paper_cycles,rel_error"
)


def predict_scalar_cycles(model: CostTable, k_bits: int, k_weight: int) -> int:
    """Model cycles for one scalar multiplication: doubles plus adds."""
    if k_weight < 0 or k_bits < k_weight:
        raise ValueError("need k_bits >= k_weight >= 0")
    return k_bits * model.point_double + k_weight * model.point_add


def predict_point_cycles(model: CostTable, op_cost: dict) -> int:
    """Model cycles for one point operation from its field-op composition."""
    return (
        op_cost["mont_muls"] * model.mont_mul
        + op_cost["field_adds"] * model.field_add
        + op_cost["field_subs"] * model.field_sub
    )


def cycles_to_seconds(model: CostTable, cycles: int) -> float:
    return cycles / model.clock_hz


@dataclass
class BenchReport:
    """One measured operation: wall time, counters, prediction vs reference."""

    op: str
    curve: str
    backend: str
    iters: int
    ns_per_op: float
    counters: OpCounters
    mont_muls_per_op: float
    predicted_cycles: int | None
    paper_cycles: int | None
    rel_error: float | None

    def csv_row(self) -> str:
        predicted = "" if self.predicted_cycles is None else str(self.predicted_cycles)
        paper = "" if self.paper_cycles is None else str(self.paper_cycles)
        rel = "" if self.rel_error is None else f"{self.rel_error:.6f}"
        return (
            f"{self.op},{self.iters},{self.ns_per_op:.1f},"
            f"{self.mont_muls_per_op:.3f},{predicted},{paper},{rel}"
        )


def _scaled_jacobian(P, lam, ctx):
    # Same point, different projective representative: (X*l^2, Y*l^3, Z*l).
    lam2 = ctx.mont_mul(lam, lam)
    lam3 = ctx.mont_mul(lam2, lam)
    return JacobianPoint(
        ctx.mont_mul(P.X, lam2),
        ctx.mont_mul(P.Y, lam3),
        ctx.mont_mul(P.Z, lam),
    )


def _point_pool(curve, rng, size):
    """Random non-infinity Jacobian points with varied Z, as m*G scaled."""
    ctx = curve.ctx
    cache: dict[int, object] = {}
    pool = []
    for _ in range(size):
        m = rng.randrange(1, curve.n_int)
        if m not in cache:
            cache[m] = to_jacobian(scalar_mult(m, curve.G, curve), curve)
        lam = ctx.to_mont(rng.randrange(1, curve.p_int))
        pool.append(_scaled_jacobian(cache[m], lam, ctx))
    return pool


def _point_pair_pool(curve, rng, size):
    """Pairs avoiding the degenerate routes (equal points, inverse points)."""
    ctx = curve.ctx
    n = curve.n_int
    cache: dict[int, object] = {}
    pairs = []
    while len(pairs) < size:
        ma = rng.randrange(1, n)
        mb = rng.randrange(1, n)
        if ma == mb or (ma + mb) % n == 0:
            continue
        for m in (ma, mb):
            if m not in cache:
                cache[m] = to_jacobian(scalar_mult(m, curve.G, curve), curve)
        la = ctx.to_mont(rng.randrange(1, curve.p_int))
        lb = ctx.to_mont(rng.randrange(1, curve.p_int))
        pairs.append(
            (_scaled_jacobian(cache[ma], la, ctx), _scaled_jacobian(cache[mb], lb, ctx))
        )
    return pairs


def _elem_pool(curve, rng, size):
    return [curve.ctx.to_mont(rng.randrange(0, curve.p_int)) for _ in range(size)]


def _nonzero_elem_pool(curve, rng, size):
    return [curve.ctx.to_mont(rng.randrange(1, curve.p_int)) for _ in range(size)]


def _nat_pool(curve, rng, size):
    t, w = curve.ctx.t, curve.ctx.w
    return [Nat.from_int(rng.randrange(0, curve.p_int), t, w) for _ in range(size)]


def bench_run(
    curve_name: str,
    op: str,
    iters: int,
    model: CostTable = DSP160_COSTS,
    seed: int = 12345,
    backend: str | None = None,
) -> BenchReport:
    """Time one operation for `iters` iterations and build its report.

    Inputs are drawn from a seed-fixed pool, so counters and predictions
    are identical across runs; only wall time varies. For point doubling
    and addition the per-iteration field-op counts are asserted constant
    (the formulas are input-independent).
    """
    if op not in BENCH_OPS:
        raise ValueError(f"unknown bench op {op!r}; choose from {BENCH_OPS}")
    if iters < 1:
        raise ValueError("iters must be >= 1")
    curve = registry_get(curve_name)
    rng = random.Random(seed)
    previous = _backend.get_backend()
    if backend is not None:
        _backend.set_backend(backend)
    try:
        ctx = curve.ctx
        ctr = OpCounters()
        pool_size = min(iters, 32)
        check_constant = op in ("point_double", "point_add")
        predicted = None
        k_scalar = None

        if op in ("field_add", "field_sub", "mont_mul"):
            xs = _elem_pool(curve, rng, pool_size)
            ys = _elem_pool(curve, rng, pool_size)
            fn = {
                "field_add": ctx.mod_add,
                "field_sub": ctx.mod_sub,
                "mont_mul": ctx.mont_mul,
            }[op]

            def run(i):
                fn(xs[i % pool_size], ys[i % pool_size], ctr)

            predicted = getattr(model, op)
        elif op == "to_mont":
            xs = _nat_pool(curve, rng, pool_size)

            def run(i):
                ctx.to_mont(xs[i % pool_size])

        elif op == "from_mont":
            xs = _elem_pool(curve, rng, pool_size)

            def run(i):
                ctx.from_mont(xs[i % pool_size])

        elif op == "mont_inv":
            xs = _nonzero_elem_pool(curve, rng, pool_size)

            def run(i):
                ctx.mont_inv(xs[i % pool_size], ctr)

        elif op == "point_double":
            pool = _point_pool(curve, rng, pool_size)

            def run(i):
                point_double(pool[i % pool_size], curve, ctr)

            predicted = predict_point_cycles(model, DOUBLE_OP_COST)
        elif op == "point_add":
            pairs = _point_pair_pool(curve, rng, pool_size)

            def run(i):
                a, b = pairs[i % pool_size]
                point_add(a, b, curve, ctr)

            predicted = predict_point_cycles(model, ADD_OP_COST)
        else:  # scalar_mult
            bits = curve.bits
            k_scalar = 0
            while k_scalar == 0:
                k_scalar = rng.getrandbits(bits)

            def run(i):
                scalar_mult(k_scalar, curve.G, curve, ctr)

            predicted = predict_scalar_cycles(
                model, k_scalar.bit_length(), k_scalar.bit_count()
            )

        for i in range(min(iters, 3)):  # warmup
            run(i)
        warm = ctr.copy()

        deltas = set()
        start = time.perf_counter_ns()
        if check_constant:
            before = ctr.copy()
            for i in range(iters):
                run(i)
                after = ctr.copy()
                d = after - before
                deltas.add((d.mont_muls, d.field_adds, d.field_subs))
                before = after
        else:
            for i in range(iters):
                run(i)
        elapsed = time.perf_counter_ns() - start

        if check_constant and len(deltas) != 1:
            raise RuntimeError(f"{op} field-op counts varied across inputs: {deltas}")

        total = ctr - warm
        paper = getattr(model, op) if op in _TABLE_OPS else None
        rel = None
        if predicted is not None and paper is not None:
            rel = abs(predicted - paper) / paper
        return BenchReport(
            op=op,
            curve=curve_name,
            backend=_backend.get_backend(),
            iters=iters,
            ns_per_op=elapsed / iters,
            counters=total,
            mont_muls_per_op=total.mont_muls / iters,
            predicted_cycles=predicted,
            paper_cycles=paper,
            rel_error=rel,
        )
    finally:
        _backend.set_backend(previous)


def compare_backends(
    curve_name: str, op: str, iters: int, model: CostTable = DSP160_COSTS, seed: int = 12345
) -> list[BenchReport]:
    """Run the same op on every available backend (pure Python vs compiled)."""
    return [
        bench_run(curve_name, op, iters, model=model, seed=seed, backend=name)
        for name in _backend.available_backends()
    ]
