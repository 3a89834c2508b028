"""Command-line front end.

Subcommands: keygen, ecdh, sign, verify, mqv, bench, validate. Exit codes:
0 on success, 1 on operational failure (bad key file, invalid point,
failed verification...), 2 on usage errors. Diagnostics go to stderr;
results go to stdout.

Key files are two lines of text, diff-able and dependency-free:

    d=<hex private scalar>
    Q=<hex SEC1 uncompressed public point>
"""

from __future__ import annotations

import argparse
import random
import secrets
import sys

from .bench import BENCH_OPS, CSV_HEADER, bench_run, compare_backends
from .curve_gfp import decode_point, encode_point, scalar_mult
from .digests import identity_digest, sha1_digest
from .params import registry_build, registry_get, validate_params
from .protocols import (
    KeyPair,
    RetryNonce,
    Signature,
    digest_for_curve,
    ecdh_shared,
    ecdsa_sign,
    ecdsa_verify,
    ecmqv_shared,
)

_DIGESTS = {"sha1": sha1_digest, "identity": identity_digest}


def _rng_from_seed(seed):
    return random.Random(seed) if seed is not None else secrets.SystemRandom()


def _write_keyfile(path: str, kp: KeyPair, curve) -> None:
    d_hex = kp.d.to_bytes(curve.scalar_bytes).hex()
    q_hex = encode_point(kp.Q, curve).hex()
    with open(path, "w", encoding="ascii") as fh:
        fh.write(f"d={d_hex}\nQ={q_hex}\n")


def _read_keyfile(path: str, curve_name: str) -> KeyPair:
    curve = registry_get(curve_name)
    fields = {}
    with open(path, encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}: malformed line {line!r}")
            fields[key.strip()] = value.strip()
    if sorted(fields) != ["Q", "d"]:
        raise ValueError(f"{path}: expected exactly the keys d and Q")
    d = int(fields["d"], 16)
    if not 1 <= d <= curve.n_int - 1:
        raise ValueError(f"{path}: private scalar out of range")
    Q = decode_point(fields["Q"], curve)
    if Q != scalar_mult(d, curve.G, curve):
        raise ValueError(f"{path}: public point does not match private scalar")
    return KeyPair(curve.scalar_nat(d), Q, curve_name)


def _read_msg(path: str) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _cmd_keygen(args) -> int:
    curve = registry_get(args.curve)
    kp = KeyPair.generate(args.curve, _rng_from_seed(args.seed))
    _write_keyfile(args.out, kp, curve)
    print(encode_point(kp.Q, curve).hex())
    return 0


def _cmd_ecdh(args) -> int:
    kp = _read_keyfile(args.priv, args.curve)
    peer = decode_point(args.peer, registry_get(args.curve))
    print(ecdh_shared(kp, peer).hex())
    return 0


def _cmd_sign(args) -> int:
    curve = registry_get(args.curve)
    kp = _read_keyfile(args.priv, args.curve)
    e = digest_for_curve(_read_msg(args.msg), curve, _DIGESTS[args.digest])
    if args.nonce is not None:
        sig = ecdsa_sign(kp, e, int(args.nonce, 16))
    else:
        rng = _rng_from_seed(args.seed)
        while True:
            k = rng.randrange(1, curve.n_int)
            try:
                sig = ecdsa_sign(kp, e, k)
                break
            except RetryNonce:
                continue
    print(sig.to_hex(curve))
    return 0


def _cmd_verify(args) -> int:
    curve = registry_get(args.curve)
    pub = decode_point(args.pub, curve)
    e = digest_for_curve(_read_msg(args.msg), curve, _DIGESTS[args.digest])
    sig = Signature.from_hex(args.sig, curve)
    if ecdsa_verify(pub, e, sig, curve):
        print("OK")
        return 0
    print("FAIL")
    return 1


def _cmd_mqv(args) -> int:
    curve = registry_get(args.curve)
    static_kp = _read_keyfile(args.static, args.curve)
    eph_kp = _read_keyfile(args.eph, args.curve)
    peer_static = decode_point(args.peer_static, curve)
    peer_eph = decode_point(args.peer_eph, curve)
    print(ecmqv_shared(static_kp, eph_kp, peer_static, peer_eph).hex())
    return 0


def _cmd_bench(args) -> int:
    ops = BENCH_OPS if args.op is None else (args.op,)
    rows = []
    header = (
        f"{'op':<14} {'backend':<8} {'iters':>7} {'ns/op':>14} "
        f"{'muls/op':>9} {'predicted':>10} {'paper':>10} {'rel_err':>8}"
    )
    print(header)
    for op in ops:
        if args.compare:
            reports = compare_backends(args.curve, op, args.iters, seed=args.seed)
        else:
            reports = [
                bench_run(args.curve, op, args.iters, seed=args.seed, backend=args.backend)
            ]
        for r in reports:
            predicted = "-" if r.predicted_cycles is None else str(r.predicted_cycles)
            paper = "-" if r.paper_cycles is None else str(r.paper_cycles)
            rel = "-" if r.rel_error is None else f"{r.rel_error:.4f}"
            print(
                f"{r.op:<14} {r.backend:<8} {r.iters:>7} {r.ns_per_op:>14.1f} "
                f"{r.mont_muls_per_op:>9.3f} {predicted:>10} {paper:>10} {rel:>8}"
            )
            rows.append(r)
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(CSV_HEADER + "\n")
            for r in rows:
                fh.write(r.csv_row() + "\n")
    return 0


def _cmd_validate(args) -> int:
    params = registry_build(args.curve)
    report = validate_params(params)
    print(report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="montecc",
        description="Prime-field elliptic curve toolkit: keys, ECDH/ECDSA/ECMQV, benchmarks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_curve(p):
        p.add_argument("--curve", required=True, help="registered curve name")

    p = sub.add_parser("keygen", help="generate a key pair and write a key file")
    add_curve(p)
    p.add_argument("--seed", type=int, help="deterministic RNG seed (default: system RNG)")
    p.add_argument("--out", required=True, help="key file to write")
    p.set_defaults(fn=_cmd_keygen)

    p = sub.add_parser("ecdh", help="derive a Diffie-Hellman shared secret")
    add_curve(p)
    p.add_argument("--priv", required=True, help="own key file")
    p.add_argument("--peer", required=True, help="peer public point, SEC1 hex")
    p.set_defaults(fn=_cmd_ecdh)

    p = sub.add_parser("sign", help="sign a message file")
    add_curve(p)
    p.add_argument("--priv", required=True, help="signer key file")
    p.add_argument("--msg", required=True, help="message file")
    p.add_argument("--nonce", help="per-signature nonce as hex (default: random)")
    p.add_argument("--seed", type=int, help="RNG seed for the random nonce")
    p.add_argument("--digest", choices=sorted(_DIGESTS), default="sha1")
    p.set_defaults(fn=_cmd_sign)

    p = sub.add_parser("verify", help="verify a signature; prints OK or FAIL")
    add_curve(p)
    p.add_argument("--pub", required=True, help="signer public point, SEC1 hex")
    p.add_argument("--msg", required=True, help="message file")
    p.add_argument("--sig", required=True, help="signature as fixed-width r||s hex")
    p.add_argument("--digest", choices=sorted(_DIGESTS), default="sha1")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("mqv", help="derive an MQV shared secret")
    add_curve(p)
    p.add_argument("--static", required=True, help="own static key file")
    p.add_argument("--eph", required=True, help="own ephemeral key file")
    p.add_argument("--peer-static", required=True, help="peer static point, SEC1 hex")
    p.add_argument("--peer-eph", required=True, help="peer ephemeral point, SEC1 hex")
    p.set_defaults(fn=_cmd_mqv)

    p = sub.add_parser("bench", help="time operations and compare to the cost model")
    add_curve(p)
    p.add_argument("--op", choices=BENCH_OPS, help="single op (default: all)")
    p.add_argument("--iters", type=int, default=100)
    p.add_argument("--csv", help="also write rows to this CSV file")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument(
        "--backend",
        choices=("auto", "py", "native"),
        default=None,
        help="kernel backend to time (default: active)",
    )
    p.add_argument(
        "--compare",
        action="store_true",
        help="time every available backend (stdout only, not CSV)",
    )
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("validate", help="run domain-parameter validation checks")
    add_curve(p)
    p.set_defaults(fn=_cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "compare", False) and getattr(args, "csv", None):
        parser.error("--compare and --csv cannot be combined")
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, OSError, RetryNonce) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
