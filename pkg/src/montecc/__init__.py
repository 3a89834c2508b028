"""Prime-field elliptic curve engine built on limb-based Montgomery arithmetic.

Layers, bottom up:

* ``bigmath``       -- fixed-capacity naturals in w-bit limbs
* ``montgomery``    -- Montgomery-form field arithmetic (conversions, CIOS
                       multiplier, halving restoration, Fermat inversion)
* ``curve_gfp``     -- Jacobian group law and MSB-first double-and-add
                       scalar multiplication, with per-session op counters
* ``binary_affine`` -- toy GF(2^m) affine group law, exhaustively testable
* ``params``        -- curve registry (secp160r1 + toys) with validation
* ``protocols``     -- ECDH, ECDSA, ECMQV
* ``bench`` / ``cli`` -- cost-model benchmark harness and command line

The limb kernels have a compiled backend (Cython) and a pure-Python
fallback, selected at import; see ``montecc._backend``.
"""

from ._backend import available_backends, get_backend, set_backend
from .bench import (
    BenchReport,
    CostTable,
    DSP160_COSTS,
    bench_run,
    compare_backends,
    cycles_to_seconds,
    predict_scalar_cycles,
)
from .bigmath import Nat
from .binary_affine import (
    BinAffinePoint,
    BinFieldElem,
    bin_add,
    bin_curve_points,
    bin_inv,
    bin_is_on_curve,
    bin_mul,
    bin_point_add,
    bin_point_double,
)
from .curve_gfp import (
    AffinePoint,
    JacobianPoint,
    OpCounters,
    decode_point,
    encode_point,
    is_on_curve,
    point_add,
    point_double,
    reference_scalar_mult,
    scalar_mult,
    to_affine,
    to_jacobian,
)
from .digests import identity_digest, sha1_digest
from .montgomery import FieldElem, MontCtx
from .params import (
    CurveParams,
    ValidationReport,
    keygen,
    params_from_text,
    params_to_text,
    registered_curves,
    registry_get,
    validate_params,
)
from .protocols import (
    KeyPair,
    RetryNonce,
    Signature,
    digest_for_curve,
    ecdh_shared,
    ecdsa_sign,
    ecdsa_verify,
    ecmqv_shared,
    validate_public_key,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "BenchReport",
    "BinAffinePoint",
    "BinFieldElem",
    "CostTable",
    "CurveParams",
    "DSP160_COSTS",
    "FieldElem",
    "JacobianPoint",
    "KeyPair",
    "MontCtx",
    "Nat",
    "OpCounters",
    "RetryNonce",
    "Signature",
    "ValidationReport",
    "available_backends",
    "bench_run",
    "bin_add",
    "bin_curve_points",
    "bin_inv",
    "bin_is_on_curve",
    "bin_mul",
    "bin_point_add",
    "bin_point_double",
    "compare_backends",
    "cycles_to_seconds",
    "decode_point",
    "digest_for_curve",
    "ecdh_shared",
    "ecdsa_sign",
    "ecdsa_verify",
    "ecmqv_shared",
    "encode_point",
    "get_backend",
    "identity_digest",
    "is_on_curve",
    "keygen",
    "params_from_text",
    "params_to_text",
    "point_add",
    "point_double",
    "predict_scalar_cycles",
    "reference_scalar_mult",
    "registered_curves",
    "registry_get",
    "scalar_mult",
    "set_backend",
    "sha1_digest",
    "to_affine",
    "to_jacobian",
    "validate_params",
    "validate_public_key",
]
