"""Message digests for the signing pipeline.

The default is the standard 160-bit SHA-1 (a natural fit for a 160-bit
curve); protocol entry points accept any callable mapping bytes to a
digest, and tests use :func:`identity_digest` to pin exact values.
"""

from __future__ import annotations

import hashlib


def sha1_digest(message: bytes) -> bytes:
    """Standard 20-byte SHA-1 digest of the message."""
    return hashlib.sha1(message).digest()


def identity_digest(message: bytes) -> bytes:
    """Stub digest: a message of at most 20 bytes is its own digest."""
    if len(message) > 20:
        raise ValueError("identity digest is limited to 20-byte messages")
    return message
