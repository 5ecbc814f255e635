"""RSA digital signatures over SHA-1, built on a from-scratch bignum library."""

from .bigint import Natural
from .primality import make_rng
from .rsa import PrivateKey, PublicKey, Signature, keygen, sign, verify
from .sha1 import digest_hex

__all__ = [
    "Natural",
    "PrivateKey",
    "PublicKey",
    "Signature",
    "digest_hex",
    "keygen",
    "make_rng",
    "sign",
    "verify",
]
