"""Textbook RSA signatures over SHA-1 digests (signature with appendix).

The digest is signed as a raw big-endian integer with no padding scheme.
That is faithful to the classic scheme and unsafe for production use.
"""

from dataclasses import dataclass

from . import bigint, sha1
from .bigint import ONE, Natural, Ordering
from .primality import DEFAULT_ROUNDS, generate_prime

MIN_MODULUS_BITS = 192
DEFAULT_E = Natural.from_int(65537)
DIGEST_BOUND = bigint.shift_left(ONE, 160)


class ModulusTooSmall(ValueError):
    """The modulus cannot hold a 160-bit digest."""


class SignatureOutOfRange(ValueError):
    pass


class KeyFormatError(ValueError):
    """A key or signature file is malformed."""


@dataclass(frozen=True)
class PublicKey:
    n: Natural
    e: Natural


@dataclass(frozen=True)
class PrivateKey:
    n: Natural
    e: Natural
    d: Natural
    p: Natural
    q: Natural
    phi: Natural

    @property
    def public(self):
        return PublicKey(self.n, self.e)


@dataclass(frozen=True)
class Signature:
    s: Natural


def _check_private(key):
    if bigint.mul(key.p, key.q) != key.n:
        raise ValueError("p*q does not equal n")
    phi = bigint.mul(bigint.sub(key.p, ONE), bigint.sub(key.q, ONE))
    if phi != key.phi:
        raise ValueError("phi does not equal (p-1)(q-1)")
    if bigint.divrem(bigint.mul(key.e, key.d), phi)[1] != ONE:
        raise ValueError("e*d is not 1 mod phi")
    if not (ONE < key.d < phi):
        raise ValueError("d outside (1, phi)")


def keypair_from_primes(p, q, e):
    """Assemble a keypair from known primes; no size checks are applied."""
    if p == q:
        raise ValueError("p and q must be distinct")
    n = bigint.mul(p, q)
    phi = bigint.mul(bigint.sub(p, ONE), bigint.sub(q, ONE))
    if not (ONE < e < phi):
        raise ValueError("e must lie in (1, phi)")
    d = bigint.mod_inverse(e, phi)
    key = PrivateKey(n=n, e=e, d=d, p=p, q=q, phi=phi)
    _check_private(key)
    return key.public, key


def _random_exponent(phi, rng):
    # odd e in (1, phi) coprime to phi
    span = bigint.sub(phi, Natural.from_int(3))
    while True:
        e = bigint.add(bigint.random_below(rng, span), Natural.from_int(2))
        if not bigint.is_odd(e):
            continue
        if bigint.gcd(e, phi) == ONE:
            return e


def keygen(modulus_bits, rng, e=None, random_e=False, rounds=DEFAULT_ROUNDS):
    """Generate ``(PublicKey, PrivateKey)``.

    Both primes have ``ceil(modulus_bits / 2)`` bits.  The public exponent is
    ``e`` if given, a random odd value if ``random_e``, else 65537 with a
    random fallback when 65537 shares a factor with phi.
    """
    if modulus_bits < MIN_MODULUS_BITS:
        raise ValueError(f"modulus must be at least {MIN_MODULUS_BITS} bits, got {modulus_bits}")
    if e is not None and (not bigint.is_odd(e) or e < 3):
        raise ValueError("public exponent must be odd and at least 3")

    half = -(-modulus_bits // 2)
    min_gap_bits = modulus_bits // 4
    p = generate_prime(half, rng, rounds)
    while True:
        q = generate_prime(half, rng, rounds)
        if q == p:
            continue
        gap = bigint.sub(p, q) if p > q else bigint.sub(q, p)
        if bigint.bit_length(gap) >= min_gap_bits:
            break

    n = bigint.mul(p, q)
    phi = bigint.mul(bigint.sub(p, ONE), bigint.sub(q, ONE))
    if e is not None:
        if bigint.gcd(e, phi) != ONE:
            raise bigint.NotInvertible(f"e=0x{bigint.to_hex(e)} is not coprime to phi")
    elif random_e:
        e = _random_exponent(phi, rng)
    else:
        e = DEFAULT_E if bigint.gcd(DEFAULT_E, phi) == ONE else _random_exponent(phi, rng)

    d = bigint.mod_inverse(e, phi)
    key = PrivateKey(n=n, e=e, d=d, p=p, q=q, phi=phi)
    _check_private(key)
    return key.public, key


def encode_digest(words):
    """Big-endian integer value of the 20 digest bytes, H1 first."""
    return bigint.from_bytes(sha1.to_bytes(words))


def message_representative(message):
    return encode_digest(sha1.digest(message))


def sign(key, message):
    if bigint.compare(key.n, DIGEST_BOUND) is not Ordering.GREATER:
        raise ModulusTooSmall("modulus must exceed 2^160 to hold a SHA-1 digest")
    m = message_representative(message)
    return Signature(bigint.mod_exp(m, key.d, key.n))


def verify(key, message, sig):
    """True iff ``sig`` is a valid signature on ``message`` under ``key``."""
    if bigint.compare(sig.s, key.n) is not Ordering.LESS:
        raise SignatureOutOfRange("signature value is not below the modulus")
    recovered = bigint.mod_exp(sig.s, key.e, key.n)
    return recovered == message_representative(message)


# ---------------------------------------------------------------------------
# text file formats: one "name=<lowercase hex>" per line


def _dump(pairs):
    return "".join(f"{name}={bigint.to_hex(value)}\n" for name, value in pairs)


def _parse(text, names):
    if not text.endswith("\n"):
        raise KeyFormatError("file must end with a newline")
    fields = {}
    for lineno, line in enumerate(text[:-1].split("\n"), 1):
        name, sep, value = line.partition("=")
        if not sep or name not in names:
            raise KeyFormatError(f"line {lineno}: unexpected line {line!r}")
        if name in fields:
            raise KeyFormatError(f"line {lineno}: duplicate field {name!r}")
        if not value or value.strip("0123456789abcdef") or (value[0] == "0" and value != "0"):
            raise KeyFormatError(f"line {lineno}: {name} is not canonical lowercase hex")
        fields[name] = bigint.from_hex(value)
    missing = [n for n in names if n not in fields]
    if missing:
        raise KeyFormatError(f"missing field(s): {', '.join(missing)}")
    return fields


def dump_public_key(key):
    return _dump([("n", key.n), ("e", key.e)])


def dump_private_key(key):
    return _dump([("n", key.n), ("e", key.e), ("d", key.d), ("p", key.p), ("q", key.q)])


def dump_signature(sig):
    return _dump([("s", sig.s)])


def load_public_key(text):
    f = _parse(text, ("n", "e"))
    if f["n"] < 2 or f["e"] < 1:
        raise KeyFormatError("public key values out of range")
    return PublicKey(f["n"], f["e"])


def load_private_key(text):
    f = _parse(text, ("n", "e", "d", "p", "q"))
    try:
        phi = bigint.mul(bigint.sub(f["p"], ONE), bigint.sub(f["q"], ONE))
        key = PrivateKey(f["n"], f["e"], f["d"], f["p"], f["q"], phi)
        _check_private(key)
    except (ValueError, ArithmeticError) as exc:
        raise KeyFormatError(f"inconsistent private key: {exc}") from None
    return key


def load_signature(text):
    return Signature(_parse(text, ("s",))["s"])
