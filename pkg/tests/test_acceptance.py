"""Exit criteria for the toolkit, one test per criterion.

Each test records its name through the ``criterion`` fixture; a PASS/FAIL
line per criterion is printed in the pytest terminal summary.
"""

import random
import time

import pytest

from signet import bigint, rsa, sha1
from signet.bigint import Natural, NotInvertible, Ordering
from signet.primality import make_rng, miller_rabin

from oracles import bit_compress_words, sieve

N = Natural.from_int
ACIJ = b"Advanced Computing: An International Journal (ACIJ)"
U64 = 2**64 - 1


def test_c1_sha1_vectors(criterion):
    c = criterion("C1 SHA-1 published vectors")
    t0 = time.perf_counter()
    assert sha1.digest_hex(b"") == "da39a3ee5e6b4b0d3255bfef95601890afd80709"
    assert sha1.digest_hex(b"abc") == "a9993e364706816aba3e25717850c26c9cd0d89d"
    assert sha1.digest_hex(b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") \
        == "84983e441c3bd26ebaae4aa1f95129e5e54670f1"
    elapsed = time.perf_counter() - t0
    c["detail"] = f"({elapsed:.3f}s, limit 1s)"
    assert elapsed < 1.0


def test_c2_bit_level_equivalence(criterion):
    c = criterion("C2 word-level compress == bit-array oracle")
    rng = random.Random(0xC2)
    t0 = time.perf_counter()
    blocks = 100
    for _ in range(blocks):
        state = tuple(rng.getrandbits(32) for _ in range(5))
        block = [rng.getrandbits(32) for _ in range(16)]
        assert sha1.compress(state, block) == bit_compress_words(state, block)
    # the IV-seeded case as well
    block = sha1.pad_message(ACIJ)[0]
    assert sha1.compress(sha1.IV, block) == bit_compress_words(sha1.IV, block)
    elapsed = time.perf_counter() - t0
    c["detail"] = f"({blocks + 1} blocks, {elapsed:.2f}s, limit 10s)"
    assert elapsed < 10.0


def test_c3_bignum_native_oracle(criterion):
    c = criterion("C3 bignum vs native 64-bit + division identity")
    cases = 100_000
    rng = random.Random(0xC3)
    t0 = time.perf_counter()
    for _ in range(cases):
        x, y = rng.getrandbits(63), rng.getrandbits(63)
        a, b = N(x), N(y)
        assert int(bigint.add(a, b)) == (x + y) & U64
        hi, lo = (x, y) if x >= y else (y, x)
        assert int(bigint.sub(N(hi), N(lo))) == hi - lo
        expected = Ordering.LESS if x < y else Ordering.GREATER if x > y else Ordering.EQUAL
        assert bigint.compare(a, b) is expected
        q, r = bigint.divrem(a, N(y or 1))
        assert (int(q), int(r)) == divmod(x, y or 1)
        # products of two 32-bit operands stay inside one 64-bit word
        u, v = x >> 31, y >> 31
        assert int(bigint.mul(N(u), N(v))) == (u * v) & U64
    # mixed-width division: 63-bit dividends over short divisors
    for _ in range(cases // 10):
        x, y = rng.getrandbits(63), rng.getrandbits(rng.randint(1, 40)) or 1
        q, r = bigint.divrem(N(x), N(y))
        assert (int(q), int(r)) == divmod(x, y)

    pairs = 10_000
    for _ in range(pairs):
        a = N(rng.getrandbits(256))
        b = N(rng.getrandbits(rng.randint(1, 256)) or 1)
        q, r = bigint.divrem(a, b)
        assert bigint.add(bigint.mul(q, b), r) == a
        assert r < b
    elapsed = time.perf_counter() - t0
    c["detail"] = f"({cases} cases/op, {pairs} 256-bit divisions, {elapsed:.1f}s, limit 30s)"
    assert elapsed < 30.0


def test_c4_extended_euclid(criterion):
    c = criterion("C4 extended Euclid")
    assert bigint.mod_inverse(N(17), N(3120)) == N(2753)
    with pytest.raises(NotInvertible):
        bigint.mod_inverse(N(2), N(4))
    for seed in range(3):
        _, priv = rsa.keygen(192, make_rng(seed))
        assert bigint.divrem(bigint.mul(priv.e, priv.d), priv.phi)[1] == bigint.ONE


def test_c5_primality_vs_sieve(criterion):
    c = criterion("C5 Miller-Rabin agrees with sieve below 10^6")
    limit = 10**6
    is_prime = sieve(limit)
    rng = make_rng(0xC5)
    t0 = time.perf_counter()
    disagreements = [n for n in range(3, limit, 2)
                     if bool(miller_rabin(N(n), 10, rng)) != bool(is_prime[n])]
    elapsed = time.perf_counter() - t0
    c["detail"] = f"({len(disagreements)} disagreements, {elapsed:.1f}s, limit 60s)"
    assert disagreements == []
    assert elapsed < 60.0


def test_c6_rsa_permutation(criterion):
    c = criterion("C6 RSA permutation on 100 values")
    t0 = time.perf_counter()
    pub, priv = rsa.keygen(256, make_rng(0xC6))
    rng = make_rng(0xC6 + 1)
    for _ in range(100):
        x = bigint.random_below(rng, pub.n)
        assert bigint.mod_exp(bigint.mod_exp(x, priv.d, pub.n), pub.e, pub.n) == x
    elapsed = time.perf_counter() - t0
    c["detail"] = f"({elapsed:.2f}s, limit 10s)"
    assert elapsed < 10.0


def test_c7_end_to_end(criterion):
    c = criterion("C7 512-bit keygen, sign, verify, tamper, wrong key")
    t0 = time.perf_counter()
    pub, priv = rsa.keygen(512, make_rng(0xC7))
    keygen_time = time.perf_counter() - t0
    sig = rsa.sign(priv, ACIJ)
    assert rsa.verify(pub, ACIJ, sig)

    flipped = bytearray(ACIJ)
    flipped[0] ^= 0x01
    assert not rsa.verify(pub, bytes(flipped), sig)

    other_pub, _ = rsa.keygen(512, make_rng(0xC7 + 1))
    if sig.s < other_pub.n:
        assert not rsa.verify(other_pub, ACIJ, sig)
    else:
        with pytest.raises(rsa.SignatureOutOfRange):
            rsa.verify(other_pub, ACIJ, sig)
    c["detail"] = f"(keygen {keygen_time:.2f}s, limit 30s)"
    assert keygen_time < 30.0


def test_c8_toy_key(criterion):
    c = criterion("C8 toy key p=61 q=53 e=17")
    pub, priv = rsa.keypair_from_primes(N(61), N(53), N(17))
    assert (pub.n, priv.phi, priv.d) == (N(3233), N(3120), N(2753))
    with pytest.raises(rsa.ModulusTooSmall):
        rsa.sign(priv, ACIJ)
