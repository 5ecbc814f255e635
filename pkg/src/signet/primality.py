"""Probable-prime testing and random prime generation."""

import random
from dataclasses import dataclass

from . import bigint
from .bigint import ONE, Natural, Ordering

TRIAL_BOUND = 2000
DEFAULT_ROUNDS = 25
MIN_PRIME_BITS = 16

_TWO = Natural.from_int(2)
_THREE = Natural.from_int(3)


def make_rng(seed=None):
    """Seeded generator for reproducible runs, OS entropy otherwise."""
    if seed is None:
        return random.SystemRandom()
    return random.Random(seed)


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


SMALL_PRIMES = _small_primes(TRIAL_BOUND)


@dataclass(frozen=True)
class Composite:
    """Definitive verdict; ``witness`` is the base that exposed ``n``."""

    witness: Natural

    def __bool__(self):
        return False


@dataclass(frozen=True)
class ProbablePrime:
    rounds: int

    def __bool__(self):
        return True

    @property
    def error_bound(self):
        return 4.0 ** -self.rounds


def trial_division(n, bound=TRIAL_BOUND):
    """Smallest prime ``p <= bound`` properly dividing ``n``, or None.

    ``n`` itself is never reported, so a prime input yields None.
    """
    if bigint.compare(n, _TWO) is Ordering.LESS:
        raise ValueError("trial division needs n >= 2")
    primes = SMALL_PRIMES if bound <= TRIAL_BOUND else _small_primes(bound)
    small = int(n) if len(n.limbs) <= 2 else None
    for p in primes:
        if p > bound:
            break
        if small is not None:
            if p * p > small:
                return None
            if small % p == 0:
                return p
        else:
            limbs = list(n.limbs)
            if bigint._divmod_small_inplace(limbs, p) == 0:
                return p
    return None


def _decompose(n_minus_1):
    s = 0
    while not bigint.test_bit(n_minus_1, s):
        s += 1
    return s, bigint.shift_right(n_minus_1, s)


def miller_rabin(n, rounds, rng):
    """Miller-Rabin with uniformly random bases in ``[2, n-2]``."""
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    if bigint.compare(n, _THREE) is Ordering.LESS or not bigint.is_odd(n):
        raise ValueError("miller_rabin needs an odd n >= 3")
    if n == _THREE:
        return ProbablePrime(rounds)

    n_minus_1 = bigint.sub(n, ONE)
    s, t = _decompose(n_minus_1)
    span = bigint.sub(n, _THREE)  # bases drawn from [2, n-2]
    for _ in range(rounds):
        a = bigint.add(bigint.random_below(rng, span), _TWO)
        if not _passes(a, s, t, n, n_minus_1):
            return Composite(a)
    return ProbablePrime(rounds)


def _passes(a, s, t, n, n_minus_1):
    x = bigint.mod_exp(a, t, n)
    if x == ONE or x == n_minus_1:
        return True
    for _ in range(s - 1):
        x = bigint.divrem(bigint.mul(x, x), n)[1]
        if x == n_minus_1:
            return True
        if x == ONE:
            return False
    return False


def is_probable_prime(n, rounds=DEFAULT_ROUNDS, rng=None):
    """Full classification for any Natural, small cases included."""
    if bigint.compare(n, _TWO) is Ordering.LESS:
        return False
    if n == _TWO or n == _THREE:
        return True
    if not bigint.is_odd(n):
        return False
    if trial_division(n) is not None:
        return False
    return bool(miller_rabin(n, rounds, rng or make_rng()))


def random_candidate(bits, rng):
    """Random odd value with exactly ``bits`` bits."""
    limbs = list(bigint.random_bits(rng, bits).limbs)
    limbs += [0] * (-(-bits // 32) - len(limbs))
    top_word, top_bit = divmod(bits - 1, 32)
    limbs[top_word] |= 1 << top_bit
    limbs[0] |= 1
    return Natural(limbs)


def generate_prime(bits, rng, rounds=DEFAULT_ROUNDS):
    if bits < MIN_PRIME_BITS:
        raise ValueError(f"prime size must be at least {MIN_PRIME_BITS} bits")
    while True:
        candidate = random_candidate(bits, rng)
        if trial_division(candidate) is not None:
            continue
        if miller_rabin(candidate, rounds, rng):
            return candidate
