"""Finding large probable primes.

Run with ``python demos/03_primes.py``.
"""

import time

from signet import bigint, primality
from signet.bigint import Natural

rng = primality.make_rng(2013)

# %% Trial division removes most candidates before the expensive test.
print("smallest factor of 91:", primality.trial_division(Natural.from_int(91)))

# %% 561 fools Fermat's test for every coprime base but not Miller-Rabin.
verdict = primality.miller_rabin(Natural.from_int(561), 10, rng)
print("561 ->", verdict)

# %% A random 256-bit prime.
t0 = time.perf_counter()
p = primality.generate_prime(256, rng)
print(f"256-bit prime in {time.perf_counter() - t0:.2f}s:")
print(" ", bigint.to_decimal(p))
print("  bit length", bigint.bit_length(p))
