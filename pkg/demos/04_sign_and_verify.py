"""The whole signature stream: keys, hash, sign, verify.

Run with ``python demos/04_sign_and_verify.py``.
"""

import time

from signet import bigint, rsa, sha1
from signet.primality import make_rng

message = b"Advanced Computing: An International Journal (ACIJ)"

# %% Key generation: two primes, their product, phi, e and d = e^-1 mod phi.
t0 = time.perf_counter()
pub, priv = rsa.keygen(512, make_rng(7))
print(f"keygen: {time.perf_counter() - t0:.2f}s, n has {bigint.bit_length(pub.n)} bits")
print("e =", bigint.to_hex(pub.e))
print("d =", bigint.to_hex(priv.d))

# %% The signer hashes the message and raises the digest to d mod n.
m = rsa.message_representative(message)
print("m' =", bigint.to_hex(m), "(SHA-1", sha1.digest_hex(message) + ")")
sig = rsa.sign(priv, message)
print("s  =", bigint.to_hex(sig.s))

# %% Anyone with (n, e) recomputes m' = s^e mod n and compares.
recovered = bigint.mod_exp(sig.s, pub.e, pub.n)
print("s^e mod n =", bigint.to_hex(recovered))
print("verify:", rsa.verify(pub, message, sig))
print("verify tampered:", rsa.verify(pub, message.replace(b"ACIJ", b"ACIX"), sig))

# %% The key files are plain text.
print(rsa.dump_public_key(pub), end="")
