"""Big-number arithmetic on 32-bit limbs.

Run with ``python demos/01_big_numbers.py``.
"""

from signet import bigint
from signet.bigint import Natural

# %% Values live as tuples of 32-bit words, least significant first.
a = bigint.from_decimal("340282366920938463463374607431768211457")  # 2^128 + 1
print("a          =", a)
print("a.limbs    =", a.limbs)
print("hex        =", bigint.to_hex(a))

# %% Carries ripple across limbs exactly like pencil-and-paper addition.
b = bigint.from_hex("ffffffffffffffff")
print("b + 1      =", bigint.to_hex(bigint.add(b, bigint.ONE)))

# %% Long division returns quotient and remainder together.
q, r = bigint.divrem(a, Natural.from_int(1_000_003))
print("a // p, a % p =", q, r)
assert bigint.add(bigint.mul(q, Natural.from_int(1_000_003)), r) == a

# %% Extended Euclid finds modular inverses: the RSA private exponent comes from this.
d = bigint.mod_inverse(Natural.from_int(17), Natural.from_int(3120))
print("17^-1 mod 3120 =", d)

# %% Square-and-multiply keeps every intermediate below the modulus.
print("7^560 mod 561  =", bigint.mod_exp(Natural.from_int(7), Natural.from_int(560), Natural.from_int(561)))
