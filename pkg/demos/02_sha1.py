"""SHA-1 step by step: padding, schedule, compression.

Run with ``python demos/02_sha1.py``.
"""

import struct

from signet import sha1

message = b"Advanced Computing: An International Journal (ACIJ)"

# %% Padding appends 0x80, zeros, then the 64-bit bit length.
blocks = sha1.pad_message(message)
raw = b"".join(struct.pack(">16I", *blk) for blk in blocks)
print(f"{len(message)} bytes -> {len(blocks)} block(s)")
print("last 8 bytes (bit length):", raw[-8:].hex())

# %% Each 16-word block expands into 80 schedule words.
schedule = sha1.expand_schedule(blocks[0])
print("X16..X19:", [f"{w:08x}" for w in schedule[16:20]])

# %% Four 20-step rounds fold the block into the chaining state.
state = sha1.IV
for blk in blocks:
    state = sha1.compress(state, blk)
print("H1..H5  :", [f"{w:08x}" for w in state])
print("digest  :", sha1.to_hex(state))
print("binary  :", "".join(f"{w:032b}" for w in state))
assert sha1.to_hex(state) == sha1.digest_hex(message)
