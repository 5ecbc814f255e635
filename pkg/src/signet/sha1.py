"""SHA-1 on 32-bit words.

Messages are byte strings.  A digest is five chaining words H1..H5 and is
rendered as 40 lowercase hex characters, H1 first.
"""

import struct

MASK32 = 0xFFFFFFFF

IV = (0x67452301, 0xEFCDAB89, 0x98BADCFE, 0x10325476, 0xC3D2E1F0)
ROUND_CONSTANTS = (0x5A827999, 0x6ED9EBA1, 0x8F1BBCDC, 0xCA62C1D6)

BLOCK_BYTES = 64
_BLOCK = struct.Struct(">16I")


def rotl(x, s):
    return ((x << s) | (x >> (32 - s))) & MASK32


def choose(u, v, w):
    return (u & v) | (~u & w)


def parity(u, v, w):
    return u ^ v ^ w


def majority(u, v, w):
    return (u & v) | (u & w) | (v & w)


# rounds 0..3 use choose, parity, majority, parity
_ROUND_FUNCS = (choose, parity, majority, parity)


def round_logic(round_index, u, v, w):
    if not 0 <= round_index <= 3:
        raise ValueError(f"round index must be 0..3, got {round_index}")
    return _ROUND_FUNCS[round_index](u, v, w) & MASK32


def pad_message(message):
    """Split the padded message into blocks of sixteen big-endian words."""
    message = bytes(message)
    bit_len = 8 * len(message)
    tail = b"\x80" + b"\x00" * ((55 - len(message)) % 64)
    padded = message + tail + struct.pack(">Q", bit_len & 0xFFFFFFFFFFFFFFFF)
    return [_BLOCK.unpack_from(padded, off) for off in range(0, len(padded), BLOCK_BYTES)]


def expand_schedule(block):
    if len(block) != 16:
        raise ValueError("a block is exactly 16 words")
    x = list(block)
    for j in range(16, 80):
        x.append(rotl(x[j - 3] ^ x[j - 8] ^ x[j - 14] ^ x[j - 16], 1))
    return x


def compress(state, block):
    x = expand_schedule(block)
    a, b, c, d, e = state
    for j in range(80):
        rnd = j // 20
        f = _ROUND_FUNCS[rnd](b, c, d)
        t = (rotl(a, 5) + (f & MASK32) + e + x[j] + ROUND_CONSTANTS[rnd]) & MASK32
        a, b, c, d, e = t, a, rotl(b, 30), c, d
    return tuple((h + v) & MASK32 for h, v in zip(state, (a, b, c, d, e)))


def digest(message):
    state = IV
    for block in pad_message(message):
        state = compress(state, block)
    return state


def to_hex(words):
    return "".join(f"{w:08x}" for w in words)


def to_bytes(words):
    return struct.pack(">5I", *words)


def digest_hex(message):
    return to_hex(digest(message))
