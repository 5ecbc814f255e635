import random
import struct

import pytest

from signet import sha1

from oracles import bit_compress_words, bit_expand_words

# Published FIPS 180-1 vectors; the ACIJ digest was computed with hashlib
# before the implementation existed and frozen here.
VECTORS = [
    (b"", "da39a3ee5e6b4b0d3255bfef95601890afd80709"),
    (b"abc", "a9993e364706816aba3e25717850c26c9cd0d89d"),
    (b"abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq",
     "84983e441c3bd26ebaae4aa1f95129e5e54670f1"),
    (b"The quick brown fox jumps over the lazy dog",
     "2fd4e1c67a2d28fced849ee1bb76e7391b93eb12"),
    (b"Advanced Computing: An International Journal (ACIJ)",
     "bb80f2603d8253e4f0dc34fd7aa4da5145237985"),
]


@pytest.mark.parametrize("message,expected", VECTORS)
def test_known_digests(message, expected):
    assert sha1.digest_hex(message) == expected
    assert sha1.to_hex(sha1.digest(message)) == expected


def test_million_a():
    assert sha1.digest_hex(b"a" * 1_000_000) == "34aa973cd4c4daa4f61eeb2bdbad27316534016f"


def test_constants_match_bit_arrays():
    from oracles import H_BITS, Y_BITS, bits_to_word
    assert tuple(bits_to_word(b) for b in H_BITS) == sha1.IV
    assert tuple(bits_to_word(b) for b in Y_BITS) == sha1.ROUND_CONSTANTS


# --- padding --------------------------------------------------------------------

def _flatten(blocks):
    return b"".join(struct.pack(">16I", *b) for b in blocks)


def test_pad_empty():
    blocks = sha1.pad_message(b"")
    assert len(blocks) == 1
    assert _flatten(blocks) == b"\x80" + b"\x00" * 55 + b"\x00" * 8


def test_pad_abc():
    blocks = sha1.pad_message(b"abc")
    assert len(blocks) == 1
    raw = _flatten(blocks)
    assert raw[:4] == b"abc\x80"
    assert struct.unpack(">Q", raw[-8:])[0] == 24


def test_pad_56_bytes_spills():
    assert len(sha1.pad_message(b"x" * 55)) == 1
    assert len(sha1.pad_message(b"x" * 56)) == 2
    assert len(sha1.pad_message(b"x" * 64)) == 2


def test_padding_invariant():
    for n in range(0, 1001):
        msg = bytes(i & 0xFF for i in range(n))
        raw = _flatten(sha1.pad_message(msg))
        assert len(raw) % 64 == 0
        assert raw[:n] == msg and raw[n] == 0x80
        assert set(raw[n + 1:-8]) <= {0}
        assert len(raw[n + 1:-8]) < 64
        assert struct.unpack(">Q", raw[-8:])[0] == 8 * n


# --- round logic and schedule ---------------------------------------------------

def test_round_logic():
    v, w, x, y = 0x12345678, 0x9ABCDEF0, 0x0F0F0F0F, 0xDEADBEEF
    assert sha1.round_logic(0, 0xFFFFFFFF, v, w) == v
    assert sha1.round_logic(0, 0, v, w) == w
    assert sha1.round_logic(2, x, x, y) == x
    assert sha1.round_logic(1, v, w, 0) == v ^ w
    assert sha1.round_logic(3, v, w, 0) == v ^ w
    with pytest.raises(ValueError):
        sha1.round_logic(4, 0, 0, 0)


def test_schedule_hand_traces():
    assert sha1.expand_schedule([0] * 16) == [0] * 80
    block = [1] + [0] * 15
    x = sha1.expand_schedule(block)
    assert x[16] == 2
    with pytest.raises(ValueError):
        sha1.expand_schedule([0] * 15)


def test_schedule_matches_bit_oracle():
    rng = random.Random(1)
    for _ in range(30):
        block = [rng.getrandbits(32) for _ in range(16)]
        assert sha1.expand_schedule(block) == bit_expand_words(block)


# --- compression ----------------------------------------------------------------

def test_compress_abc_block():
    block = sha1.pad_message(b"abc")[0]
    out = sha1.compress(sha1.IV, block)
    assert sha1.to_hex(out) == "a9993e364706816aba3e25717850c26c9cd0d89d"
    assert sha1.compress(sha1.IV, block) == out


def test_compress_matches_bit_oracle():
    rng = random.Random(2)
    for _ in range(20):
        state = tuple(rng.getrandbits(32) for _ in range(5))
        block = [rng.getrandbits(32) for _ in range(16)]
        assert sha1.compress(state, block) == bit_compress_words(state, block)


def test_streaming_equals_batch():
    rng = random.Random(3)
    for k in (1, 2, 5):
        msg = bytes(rng.getrandbits(8) for _ in range(64 * k))
        state = sha1.IV
        for i in range(k):
            block = struct.unpack(">16I", msg[64 * i:64 * (i + 1)])
            state = sha1.compress(state, block)
        # the final padding block for a 64k-byte message carries only the length
        tail = sha1.pad_message(msg)[k]
        state = sha1.compress(state, tail)
        assert state == sha1.digest(msg)


def test_digest_length_and_determinism():
    rng = random.Random(4)
    for n in list(range(0, 130)) + [1000, 4097, 10_000]:
        msg = bytes(rng.getrandbits(8) for _ in range(n))
        h = sha1.digest_hex(msg)
        assert len(h) == 40 and h == h.lower()
        assert sha1.digest_hex(msg) == h


def test_against_hashlib_oracle():
    import hashlib
    rng = random.Random(5)
    for n in range(0, 300, 7):
        msg = bytes(rng.getrandbits(8) for _ in range(n))
        assert sha1.digest_hex(msg) == hashlib.sha1(msg).hexdigest()
