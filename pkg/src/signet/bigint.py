"""Arbitrary-precision natural numbers built on 32-bit limbs.

A :class:`Natural` stores its value as a tuple of 32-bit words, least
significant first.  Zero is the empty tuple; every other value has a nonzero
top limb.  All intermediate products and carries fit in 64 bits.

The module-level functions (:func:`add`, :func:`divrem`, :func:`mod_exp`, ...)
are the primary API; the operator overloads on :class:`Natural` delegate to
them.
"""

import enum

LIMB_BITS = 32
BASE = 1 << LIMB_BITS
MASK = BASE - 1

_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")
_DEC_CHUNK = 9
_DEC_CHUNK_BASE = 10 ** _DEC_CHUNK


class Underflow(ArithmeticError):
    """Subtraction would produce a negative result."""


class DivisionByZero(ZeroDivisionError):
    pass


class NotInvertible(ArithmeticError):
    """The operand shares a factor with the modulus."""


class InvalidModulus(ValueError):
    pass


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _trim(limbs):
    """Drop high zero limbs in place and return the list."""
    while limbs and not limbs[-1]:
        limbs.pop()
    return limbs


class Natural:
    """Immutable non-negative integer with canonical 32-bit limbs."""

    __slots__ = ("limbs",)

    def __init__(self, limbs=()):
        limbs = list(limbs)
        for w in limbs:
            if not isinstance(w, int) or not 0 <= w <= MASK:
                raise ValueError(f"limb out of range: {w!r}")
        object.__setattr__(self, "limbs", tuple(_trim(limbs)))

    @classmethod
    def _wrap(cls, limbs):
        # Caller guarantees each entry is a valid limb.
        obj = object.__new__(cls)
        object.__setattr__(obj, "limbs", tuple(_trim(limbs)))
        return obj

    @classmethod
    def from_int(cls, value):
        if value < 0:
            raise ValueError("Natural cannot hold a negative value")
        limbs = []
        while value:
            limbs.append(value & MASK)
            value >>= LIMB_BITS
        return cls._wrap(limbs)

    def __setattr__(self, name, value):
        raise AttributeError("Natural is immutable")

    def __int__(self):
        value = 0
        for w in reversed(self.limbs):
            value = (value << LIMB_BITS) | w
        return value

    __index__ = __int__

    def __repr__(self):
        return f"Natural(0x{to_hex(self)})"

    def __str__(self):
        return to_decimal(self)

    def __bool__(self):
        return bool(self.limbs)

    def __hash__(self):
        return hash(self.limbs)

    def __eq__(self, other):
        if isinstance(other, Natural):
            return self.limbs == other.limbs
        return NotImplemented

    def __lt__(self, other):
        return compare(self, _coerce(other)) is Ordering.LESS

    def __le__(self, other):
        return compare(self, _coerce(other)) is not Ordering.GREATER

    def __gt__(self, other):
        return compare(self, _coerce(other)) is Ordering.GREATER

    def __ge__(self, other):
        return compare(self, _coerce(other)) is not Ordering.LESS

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __floordiv__(self, other):
        return divrem(self, _coerce(other))[0]

    def __mod__(self, other):
        return divrem(self, _coerce(other))[1]

    def __divmod__(self, other):
        return divrem(self, _coerce(other))

    def __pow__(self, exp, mod=None):
        if mod is None:
            raise TypeError("Natural only supports three-argument pow()")
        return mod_exp(self, _coerce(exp), _coerce(mod))

    def __lshift__(self, bits):
        return shift_left(self, bits)

    def __rshift__(self, bits):
        return shift_right(self, bits)


def _coerce(x):
    if isinstance(x, Natural):
        return x
    if isinstance(x, int):
        return Natural.from_int(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Natural")


ZERO = Natural()
ONE = Natural._wrap([1])


# ---------------------------------------------------------------------------
# string codecs


def from_decimal(text):
    if not text or not text.isascii() or not text.isdigit():
        raise ValueError(f"invalid decimal string: {text!r}")
    limbs = []
    head = len(text) % _DEC_CHUNK or _DEC_CHUNK
    start = 0
    for end in range(head, len(text) + 1, _DEC_CHUNK):
        chunk = 0
        for ch in text[start:end]:
            chunk = chunk * 10 + (ord(ch) - 48)
        scale = 10 ** (end - start)
        # limbs = limbs * scale + chunk, one word at a time
        carry = chunk
        for i, w in enumerate(limbs):
            t = w * scale + carry
            limbs[i] = t & MASK
            carry = t >> LIMB_BITS
        if carry:
            limbs.append(carry)
        start = end
    return Natural._wrap(limbs)


def to_decimal(a):
    if not a.limbs:
        return "0"
    limbs = list(a.limbs)
    chunks = []
    while limbs:
        rem = _divmod_small_inplace(limbs, _DEC_CHUNK_BASE)
        chunks.append(rem)
    parts = [str(chunks[-1])]
    parts.extend(f"{c:09d}" for c in reversed(chunks[:-1]))
    return "".join(parts)


def from_hex(text):
    if not text or not set(text) <= _HEX_DIGITS:
        raise ValueError(f"invalid hex string: {text!r}")
    limbs = []
    end = len(text)
    while end > 0:
        start = max(0, end - 8)
        limbs.append(int(text[start:end], 16))
        end = start
    return Natural._wrap(limbs)


def to_hex(a):
    if not a.limbs:
        return "0"
    top = a.limbs[-1]
    return f"{top:x}" + "".join(f"{w:08x}" for w in reversed(a.limbs[:-1]))


def from_bytes(data):
    """Interpret ``data`` as a big-endian unsigned integer."""
    limbs = []
    end = len(data)
    while end > 0:
        start = max(0, end - 4)
        w = 0
        for byte in data[start:end]:
            w = (w << 8) | byte
        limbs.append(w)
        end = start
    return Natural._wrap(limbs)


# ---------------------------------------------------------------------------
# comparison and bit access


def compare(a, b):
    x, y = a.limbs, b.limbs
    if len(x) != len(y):
        return Ordering.LESS if len(x) < len(y) else Ordering.GREATER
    for i in range(len(x) - 1, -1, -1):
        if x[i] != y[i]:
            return Ordering.LESS if x[i] < y[i] else Ordering.GREATER
    return Ordering.EQUAL


def bit_length(a):
    if not a.limbs:
        return 0
    return (len(a.limbs) - 1) * LIMB_BITS + a.limbs[-1].bit_length()


def test_bit(a, i):
    q, r = divmod(i, LIMB_BITS)
    if q >= len(a.limbs):
        return 0
    return (a.limbs[q] >> r) & 1


test_bit.__test__ = False  # keep pytest from collecting the import


def is_odd(a):
    return bool(a.limbs) and a.limbs[0] & 1 == 1


def shift_left(a, bits):
    if bits < 0:
        raise ValueError("negative shift")
    if not a.limbs:
        return ZERO
    words, bits = divmod(bits, LIMB_BITS)
    out = [0] * words
    if bits == 0:
        out.extend(a.limbs)
    else:
        carry = 0
        for w in a.limbs:
            t = (w << bits) | carry
            out.append(t & MASK)
            carry = t >> LIMB_BITS
        out.append(carry)
    return Natural._wrap(out)


def shift_right(a, bits):
    if bits < 0:
        raise ValueError("negative shift")
    words, bits = divmod(bits, LIMB_BITS)
    src = a.limbs[words:]
    if bits == 0:
        return Natural._wrap(list(src))
    out = []
    for i, w in enumerate(src):
        hi = src[i + 1] if i + 1 < len(src) else 0
        out.append(((w >> bits) | (hi << (LIMB_BITS - bits))) & MASK)
    return Natural._wrap(out)


def random_below(rng, n):
    """Uniform draw from ``[0, n)`` by rejection sampling.

    ``rng`` only needs a ``getrandbits(k)`` method, e.g. ``random.Random``.
    """
    if not n.limbs:
        raise ValueError("random_below needs n >= 1")
    nbits = bit_length(n)
    while True:
        r = random_bits(rng, nbits)
        if compare(r, n) is Ordering.LESS:
            return r


def random_bits(rng, nbits):
    """Draw a Natural of at most ``nbits`` bits."""
    full, extra = divmod(nbits, LIMB_BITS)
    limbs = [rng.getrandbits(LIMB_BITS) for _ in range(full)]
    if extra:
        limbs.append(rng.getrandbits(extra))
    return Natural._wrap(limbs)


# ---------------------------------------------------------------------------
# arithmetic


def add(a, b):
    x, y = a.limbs, b.limbs
    if len(x) < len(y):
        x, y = y, x
    out = []
    carry = 0
    for i in range(len(y)):
        t = x[i] + y[i] + carry
        out.append(t & MASK)
        carry = t >> LIMB_BITS
    for i in range(len(y), len(x)):
        t = x[i] + carry
        out.append(t & MASK)
        carry = t >> LIMB_BITS
    if carry:
        out.append(carry)
    return Natural._wrap(out)


def sub(a, b):
    x, y = a.limbs, b.limbs
    if len(y) > len(x):
        raise Underflow("subtrahend exceeds minuend")
    out = []
    borrow = 0
    for i in range(len(y)):
        t = x[i] - y[i] - borrow
        borrow = 1 if t < 0 else 0
        out.append(t & MASK)
    for i in range(len(y), len(x)):
        t = x[i] - borrow
        borrow = 1 if t < 0 else 0
        out.append(t & MASK)
    if borrow:
        raise Underflow("subtrahend exceeds minuend")
    return Natural._wrap(out)


def _mul_limbs(x, y):
    """Schoolbook product of two limb sequences, returned untrimmed."""
    out = [0] * (len(x) + len(y))
    for i, xi in enumerate(x):
        if not xi:
            continue
        carry = 0
        k = i
        for yj in y:
            t = xi * yj + out[k] + carry
            out[k] = t & MASK
            carry = t >> LIMB_BITS
            k += 1
        out[k] = carry
    return out


def mul(a, b):
    x, y = a.limbs, b.limbs
    if not x or not y:
        return ZERO
    if len(x) == 1 and len(y) == 1:
        t = x[0] * y[0]
        return Natural._wrap([t & MASK, t >> LIMB_BITS])
    return Natural._wrap(_mul_limbs(x, y))


def _divmod_small_inplace(limbs, d):
    """Divide the limb list by a single word ``d``; trims and returns remainder."""
    rem = 0
    for i in range(len(limbs) - 1, -1, -1):
        cur = (rem << LIMB_BITS) | limbs[i]
        limbs[i], rem = divmod(cur, d)
    _trim(limbs)
    return rem


def _divrem_knuth(u, v):
    """Long division of limb lists, ``len(v) >= 2`` and ``v[-1] != 0``.

    Quotient digits are estimated from the top two dividend words against
    the normalized top divisor word and corrected at most twice.
    """
    n = len(v)
    m = len(u) - n
    shift = LIMB_BITS - v[-1].bit_length()
    if shift:
        vn = []
        carry = 0
        for w in v:
            t = (w << shift) | carry
            vn.append(t & MASK)
            carry = t >> LIMB_BITS
        un = []
        carry = 0
        for w in u:
            t = (w << shift) | carry
            un.append(t & MASK)
            carry = t >> LIMB_BITS
        un.append(carry)
    else:
        vn = list(v)
        un = list(u) + [0]

    v_top, v_next = vn[-1], vn[-2]
    q = [0] * (m + 1)
    for j in range(m, -1, -1):
        num = (un[j + n] << LIMB_BITS) | un[j + n - 1]
        qhat, rhat = divmod(num, v_top)
        while qhat >= BASE or qhat * v_next > ((rhat << LIMB_BITS) | un[j + n - 2]):
            qhat -= 1
            rhat += v_top
            if rhat >= BASE:
                break

        # un[j .. j+n] -= qhat * vn
        borrow = 0
        carry = 0
        for i in range(n):
            p = qhat * vn[i] + carry
            carry = p >> LIMB_BITS
            t = un[i + j] - (p & MASK) - borrow
            un[i + j] = t & MASK
            borrow = 1 if t < 0 else 0
        t = un[j + n] - carry - borrow
        un[j + n] = t & MASK

        if t < 0:
            # qhat was one too large: add the divisor back
            qhat -= 1
            carry = 0
            for i in range(n):
                t = un[i + j] + vn[i] + carry
                un[i + j] = t & MASK
                carry = t >> LIMB_BITS
            un[j + n] = (un[j + n] + carry) & MASK
        q[j] = qhat

    # denormalize remainder
    r = un[:n]
    if shift:
        for i in range(n - 1):
            r[i] = ((r[i] >> shift) | (r[i + 1] << (LIMB_BITS - shift))) & MASK
        r[n - 1] >>= shift
    return q, r


def divrem(a, b):
    """Return ``(q, r)`` with ``a == q*b + r`` and ``0 <= r < b``."""
    x, y = a.limbs, b.limbs
    if not y:
        raise DivisionByZero("division by zero")
    if len(x) < len(y) or compare(a, b) is Ordering.LESS:
        return ZERO, a
    if len(y) == 1:
        if len(x) == 1:
            q, r = divmod(x[0], y[0])
            return Natural._wrap([q]), Natural._wrap([r])
        limbs = list(x)
        r = _divmod_small_inplace(limbs, y[0])
        return Natural._wrap(limbs), Natural._wrap([r])
    q, r = _divrem_knuth(x, y)
    return Natural._wrap(q), Natural._wrap(r)


def gcd(a, b):
    if not a.limbs and not b.limbs:
        raise ValueError("gcd(0, 0) is undefined")
    while b.limbs:
        a, b = b, divrem(a, b)[1]
    return a


def mod_inverse(e, m):
    """Return ``d`` in ``[1, m)`` with ``e*d ≡ 1 (mod m)``.

    Extended Euclid tracking only the coefficient of ``e``.  Coefficients are
    kept as (magnitude, negative) pairs because Natural has no sign.
    """
    if compare(m, ONE) is not Ordering.GREATER:
        raise InvalidModulus("modulus must exceed 1")
    old_r, r = divrem(e, m)[1], m
    old_s, old_neg = ONE, False
    s, s_neg = ZERO, False
    while r.limbs:
        q, rem = divrem(old_r, r)
        old_r, r = r, rem
        # new_s = old_s - q*s
        qs = mul(q, s)
        new_s, new_neg = _signed_sub(old_s, old_neg, qs, s_neg)
        old_s, old_neg, s, s_neg = s, s_neg, new_s, new_neg
    if old_r != ONE:
        raise NotInvertible(f"gcd({to_hex(e)}, {to_hex(m)}) != 1")
    d = divrem(old_s, m)[1]
    if old_neg and d.limbs:
        d = sub(m, d)
    return d


def _signed_sub(a, a_neg, b, b_neg):
    """(a, a_neg) - (b, b_neg) on sign-magnitude pairs."""
    if a_neg != b_neg:
        return add(a, b), a_neg
    if compare(a, b) is Ordering.LESS:
        return sub(b, a), not a_neg
    return sub(a, b), a_neg if (a.limbs != b.limbs) else False


def mod_exp(base, exp, m):
    """Left-to-right square-and-multiply; ``0**0 mod m`` is 1."""
    if compare(m, ONE) is not Ordering.GREATER:
        raise InvalidModulus("modulus must exceed 1")
    if len(m.limbs) == 1:
        return Natural._wrap([_mod_exp_word(base, exp, m.limbs[0])])
    return _mod_exp_multi(base, exp, m)


def _mod_exp_word(base, exp, m):
    # Single-word modulus: every product is below 2^64.
    b = divrem(base, Natural._wrap([m]))[1].limbs
    b = b[0] if b else 0
    result = 1
    for bit in _exponent_bits(exp):
        result = result * result % m
        if bit:
            result = result * b % m
    return result


def _mod_exp_multi(base, exp, m):
    mv = m.limbs
    b = divrem(base, m)[1].limbs
    result = [1]
    for bit in _exponent_bits(exp):
        result = _mulmod(result, result, mv)
        if bit:
            result = _mulmod(result, b, mv)
    return Natural._wrap(result)


def _exponent_bits(exp):
    """Bits of ``exp`` from the most significant set bit down."""
    limbs = exp.limbs
    for k in range(len(limbs) - 1, -1, -1):
        w = limbs[k]
        top = w.bit_length() - 1 if k == len(limbs) - 1 else LIMB_BITS - 1
        for i in range(top, -1, -1):
            yield (w >> i) & 1


def _mulmod(x, y, mv):
    if not x or not y:
        return []
    prod = _trim(_mul_limbs(x, y))
    if len(prod) < len(mv):
        return prod
    return _trim(_divrem_knuth(prod, mv)[1])
