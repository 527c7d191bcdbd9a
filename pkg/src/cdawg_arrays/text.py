"""Terminated texts and generators for the test/benchmark families.

A text is a byte string whose last symbol is the sentinel ``0x00``; the
sentinel occurs nowhere else and sorts below every other byte.  Positions
exposed by the package are 1-based, so ``T[p]`` is ``text.data[p - 1]``.
"""

from __future__ import annotations

import os
import random
import string
from dataclasses import dataclass

from .errors import TextError

SENTINEL = 0
DEFAULT_MAX_N = 1 << 26
MAX_N_ENV = "CDAWG_MAX_N"

# Generated texts use readable symbols first.
_READABLE = (string.ascii_lowercase + string.ascii_uppercase + string.digits).encode()
ALPHABET = _READABLE + bytes(b for b in range(1, 256) if b not in _READABLE)


def max_n(override: int | None = None) -> int:
    """Size cap on n: explicit override, then ``$CDAWG_MAX_N``, then default."""
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise TextError(f"{MAX_N_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_MAX_N


@dataclass(frozen=True)
class Text:
    data: bytes

    def __post_init__(self):
        d = self.data
        if not d or d[-1] != SENTINEL:
            raise TextError("text must end with the sentinel")
        if d.find(SENTINEL) != len(d) - 1:
            raise TextError("sentinel occurs before the end of the text")

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def body(self) -> bytes:
        return self.data[:-1]

    @property
    def sigma(self) -> int:
        return len(set(self.data))

    def at(self, p: int) -> int:
        """Symbol ``T[p]`` for a 1-based position."""
        if not 1 <= p <= len(self.data):
            raise IndexError(p)
        return self.data[p - 1]

    def factor(self, p: int, length: int) -> bytes:
        """``T[p..p+length-1]``."""
        return self.data[p - 1 : p - 1 + length]

    def render(self) -> str:
        return render(self.data)

    def __len__(self) -> int:
        return len(self.data)


def render(symbols) -> str:
    """Display form of a symbol sequence with the sentinel shown as ``$``."""
    return "".join("$" if b == SENTINEL else chr(b) for b in symbols)


def normalize(raw: bytes | str, cap: int | None = None) -> Text:
    if isinstance(raw, str):
        raw = raw.encode("latin-1")
    raw = bytes(raw)
    if SENTINEL in raw:
        raise TextError(f"input contains the sentinel byte at offset {raw.index(SENTINEL)}")
    limit = max_n(cap)
    if len(raw) + 1 > limit:
        raise TextError(f"text length {len(raw) + 1} exceeds cap {limit}")
    return Text(raw + bytes([SENTINEL]))


def _check_cap(length: int, cap: int | None):
    limit = max_n(cap)
    if length + 1 > limit:
        raise TextError(f"generated length {length + 1} exceeds cap {limit}")


_TM_SWAP = bytes.maketrans(b"01", b"10")


def thue_morse(k: int, cap: int | None = None) -> Text:
    """``phi^k(0)`` for ``phi(0) = 01, phi(1) = 10``, over the symbols '0' and '1'."""
    if k < 0:
        raise TextError("order must be non-negative")
    _check_cap(1 << k, cap)
    # phi^k(0) = phi^(k-1)(0) . complement(phi^(k-1)(0))
    body = b"0"
    for _ in range(k):
        body += body.translate(_TM_SWAP)
    return Text(body + b"\x00")


def fibonacci(k: int, cap: int | None = None) -> Text:
    """Fibonacci word with F1 = a, F2 = ab, F_k = F_{k-1} F_{k-2}."""
    if k < 1:
        raise TextError("order must be at least 1")
    _check_cap(fibonacci_length(k), cap)
    prev, cur = b"a", b"ab"
    if k == 1:
        return Text(prev + b"\x00")
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return Text(cur + b"\x00")


def fibonacci_length(k: int) -> int:
    """Body length of ``fibonacci(k)``: 1, 2, 3, 5, 8, ..."""
    a, b = 1, 2
    for _ in range(k - 1):
        a, b = b, a + b
    return a


def random_text(length: int, sigma: int, seed: int, cap: int | None = None) -> Text:
    """Uniform random body over the first ``sigma`` symbols of ``ALPHABET``."""
    if length < 0:
        raise TextError("length must be non-negative")
    if not 2 <= sigma <= 255:
        raise TextError("sigma must lie in 2..255")
    _check_cap(length, cap)
    rng = random.Random(seed)
    symbols = ALPHABET[:sigma]
    body = bytes(rng.choices(symbols, k=length))
    return Text(body + b"\x00")


def read_text(path, cap: int | None = None) -> Text:
    with open(path, "rb") as fh:
        return normalize(fh.read(), cap)


def write_body(text: Text, path) -> None:
    with open(path, "wb") as fh:
        fh.write(text.body)
