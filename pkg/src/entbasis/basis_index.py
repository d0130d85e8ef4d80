"""Naming scheme for the 2^N basis vectors.

A basis vector is named by a sign (+1, or -1 when a Z follows the initial
Hadamard) and a control-polarity pattern of N-1 bits.  Pattern bit ``j``
selects the polarity of the CNOT that targets qubit ``j + 1``: 1 is a
standard control, 0 an inverted control.

Ordinal encoding: the pattern occupies the low N-1 bits of the ordinal,
least-significant bit first, and the sign occupies bit N-1 (set for -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import EmptyPattern, InvalidPattern, InvalidSign, OutOfRange, TooFewQubits

BitPattern = tuple[int, ...]
PatternLike = Union[str, Iterable[int]]

SEED_MAX = 2**64


def as_pattern(bits: PatternLike) -> BitPattern:
    """Coerce a ``"101"`` string or an iterable of 0/1 ints to a pattern tuple."""
    if isinstance(bits, str):
        if any(c not in "01" for c in bits):
            raise InvalidPattern(f"pattern string must be over {{0,1}}, got {bits!r}")
        return tuple(int(c) for c in bits)
    raw = list(bits)
    if any(b not in (0, 1) for b in raw):
        raise InvalidPattern(f"pattern bits must be 0 or 1, got {raw!r}")
    return tuple(int(b) for b in raw)


def pattern_str(pattern: BitPattern) -> str:
    return "".join(str(b) for b in pattern)


def sign_str(sign: int) -> str:
    return "+" if sign == 1 else "-"


def parse_sign(text: str) -> int:
    if text == "+":
        return 1
    if text == "-":
        return -1
    raise InvalidSign(f"sign must be '+' or '-', got {text!r}")


@dataclass(frozen=True)
class BasisIndex:
    sign: int
    pattern: BitPattern

    def __post_init__(self):
        if len(self.pattern) == 0:
            raise EmptyPattern("pattern must have at least one bit (N >= 2)")
        if self.sign not in (1, -1) or isinstance(self.sign, bool):
            raise InvalidSign(f"sign must be +1 or -1, got {self.sign!r}")
        if any(b not in (0, 1) for b in self.pattern):
            raise InvalidPattern(f"pattern bits must be 0 or 1, got {self.pattern!r}")

    @property
    def n_qubits(self) -> int:
        return len(self.pattern) + 1

    def __str__(self):
        return f"{sign_str(self.sign)}{pattern_str(self.pattern)}"


def make_index(sign: int, pattern: PatternLike) -> BasisIndex:
    """Validate and build a :class:`BasisIndex`.

    Raises :class:`EmptyPattern` for a zero-length pattern and
    :class:`InvalidSign` when ``sign`` is not +1 or -1.
    """
    return BasisIndex(sign, as_pattern(pattern))


def _check_n(n: int) -> None:
    if n < 2:
        raise TooFewQubits(f"need at least 2 qubits, got n={n}")


def from_ordinal(k: int, n: int) -> BasisIndex:
    _check_n(n)
    if not 0 <= k < 2**n:
        raise OutOfRange(f"ordinal {k} outside [0, 2^{n})")
    pattern = tuple((k >> j) & 1 for j in range(n - 1))
    sign = -1 if (k >> (n - 1)) & 1 else 1
    return BasisIndex(sign, pattern)


def to_ordinal(index: BasisIndex) -> int:
    k = sum(b << j for j, b in enumerate(index.pattern))
    if index.sign == -1:
        k |= 1 << (index.n_qubits - 1)
    return k


def random_bits(count: int, seed: int) -> list[int]:
    """Return ``count`` fair bits from PCG64 seeded with ``seed``.

    Bits are read from successive 64-bit outputs of
    ``numpy.random.PCG64(seed).random_raw()``, least-significant bit first.
    The raw PCG64 stream is fixed by the algorithm, so the result is the same
    on every platform.
    """
    if not 0 <= seed < SEED_MAX:
        raise OutOfRange(f"seed must lie in [0, 2^64), got {seed}")
    words = np.random.PCG64(seed).random_raw(-(-count // 64))
    words = [int(w) for w in np.atleast_1d(words)]
    return [(words[i // 64] >> (i % 64)) & 1 for i in range(count)]


def random_index(n: int, seed: int) -> BasisIndex:
    """Draw a uniformly random basis index, deterministically from ``seed``.

    The first n-1 bits form the pattern and bit n-1 the sign, so for
    n <= 64 this equals ``from_ordinal(first_word mod 2**n, n)``.
    """
    _check_n(n)
    bits = random_bits(n, seed)
    return BasisIndex(-1 if bits[n - 1] else 1, tuple(bits[: n - 1]))


def complement(pattern: BitPattern) -> BitPattern:
    return tuple(1 - b for b in pattern)


def counts_ML(pattern: BitPattern) -> tuple[int, int]:
    """Return ``(M, L)``: the number of standard (1) and inverted (0) controls."""
    m = sum(pattern)
    return m, len(pattern) - m
