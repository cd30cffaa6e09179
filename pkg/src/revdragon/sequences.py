"""Finite revolving sequences.

Words are tuples of digits (``None`` for zero, exponent otherwise), indexed
from 1 in the mathematical sense: ``digits[0]`` is position 1.  An infinite
sequence is represented by a finite truncation with an implicit zero tail.

Three revolving conditions are supported:

* GRC: each nonzero digit advances the previous nonzero digit by one step.
* SRC: the step is +1 when the previous nonzero digit sits at an odd
  position and -1 when it sits at an even one.
* TRC: each nonzero digit repeats or advances the previous nonzero digit.

Numpy word arrays use ``-1`` for the zero digit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

import numpy as np

from .alphabet import Angle, Digit, format_word
from .errors import BudgetExceeded

ZERO_CODE = -1


class Condition(enum.Enum):
    GRC = "grc"
    SRC = "src"
    TRC = "trc"


class FirstDigitPolicy(enum.Enum):
    FREE = "free"
    MUST_BE_ONE = "one"


DEFAULT_DEPTH_CAP = {Condition.GRC: 24, Condition.SRC: 24, Condition.TRC: 16}


@dataclass(frozen=True)
class RevolvingSequence:
    angle: Angle
    digits: tuple[Digit, ...] = ()

    def __post_init__(self):
        p = self.angle.order
        object.__setattr__(
            self, "digits", tuple(None if d is None else int(d) % p for d in self.digits)
        )

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_word(self.digits)


def first_nonzero_index(s: RevolvingSequence) -> Optional[int]:
    for i, d in enumerate(s.digits, start=1):
        if d is not None:
            return i
    return None


def last_nonzero_up_to(s: RevolvingSequence, k: int) -> Optional[int]:
    """Largest 1-based position ``j <= k`` holding a nonzero digit."""
    if not 1 <= k <= len(s.digits):
        raise IndexError(f"k={k} outside 1..{len(s.digits)}")
    for j in range(k, 0, -1):
        if s.digits[j - 1] is not None:
            return j
    return None


def _successors(c: Condition, last: int, last_pos: int, order: int) -> tuple[int, ...]:
    """Exponents allowed after the nonzero digit ``last`` at 1-based ``last_pos``."""
    if c is Condition.GRC:
        return ((last + 1) % order,)
    if c is Condition.SRC:
        step = 1 if last_pos % 2 == 1 else -1
        return ((last + step) % order,)
    nxt = (last + 1) % order
    return (last,) if nxt == last else (last, nxt)


def _openers(policy: FirstDigitPolicy, order: int) -> tuple[int, ...]:
    return tuple(range(order)) if policy is FirstDigitPolicy.FREE else (0,)


def validate(
    s: RevolvingSequence,
    c: Condition,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
) -> bool:
    order = s.angle.order
    last = None
    last_pos = 0
    for pos, d in enumerate(s.digits, start=1):
        if d is None:
            continue
        allowed = _openers(policy, order) if last is None else _successors(c, last, last_pos, order)
        if d not in allowed:
            return False
        last, last_pos = d, pos
    return True


def compute_bss(s: RevolvingSequence) -> tuple[int, ...]:
    """Binary static sequence of a finite word.

    Bit ``n`` is 1 iff digit ``n`` is nonzero and equals the next nonzero
    digit.  With nothing nonzero after position ``n`` the bit is 0.
    """
    bits = [0] * len(s.digits)
    upcoming = None
    for n in range(len(s.digits) - 1, -1, -1):
        d = s.digits[n]
        if d is not None:
            bits[n] = 1 if d == upcoming else 0
            upcoming = d
    return tuple(bits)


def _check_budget(c: Condition, length: int, max_length: Optional[int]):
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    cap = DEFAULT_DEPTH_CAP[c] if max_length is None else max_length
    if length > cap:
        raise BudgetExceeded(f"length {length} exceeds the {c.name} depth cap {cap}")


def enumerate_words(
    c: Condition,
    a: Angle,
    length: int,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
    max_length: Optional[int] = None,
) -> Iterator[RevolvingSequence]:
    """Yield every valid word of ``length`` once, in lexicographic order.

    Digits compare as Zero < Unit(0) < Unit(1) < ..., first position most
    significant.
    """
    _check_budget(c, length, max_length)
    order = a.order
    word: list[Digit] = [None] * length

    def rec(pos: int, last: Optional[int], last_pos: int):
        if pos == length:
            yield RevolvingSequence(a, tuple(word))
            return
        word[pos] = None
        yield from rec(pos + 1, last, last_pos)
        options = _openers(policy, order) if last is None else _successors(c, last, last_pos, order)
        for d in sorted(options):
            word[pos] = d
            yield from rec(pos + 1, d, pos + 1)
        word[pos] = None

    return rec(0, None, 0)


def enumerate_array(
    c: Condition,
    a: Angle,
    length: int,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
    max_length: Optional[int] = None,
) -> np.ndarray:
    """Same words and order as :func:`enumerate_words`, as an int array.

    Shape is ``(count, length)``; zero digits are stored as ``-1``.
    Built breadth-first: children of a word stay contiguous and sorted by
    digit rank, which preserves lexicographic order level by level.
    """
    _check_budget(c, length, max_length)
    order = a.order
    words = np.zeros((1, 0), dtype=np.int16)
    last = np.full(1, ZERO_CODE, dtype=np.int64)
    last_pos = np.zeros(1, dtype=np.int64)
    for pos in range(1, length + 1):
        n = len(words)
        # column 0 is the zero digit, column k+1 is Unit(k)
        allowed = np.zeros((n, order + 1), dtype=bool)
        allowed[:, 0] = True
        fresh = last == ZERO_CODE
        if policy is FirstDigitPolicy.FREE:
            allowed[fresh, 1:] = True
        else:
            allowed[fresh, 1] = True
        rows = np.nonzero(~fresh)[0]
        prev = last[rows]
        if c is Condition.GRC:
            allowed[rows, (prev + 1) % order + 1] = True
        elif c is Condition.SRC:
            step = np.where(last_pos[rows] % 2 == 1, 1, -1)
            allowed[rows, (prev + step) % order + 1] = True
        else:
            allowed[rows, prev + 1] = True
            allowed[rows, (prev + 1) % order + 1] = True
        parent, rank = np.nonzero(allowed)
        digit = rank - 1
        words = np.concatenate([words[parent], digit[:, None].astype(np.int16)], axis=1)
        placed = digit != ZERO_CODE
        last = np.where(placed, digit, last[parent])
        last_pos = np.where(placed, pos, last_pos[parent])
    return words


def all_words_array(order: int, length: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """Rows ``start:stop`` of every word over {0} and ``order`` units.

    Row r spells r in base ``order + 1`` (digit code = base-digit - 1), so
    rows come in lexicographic order.
    """
    base = order + 1
    total = base**length
    stop = total if stop is None else min(stop, total)
    r = np.arange(start, stop, dtype=np.int64)
    cols = [(r // base ** (length - 1 - j)) % base - 1 for j in range(length)]
    if not cols:
        return np.zeros((len(r), 0), dtype=np.int16)
    return np.stack(cols, axis=1).astype(np.int16)


def brute_force_count(
    c: Condition,
    a: Angle,
    length: int,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
    chunk: int = 1 << 20,
) -> int:
    """Count valid words by filtering every word of the given length."""
    total = (a.order + 1) ** length
    found = 0
    for s in range(0, total, chunk):
        found += int(validate_array(all_words_array(a.order, length, s, s + chunk), c, a, policy).sum())
    return found


def validate_array(
    words: np.ndarray,
    c: Condition,
    a: Angle,
    policy: FirstDigitPolicy = FirstDigitPolicy.FREE,
) -> np.ndarray:
    """Vectorized :func:`validate` over the rows of a word array."""
    order = a.order
    words = np.asarray(words)
    n = words.shape[0]
    ok = np.ones(n, dtype=bool)
    last = np.full(n, ZERO_CODE, dtype=np.int64)
    last_pos = np.zeros(n, dtype=np.int64)
    for j in range(words.shape[1]):
        d = words[:, j].astype(np.int64)
        nz = d != ZERO_CODE
        fresh = last == ZERO_CODE
        if policy is FirstDigitPolicy.FREE:
            good = np.ones(n, dtype=bool)
        else:
            good = d == 0
        fwd = (last + 1) % order
        if c is Condition.GRC:
            follow = d == fwd
        elif c is Condition.SRC:
            follow = d == (last + np.where(last_pos % 2 == 1, 1, -1)) % order
        else:
            follow = (d == last) | (d == fwd)
        ok &= ~nz | np.where(fresh, good, follow)
        last = np.where(nz, d, last)
        last_pos = np.where(nz, j + 1, last_pos)
    return ok


def bss_array(words: np.ndarray) -> np.ndarray:
    """Vectorized :func:`compute_bss` over the rows of a word array."""
    words = np.asarray(words)
    bits = np.zeros(words.shape, dtype=np.int8)
    upcoming = np.full(words.shape[0], ZERO_CODE, dtype=np.int64)
    for j in range(words.shape[1] - 1, -1, -1):
        d = words[:, j].astype(np.int64)
        nz = d != ZERO_CODE
        bits[:, j] = nz & (d == upcoming)
        upcoming = np.where(nz, d, upcoming)
    return bits


def words_from_array(words: np.ndarray, a: Angle) -> list[RevolvingSequence]:
    return [
        RevolvingSequence(a, tuple(None if d == ZERO_CODE else int(d) for d in row))
        for row in np.asarray(words)
    ]


def as_code_row(digits: Sequence[Digit]) -> np.ndarray:
    return np.array([ZERO_CODE if d is None else d for d in digits], dtype=np.int16)
