"""Binary periodic sequences, cyclic shifts, and Hamming cross-correlation.

A protocol sequence is a fixed-period 0/1 sequence X of period n, indexed
0..n-1.  Its characteristic set is the subset of Z_n where X is 1; cyclic
shifting the sequence by tau translates the characteristic set by tau.

The shift-bounded Hamming cross-correlation

    H_delta(X, Y) = max_{0 <= tau <= delta} sum_i X(i) * Y(i - tau)

is the central verification quantity: conflict-avoiding properties are
statements that H_delta stays <= 1 over ordered pairs of code sequences.
Note H_delta is not symmetric in (X, Y) for delta < n-1, because only the
second argument is shifted.

Bits are packed into a single int (bit i of ``bits`` is X(i)); the period is
recorded separately so sequences with periods up to ~10^6 stay cheap.  The
correlation has two implementations, a set-translation path proportional to
the weights and a rotate/AND/popcount path proportional to n; ``method="auto"``
picks between them and tests cross-check that they agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class BinarySequence:
    """A 0/1 sequence of fixed period, bit-packed (bit i = X(i))."""

    period: int
    bits: int

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if self.bits < 0 or self.bits >> self.period:
            raise ValueError("bits out of range for period")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BinarySequence":
        vals = list(values)
        if any(v not in (0, 1) for v in vals):
            raise ValueError("sequence entries must be 0 or 1")
        bits = 0
        for i, v in enumerate(vals):
            if v:
                bits |= 1 << i
        return cls(len(vals), bits)

    @classmethod
    def from_string(cls, text: str) -> "BinarySequence":
        """Parse the textual form: n characters of 0/1, index 0 leftmost."""
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a 0/1 string: {text!r}")
        return cls.from_bits(int(c) for c in text)

    @classmethod
    def from_support(cls, support: Iterable[int], period: int) -> "BinarySequence":
        bits = 0
        for e in support:
            if not 0 <= e < period:
                raise ValueError(f"support element {e} outside [0, {period})")
            bits |= 1 << e
        return cls(period, bits)

    def __getitem__(self, i: int) -> int:
        return (self.bits >> (i % self.period)) & 1

    def __iter__(self) -> Iterator[int]:
        return (self[i] for i in range(self.period))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        """Positions of the ones, ascending."""
        return tuple(i for i in range(self.period) if (self.bits >> i) & 1)

    def to_string(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.period))

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class CharacteristicSet:
    """A subset of Z_n, stored strictly sorted."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError("modulus must be >= 1")
        if list(self.elements) != sorted(set(self.elements)):
            object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        for e in self.elements:
            if not 0 <= e < self.modulus:
                raise ValueError(f"element {e} outside [0, {self.modulus})")

    def translate(self, tau: int) -> "CharacteristicSet":
        n = self.modulus
        return CharacteristicSet(n, tuple(sorted((e + tau) % n for e in self.elements)))

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: int) -> bool:
        return e % self.modulus in self.elements

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)


def cyclic_shift(x: BinarySequence, tau: int) -> BinarySequence:
    """Shift x right by tau positions cyclically: result(i) = x(i - tau).

    tau is reduced mod n, so composing shifts arbitrarily many times is fine.
    """
    n = x.period
    tau %= n
    if tau == 0:
        return x
    mask = (1 << n) - 1
    bits = ((x.bits << tau) | (x.bits >> (n - tau))) & mask
    return BinarySequence(n, bits)


def characteristic_set(x: BinarySequence) -> CharacteristicSet:
    """The set of positions where x is 1."""
    return CharacteristicSet(x.period, x.support())


def from_characteristic_set(
    support: CharacteristicSet | Iterable[int],
    modulus: int | None = None,
    expected_weight: int | None = None,
) -> BinarySequence:
    """Inverse of characteristic_set.  Rejects elements >= modulus."""
    if isinstance(support, CharacteristicSet):
        elements: Iterable[int] = support.elements
        n = support.modulus if modulus is None else modulus
    else:
        elements = support
        if modulus is None:
            raise ValueError("modulus required when support is a plain iterable")
        n = modulus
    seq = BinarySequence.from_support(elements, n)
    if expected_weight is not None and seq.weight != expected_weight:
        raise ValueError(f"expected weight {expected_weight}, got {seq.weight}")
    return seq


def _xcorr_bits(x: BinarySequence, y: BinarySequence, delta: int) -> int:
    n = x.period
    mask = (1 << n) - 1
    xb = x.bits
    yb = y.bits
    best = 0
    for tau in range(delta + 1):
        rotated = ((yb << tau) | (yb >> (n - tau))) & mask if tau else yb
        hits = (xb & rotated).bit_count()
        if hits > best:
            best = hits
    return best


def _xcorr_sets(x: BinarySequence, y: BinarySequence, delta: int) -> int:
    n = x.period
    xs = set(x.support())
    ys = y.support()
    best = 0
    for tau in range(delta + 1):
        hits = sum(1 for e in ys if (e + tau) % n in xs)
        if hits > best:
            best = hits
    return best


def hamming_xcorr_bounded(
    x: BinarySequence, y: BinarySequence, delta: int, method: str = "auto"
) -> int:
    """max over tau in [0, delta] of the number of coinciding ones of x and
    the tau-shifted y.  Asymmetric in (x, y) for delta < n-1.
    """
    if x.period != y.period:
        raise ValueError(f"period mismatch: {x.period} vs {y.period}")
    n = x.period
    if not 0 <= delta < n:
        raise ValueError(f"delta must be in [0, {n - 1}], got {delta}")
    if method == "auto":
        # set path costs ~(delta+1)*(w_x + w_y), bit path ~(delta+1)*n/60
        method = "sets" if (x.weight + y.weight) * 16 < n else "bits"
    if method == "sets":
        return _xcorr_sets(x, y, delta)
    if method == "bits":
        return _xcorr_bits(x, y, delta)
    raise ValueError(f"unknown method {method!r}")


def hamming_xcorr(x: BinarySequence, y: BinarySequence, method: str = "auto") -> int:
    """Full (unbounded-shift) Hamming cross-correlation."""
    return hamming_xcorr_bounded(x, y, x.period - 1, method)
