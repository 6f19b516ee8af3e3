"""Exact scalars: rationals, rationals times a power of pi, and a tiny LCG."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

Scalar = Fraction


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not an exact rational: {x!r}")


def compact(x):
    """Return ``x`` as an int when it is integral (faster arithmetic downstream)."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class ScaledScalar:
    """The exact number ``value * pi**pi_power``."""

    value: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "value", as_scalar(self.value))
        if self.value == 0:
            object.__setattr__(self, "pi_power", 0)

    def __add__(self, other: ScaledScalar) -> ScaledScalar:
        if not isinstance(other, ScaledScalar):
            return NotImplemented
        if self.value == 0:
            return other
        if other.value == 0:
            return self
        if self.pi_power != other.pi_power:
            raise ValueError("cannot add values carrying different powers of pi")
        return ScaledScalar(self.value + other.value, self.pi_power)

    def __neg__(self) -> ScaledScalar:
        return ScaledScalar(-self.value, self.pi_power)

    def __sub__(self, other: ScaledScalar) -> ScaledScalar:
        return self + (-other)

    def __mul__(self, other) -> ScaledScalar:
        if isinstance(other, ScaledScalar):
            return ScaledScalar(self.value * other.value, self.pi_power + other.pi_power)
        if isinstance(other, (int, Fraction)):
            return ScaledScalar(self.value * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self) -> float:
        import math

        return float(self.value) * math.pi**self.pi_power

    def __str__(self) -> str:
        if self.value == 0:
            return "0"
        if self.pi_power == 0:
            return str(self.value)
        num, den = self.value.numerator, self.value.denominator
        p = abs(self.pi_power)
        pi = "π" if p == 1 else f"π^{p}"
        if self.pi_power > 0:
            head = pi if num == 1 else ("-" + pi if num == -1 else f"{num}·{pi}")
            return head if den == 1 else f"{head}/{den}"
        return f"{num}/{pi}" if den == 1 else f"{num}/({den}·{pi})"


class LCG:
    """Deterministic 64-bit linear congruential generator (Knuth's MMIX constants).

    Used instead of :mod:`random` so that every exact test point is reproducible
    from the seed alone, independently of the Python version.
    """

    A = 6364136223846793005
    C = 1442695040888963407
    M = 1 << 64

    def __init__(self, seed: int = 1):
        self.state = seed % self.M

    def next(self) -> int:
        self.state = (self.A * self.state + self.C) % self.M
        return self.state >> 33

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the closed range [lo, hi]."""
        return lo + self.next() % (hi - lo + 1)

    def rational(self, height: int = 10) -> Fraction:
        return Fraction(self.randint(-height, height), self.randint(1, height))
