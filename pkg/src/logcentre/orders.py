"""Ramification data in codimension one and the divisors it induces.

An order over a normal base is described here only through its behaviour at
the height-one primes where it ramifies: each prime carries a ramification
index e and a block structure (the sizes making the completed order a block
upper-triangular matrix order). Everything derived from that datum is exact
rational arithmetic: the discriminant divisor sum((e-1)/e) * D_p, the local
index of the pair, and the ladder of valuations carried by the graded pieces
of the index-one cover of the centre.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional


@dataclass(frozen=True)
class RamificationDatum:
    """One ramified height-one prime: its label, index e, and block sizes."""

    prime_id: str
    e: int
    blocks: tuple

    def __post_init__(self):
        if not isinstance(self.prime_id, str) or not self.prime_id:
            raise ValueError("prime_id must be a nonempty string")
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError(f"ramification index must be a positive integer, got {self.e!r}")
        blocks = tuple(self.blocks)
        if len(blocks) != self.e:
            raise ValueError(f"expected {self.e} block sizes, got {len(blocks)}")
        if not all(isinstance(n, int) and n >= 1 for n in blocks):
            raise ValueError("block sizes must be positive integers")
        object.__setattr__(self, "blocks", blocks)


@dataclass(frozen=True)
class OrderSpec:
    """A named order given by its ramification data (inputs, never derived)."""

    name: str
    ramification: tuple

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("order name must be a nonempty string")
        data = tuple(self.ramification)
        seen = set()
        for datum in data:
            if not isinstance(datum, RamificationDatum):
                raise ValueError("ramification entries must be RamificationDatum")
            if datum.prime_id in seen:
                raise ValueError(f"duplicate prime {datum.prime_id!r}")
            seen.add(datum.prime_id)
        object.__setattr__(self, "ramification", data)


@dataclass(frozen=True)
class QDivisor:
    """Formal rational combination of named prime divisors, zero terms dropped."""

    terms: tuple

    def __post_init__(self):
        seen = set()
        clean = []
        for prime_id, coeff in self.terms:
            if not isinstance(prime_id, str) or not prime_id:
                raise ValueError("prime ids must be nonempty strings")
            if prime_id in seen:
                raise ValueError(f"duplicate prime {prime_id!r}")
            seen.add(prime_id)
            coeff = Fraction(coeff)
            if coeff != 0:
                clean.append((prime_id, coeff))
        object.__setattr__(self, "terms", tuple(clean))

    def coefficient(self, prime_id: str) -> Fraction:
        for pid, coeff in self.terms:
            if pid == prime_id:
                return coeff
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def ceil(self) -> "QDivisor":
        """Round every coefficient up; support is then the ramified locus."""
        return QDivisor(tuple((pid, Fraction(-((-c.numerator) // c.denominator)))
                              for pid, c in self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{coeff}*{pid}" for pid, coeff in self.terms)


def standard_index(coeff) -> Optional[int]:
    """The e with coeff == (e-1)/e, or None if the coefficient is not standard."""
    coeff = Fraction(coeff)
    if not 0 <= coeff < 1:
        return None
    inv = 1 / (1 - coeff)
    return int(inv) if inv.denominator == 1 else None


@dataclass(frozen=True)
class LogCentre:
    """The centre marked with the boundary divisor induced by ramification."""

    divisor: QDivisor
    source: OrderSpec

    def __post_init__(self):
        for pid, coeff in self.divisor.terms:
            if standard_index(coeff) is None:
                raise ValueError(f"coefficient {coeff} at {pid!r} is not of the form (e-1)/e")


def discriminant(spec: OrderSpec) -> QDivisor:
    """Boundary divisor sum over ramified primes of (e-1)/e * D_p.

    Primes with e = 1 contribute nothing; rounding the result up recovers the
    classical (reduced) discriminant locus.
    """
    return QDivisor(
        tuple((d.prime_id, Fraction(d.e - 1, d.e)) for d in spec.ramification)
    )


def local_index(e: int) -> int:
    """Least m >= 1 clearing the denominator of the boundary coefficient (e-1)/e."""
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"ramification index must be a positive integer, got {e!r}")
    return Fraction(e - 1, e).denominator


def cover_graded_valuations(e: int, m: int) -> tuple:
    """Valuations -floor(i*(e-1)/e) of the m graded pieces of the index cover.

    Each value equals both the scalar centralizer of the i-th dualizing power
    of the standard order with index e, and minus the coefficient of the
    rounded-down multiple floor(i*D) of the boundary at that prime; the test
    suite verifies all three routes agree.
    """
    if not isinstance(e, int) or e < 1:
        raise ValueError(f"ramification index must be a positive integer, got {e!r}")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"grading length must be a positive integer, got {m!r}")
    return tuple(-(i * (e - 1) // e) for i in range(m))


def log_centre(spec: OrderSpec) -> LogCentre:
    """The centre of the order together with its discriminant boundary."""
    return LogCentre(discriminant(spec), spec)
