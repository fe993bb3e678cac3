"""Noncommutative polynomial arithmetic with terminating rewriting.

Polynomials are finite rational combinations of words over named generators.
A :class:`RewriteSystem` carries rules ``lhs -> rhs`` together with a
termination witness: a weighted degree order under which every monomial of a
rule's right-hand side is strictly smaller than its left-hand side. Words are
compared by total weight, then by length (at equal weight a longer word is
smaller), then left-to-right by generator rank, which is a multiplication
compatible well-order, so every rewrite sequence halts. A step cap guards
against accidentally explosive (though still finite) reductions.

Normal forms let us check identities and centrality in algebras presented by
such systems. The module also ships a small commutative engine for the rank
two quiver algebra over the quadric cone k[a,b,c,d]/(ad - bc): matrices of
fractions with powers of ``a`` as denominators, used to verify its defining
relations and the presentation of its centre.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InputError, NonterminationSuspected

Word = tuple

DEFAULT_STEP_CAP = 10**6
STEP_CAP_ENV = "LOGCENTRE_STEP_CAP"


def _coerce(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not exact; use Fraction")
    return Fraction(value)


class NCPoly:
    """Noncommutative polynomial: a finite map from words to rational numbers."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                word = tuple(word)
                coeff = _coerce(coeff)
                if coeff:
                    acc = data.get(word, Fraction(0)) + coeff
                    if acc:
                        data[word] = acc
                    else:
                        data.pop(word, None)
        self._terms = data

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls()

    @classmethod
    def constant(cls, value) -> "NCPoly":
        return cls({(): value})

    @classmethod
    def one(cls) -> "NCPoly":
        return cls.constant(1)

    @classmethod
    def monomial(cls, word, coeff=1) -> "NCPoly":
        return cls({tuple(word): coeff})

    @classmethod
    def generator(cls, name: str) -> "NCPoly":
        return cls({(str(name),): 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Term list sorted by (length, word), shortest first."""
        return sorted(self._terms.items(), key=lambda item: (len(item[0]), item[0]))

    def letters(self) -> frozenset:
        return frozenset(letter for word in self._terms for letter in word)

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        data = dict(self._terms)
        for word, coeff in other._terms.items():
            acc = data.get(word, Fraction(0)) + coeff
            if acc:
                data[word] = acc
            else:
                data.pop(word, None)
        out = NCPoly.zero()
        out._terms = data
        return out

    __radd__ = __add__

    def __neg__(self):
        out = NCPoly.zero()
        out._terms = {w: -c for w, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        data: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                acc = data.get(word, Fraction(0)) + c1 * c2
                if acc:
                    data[word] = acc
                else:
                    data.pop(word, None)
        out = NCPoly.zero()
        out._terms = data
        return out

    def __rmul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = NCPoly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for index, (word, coeff) in enumerate(self.terms()):
            magnitude = abs(coeff)
            if not word:
                body = str(magnitude)
            elif magnitude == 1:
                body = _word_str(word)
            else:
                body = f"{magnitude}*{_word_str(word)}"
            if index == 0:
                chunks.append(("-" if coeff < 0 else "") + body)
            else:
                chunks.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self):
        return f"NCPoly({self})"


def _word_str(word) -> str:
    pieces = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        pieces.append(word[i] if j - i == 1 else f"{word[i]}^{j - i}")
        i = j
    return "*".join(pieces)


def _as_poly(value) -> Optional[NCPoly]:
    if isinstance(value, NCPoly):
        return value
    if isinstance(value, float):
        raise TypeError("floating point coefficients are not exact; use Fraction")
    if isinstance(value, (int, Fraction)):
        return NCPoly.constant(value)
    return None


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z0-9_]*)|([-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            remainder = text[pos:].strip()
            if not remainder:
                break
            raise InputError(f"cannot tokenize {remainder[:20]!r}")
        number, name, op = match.groups()
        if number is not None:
            tokens.append(("number", Fraction(number)))
        elif name is not None:
            tokens.append(("name", name))
        else:
            tokens.append(("op", op))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over +, -, *, ^, parentheses and juxtaposition."""

    def __init__(self, tokens, generators):
        self.tokens = tokens
        self.pos = 0
        self.generators = tuple(generators)

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        token = self.peek()
        self.pos += 1
        return token

    def parse(self) -> NCPoly:
        if not self.tokens:
            raise InputError("empty expression")
        poly = self.expr()
        if self.pos != len(self.tokens):
            raise InputError(f"unexpected token {self.peek()[1]!r}")
        return poly

    def expr(self) -> NCPoly:
        poly = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            _, op = self.take()
            rhs = self.term()
            poly = poly + rhs if op == "+" else poly - rhs
        return poly

    def term(self) -> NCPoly:
        sign = 1
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            if self.take()[1] == "-":
                sign = -sign
        poly = self.factor()
        while True:
            kind, value = self.peek()
            if (kind, value) == ("op", "*"):
                self.take()
                poly = poly * self.factor()
            elif kind in ("name", "number") or (kind, value) == ("op", "("):
                poly = poly * self.factor()
            else:
                break
        return sign * poly

    def factor(self) -> NCPoly:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, value = self.take()
            if kind != "number" or value.denominator != 1 or value < 0:
                raise InputError("exponent must be a nonnegative integer")
            base = base ** int(value)
        return base

    def atom(self) -> NCPoly:
        kind, value = self.take()
        if kind == "number":
            return NCPoly.constant(value)
        if kind == "name":
            return self.name_poly(value)
        if (kind, value) == ("op", "("):
            inner = self.expr()
            if self.take() != ("op", ")"):
                raise InputError("unbalanced parenthesis")
            return inner
        raise InputError(f"unexpected token {value!r}")

    def name_poly(self, name: str) -> NCPoly:
        if name in self.generators:
            return NCPoly.generator(name)
        if all(letter in self.generators for letter in name):
            # juxtaposed single-letter generators, e.g. "ab" for a*b
            return NCPoly.monomial(tuple(name))
        raise InputError(f"unknown generator {name!r}")


def parse_poly(text: str, generators) -> NCPoly:
    """Parse an expression like ``a*b - 2*c^3`` over the given generators."""
    return _Parser(_tokenize(text), generators).parse()


@dataclass(frozen=True)
class RewriteSystem:
    """Prioritised rewrite rules with a verified termination witness.

    generators fixes the rank used for tie-breaking; weights (default all 1,
    i.e. plain degree-lex) give the leading component of the word order. Every
    right-hand-side word must be strictly smaller than its rule's left-hand
    side, otherwise construction fails.
    """

    generators: tuple
    rules: tuple
    weights: Optional[tuple] = None

    def __post_init__(self):
        gens = tuple(str(g) for g in self.generators)
        if not gens or len(set(gens)) != len(gens) or any(not g for g in gens):
            raise ValueError("generators must be distinct nonempty names")
        object.__setattr__(self, "generators", gens)
        if self.weights is None:
            weights = (1,) * len(gens)
        else:
            weights = tuple(int(w) for w in self.weights)
        if len(weights) != len(gens) or any(w <= 0 for w in weights):
            raise ValueError("need one positive weight per generator")
        object.__setattr__(self, "weights", weights)
        rules = []
        for lhs, rhs in self.rules:
            lhs = tuple(lhs)
            if not lhs:
                raise ValueError("rule left-hand side must be a nonempty word")
            rhs = rhs if isinstance(rhs, NCPoly) else NCPoly(rhs)
            for letter in lhs + tuple(rhs.letters()):
                if letter not in gens:
                    raise ValueError(f"rule uses unknown generator {letter!r}")
            top = self.word_key(lhs)
            for word, _ in rhs.terms():
                if not self.word_key(word) < top:
                    raise ValueError(
                        f"rule {_word_str(lhs)} -> {rhs} breaks the termination order"
                    )
            rules.append((lhs, rhs))
        object.__setattr__(self, "rules", tuple(rules))

    def word_key(self, word):
        """Order key: total weight, then -length, then generator ranks."""
        rank = {g: i for i, g in enumerate(self.generators)}
        weight = sum(self.weights[rank[letter]] for letter in word)
        return (weight, -len(word), tuple(rank[letter] for letter in word))

    def find_redex(self, word):
        """(rule index, position) of the highest-priority leftmost match."""
        for index, (lhs, _) in enumerate(self.rules):
            span = len(lhs)
            for pos in range(len(word) - span + 1):
                if word[pos : pos + span] == lhs:
                    return index, pos
        return None


def _step_cap(step_cap: Optional[int]) -> int:
    if step_cap is not None:
        return int(step_cap)
    env = os.environ.get(STEP_CAP_ENV)
    return int(env) if env else DEFAULT_STEP_CAP


def normal_form(poly: NCPoly, system: RewriteSystem, step_cap: Optional[int] = None) -> NCPoly:
    """Fully reduce a polynomial, raising NonterminationSuspected past the cap."""
    cap = _step_cap(step_cap)
    unknown = poly.letters() - frozenset(system.generators)
    if unknown:
        raise InputError(f"polynomial uses unknown generators {sorted(unknown)}")
    result: dict = {}
    stack = list(poly._terms.items())
    steps = 0
    while stack:
        word, coeff = stack.pop()
        hit = system.find_redex(word)
        if hit is None:
            acc = result.get(word, Fraction(0)) + coeff
            if acc:
                result[word] = acc
            else:
                result.pop(word, None)
            continue
        steps += 1
        if steps > cap:
            raise NonterminationSuspected(
                f"rewriting exceeded {cap} steps; raise {STEP_CAP_ENV} if intended"
            )
        index, pos = hit
        lhs, rhs = system.rules[index]
        prefix, suffix = word[:pos], word[pos + len(lhs) :]
        for body, factor in rhs._terms.items():
            stack.append((prefix + body + suffix, coeff * factor))
    out = NCPoly.zero()
    out._terms = result
    return out


def is_central(poly: NCPoly, system: RewriteSystem, generators=None) -> bool:
    """True when the polynomial commutes with every listed generator."""
    names = tuple(generators) if generators is not None else system.generators
    for name in names:
        gen = NCPoly.generator(name)
        if not normal_form(gen * poly - poly * gen, system).is_zero:
            return False
    return True


def verify_identity(lhs: NCPoly, rhs: NCPoly, system: RewriteSystem) -> bool:
    return normal_form(lhs - rhs, system).is_zero


def matrix_compose(m, n, system: RewriteSystem):
    """Product of two matrices of polynomials, entries in normal form."""
    m = tuple(tuple(_entry(x) for x in row) for row in m)
    n = tuple(tuple(_entry(x) for x in row) for row in n)
    if any(len(row) != len(n) for row in m):
        raise ValueError("inner dimensions do not match")
    width = len(n[0])
    if any(len(row) != width for row in n):
        raise ValueError("ragged matrix")
    out = []
    for row in m:
        out_row = []
        for j in range(width):
            total = NCPoly.zero()
            for k, entry in enumerate(row):
                total = total + entry * n[k][j]
            out_row.append(normal_form(total, system))
        out.append(tuple(out_row))
    return tuple(out)


def _entry(value) -> NCPoly:
    poly = _as_poly(value)
    if poly is None:
        raise TypeError(f"cannot use {value!r} as a matrix entry")
    return poly


def clifford_system() -> RewriteSystem:
    """Generalised quaternion presentation: ca=-ac, cb=-bc, ba=ab-2c^3.

    Plain degree-lex cannot orient the last rule (its right side has a longer
    word), so generator weights 3, 3, 2 make all three rules weight-homogeneous
    and the order drops to the tie-breakers.
    """
    a, b, c = (NCPoly.generator(x) for x in "abc")
    rules = (
        (("c", "a"), -(a * c)),
        (("c", "b"), -(b * c)),
        (("b", "a"), a * b - 2 * c**3),
    )
    return RewriteSystem(("a", "b", "c"), rules, weights=(3, 3, 2))


def builtin_system(name: str) -> RewriteSystem:
    if name == "clifford":
        return clifford_system()
    raise InputError(f"unknown builtin system {name!r}")


class CommPoly:
    """Commutative polynomials in a, b, c, d modulo the quadric ad = bc.

    Every monomial is kept in the canonical shape with min(deg a, deg d) = 0,
    obtained by trading each ad factor for bc. The quotient is a domain, so
    cancelling powers of ``a`` below is legitimate.
    """

    VARS = ("a", "b", "c", "d")
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exponents, coeff in items:
                exponents = self._reduce(tuple(int(e) for e in exponents))
                coeff = _coerce(coeff)
                acc = data.get(exponents, Fraction(0)) + coeff
                if acc:
                    data[exponents] = acc
                else:
                    data.pop(exponents, None)
        self._terms = data

    @staticmethod
    def _reduce(exponents):
        if len(exponents) != 4 or any(e < 0 for e in exponents):
            raise ValueError("exponent vector must be four nonnegative integers")
        i, j, k, l = exponents
        t = min(i, l)
        return (i - t, j + t, k + t, l - t)

    @classmethod
    def zero(cls) -> "CommPoly":
        return cls()

    @classmethod
    def one(cls) -> "CommPoly":
        return cls({(0, 0, 0, 0): 1})

    @classmethod
    def var(cls, name: str) -> "CommPoly":
        index = cls.VARS.index(name)
        exponents = tuple(int(i == index) for i in range(4))
        return cls({exponents: 1})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "CommPoly") -> "CommPoly":
        data = dict(self._terms)
        for exponents, coeff in other._terms.items():
            acc = data.get(exponents, Fraction(0)) + coeff
            if acc:
                data[exponents] = acc
            else:
                data.pop(exponents, None)
        out = CommPoly.zero()
        out._terms = data
        return out

    def __neg__(self) -> "CommPoly":
        out = CommPoly.zero()
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other: "CommPoly") -> "CommPoly":
        return self + (-other)

    def __mul__(self, other: "CommPoly") -> "CommPoly":
        data: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exponents = self._reduce(tuple(x + y for x, y in zip(e1, e2)))
                acc = data.get(exponents, Fraction(0)) + c1 * c2
                if acc:
                    data[exponents] = acc
                else:
                    data.pop(exponents, None)
        out = CommPoly.zero()
        out._terms = data
        return out

    def __pow__(self, exponent: int) -> "CommPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = CommPoly.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"CommPoly({self._terms!r})"


class LocalElement:
    """Fraction num / a^apow over the quadric cone ring, a inverted."""

    __slots__ = ("num", "apow")

    def __init__(self, num: CommPoly, apow: int = 0):
        if apow < 0:
            raise ValueError("denominator exponent must be nonnegative")
        self.num = num
        self.apow = apow

    @staticmethod
    def _a_power(k: int) -> CommPoly:
        return CommPoly({(k, 0, 0, 0): 1})

    def __add__(self, other: "LocalElement") -> "LocalElement":
        num = self.num * self._a_power(other.apow) + other.num * self._a_power(self.apow)
        return LocalElement(num, self.apow + other.apow)

    def __neg__(self) -> "LocalElement":
        return LocalElement(-self.num, self.apow)

    def __sub__(self, other: "LocalElement") -> "LocalElement":
        return self + (-other)

    def __mul__(self, other: "LocalElement") -> "LocalElement":
        return LocalElement(self.num * other.num, self.apow + other.apow)

    def __eq__(self, other):
        if not isinstance(other, LocalElement):
            return NotImplemented
        return self.num * self._a_power(other.apow) == other.num * self._a_power(self.apow)

    __hash__ = None

    def __repr__(self):
        return f"LocalElement({self.num!r}, {self.apow})"


def _local_matmul(m, n):
    rows, inner, cols = len(m), len(n), len(n[0])
    zero = LocalElement(CommPoly.zero())
    out = []
    for i in range(rows):
        out_row = []
        for j in range(cols):
            total = zero
            for k in range(inner):
                total = total + m[i][k] * n[k][j]
            out_row.append(total)
        out.append(tuple(out_row))
    return tuple(out)


def _local_mat_eq(m, n) -> bool:
    return all(x == y for row_m, row_n in zip(m, n) for x, y in zip(row_m, row_n))


def quiver_relations_hold() -> bool:
    """Check the four braid-style relations of the rank two quiver algebra.

    The arrows act on a rank two module over the quadric cone; the only
    fractional entry is b/a, which the localisation at ``a`` makes exact.
    """
    a = LocalElement(CommPoly.var("a"))
    b_over_a = LocalElement(CommPoly.var("b"), 1)
    c = LocalElement(CommPoly.var("c"))
    one = LocalElement(CommPoly.one())
    zero = LocalElement(CommPoly.zero())
    u = ((zero, a), (zero, zero))
    v = ((zero, c), (zero, zero))
    ubar = ((zero, zero), (one, zero))
    vbar = ((zero, zero), (b_over_a, zero))

    def compose(x, y, z):
        return _local_matmul(_local_matmul(x, y), z)

    checks = (
        (compose(u, ubar, v), compose(v, ubar, u)),
        (compose(u, vbar, v), compose(v, vbar, u)),
        (compose(ubar, u, vbar), compose(vbar, u, ubar)),
        (compose(ubar, v, vbar), compose(vbar, v, ubar)),
    )
    return all(_local_mat_eq(lhs, rhs) for lhs, rhs in checks)


def invariant_presentation_holds() -> bool:
    """x = a^2, y = ab, z = b^2 kill xz - y^2, xd - yc and yd - zc."""
    a = CommPoly.var("a")
    b = CommPoly.var("b")
    c = CommPoly.var("c")
    d = CommPoly.var("d")
    x, y, z = a * a, a * b, b * b
    return (
        (x * z - y * y).is_zero
        and (x * d - y * c).is_zero
        and (y * d - z * c).is_zero
    )


def commutative_quotient_check(name: str) -> bool:
    """Named consistency checks tying a presentation to its commutative model."""
    if name != "francia-algebra":
        raise InputError(f"unknown algebra {name!r}")
    return quiver_relations_hold() and invariant_presentation_holds()
