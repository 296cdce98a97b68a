"""Exact arithmetic for multigraded supercommutative polynomials.

Monomials mix even (polynomial) generators with odd (exterior) ones;
odd generators anticommute and square to zero.  Coefficients live in
Q, Z or a prime field, all with arbitrary precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


class StructuralError(ValueError):
    """Operands from different presentations or coefficient rings."""


@dataclass(frozen=True)
class Degree:
    """Exponent triple on the (q, t, a) grading lattice."""

    q: int = 0
    t: int = 0
    a: int = 0

    def __add__(self, other: "Degree") -> "Degree":
        return Degree(self.q + other.q, self.t + other.t, self.a + other.a)

    def __sub__(self, other: "Degree") -> "Degree":
        return Degree(self.q - other.q, self.t - other.t, self.a - other.a)

    def scale(self, n: int) -> "Degree":
        return Degree(n * self.q, n * self.t, n * self.a)

    def key(self):
        # canonical (t, q, a) order used everywhere for serialization
        return (self.t, self.q, self.a)

    def __str__(self):
        return f"q^{self.q} t^{self.t}" + (f" a^{self.a}" if self.a else "")


ZERO_DEGREE = Degree(0, 0, 0)
T_STEP = Degree(0, 1, 0)  # the differential moves degrees by -T_STEP


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class CoefficientRing:
    """One of Q, Z, or F_p (p prime)."""

    kind: str  # "Q" | "Z" | "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Q", "Z", "Fp"):
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")
        if self.kind == "Fp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"PrimeField requires a prime, got {self.p}")
        elif self.p is not None:
            raise ValueError("p only makes sense for PrimeField")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def normalize(self, c):
        """Map an int/Fraction into canonical form; 0 means drop the term."""
        if self.kind == "Q":
            return Fraction(c)
        if self.kind == "Fp":
            if isinstance(c, Fraction):
                if c.denominator % self.p == 0:
                    raise ZeroDivisionError("denominator not invertible mod p")
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return c % self.p
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return c.numerator
        return c

    def __str__(self):
        return {"Q": "Q", "Z": "Z"}.get(self.kind, f"F{self.p}")


QQ = CoefficientRing("Q")
ZZ = CoefficientRing("Z")


def prime_field(p: int) -> CoefficientRing:
    return CoefficientRing("Fp", p)


@dataclass(frozen=True)
class Monomial:
    """Even exponent vector plus a sorted tuple of odd generator indices."""

    even: tuple
    odd: tuple = ()

    def __post_init__(self):
        if any(e < 0 for e in self.even):
            raise ValueError("negative even exponent")
        if any(self.odd[i] >= self.odd[i + 1] for i in range(len(self.odd) - 1)):
            raise ValueError("odd indices must be strictly increasing")

    @property
    def parity(self) -> int:
        return len(self.odd) % 2

    def total_exponent(self) -> int:
        return sum(self.even) + len(self.odd)

    def is_one(self) -> bool:
        return not self.odd and not any(self.even)


def one_monomial(n_even: int) -> Monomial:
    return Monomial((0,) * n_even)


def mono_mul(m1: Monomial, m2: Monomial):
    """Multiply monomials; returns (sign, product) or None when it vanishes.

    The sign counts inversions when merging the two odd index sequences
    (Koszul sign rule); a shared odd index kills the product.
    """
    if len(m1.even) != len(m2.even):
        raise StructuralError("monomials over different presentations")
    if set(m1.odd) & set(m2.odd):
        return None
    # merge-count inversions between the sorted odd sequences
    inv = 0
    i = 0
    for b in m2.odd:
        while i < len(m1.odd) and m1.odd[i] < b:
            i += 1
        inv += len(m1.odd) - i
    even = tuple(a + b for a, b in zip(m1.even, m2.even))
    odd = tuple(sorted(m1.odd + m2.odd))
    return (-1) ** inv, Monomial(even, odd)


def mono_degree(m: Monomial, pres) -> Degree:
    """Total degree of a monomial over a presentation."""
    deg = ZERO_DEGREE
    for e, d in zip(m.even, pres.even_degrees):
        if e:
            deg = deg + d.scale(e)
    for j in m.odd:
        deg = deg + pres.odd_degrees[j]
    return deg


class SuperPolynomial:
    """Finite sum of monomials with nonzero coefficients in a fixed ring.

    Values are immutable by convention; all operations return new objects.
    """

    __slots__ = ("ring", "n_even", "terms")

    def __init__(self, ring: CoefficientRing, n_even: int, terms=None):
        self.ring = ring
        self.n_even = n_even
        clean = {}
        if terms:
            for m, c in terms.items():
                c = ring.normalize(c)
                if c:
                    clean[m] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring, n_even):
        return cls(ring, n_even)

    @classmethod
    def one(cls, ring, n_even):
        return cls(ring, n_even, {one_monomial(n_even): 1})

    @classmethod
    def from_monomial(cls, ring, m: Monomial, coeff=1):
        return cls(ring, len(m.even), {m: coeff})

    # -- queries ------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return (self.ring == other.ring and self.n_even == other.n_even
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.n_even, frozenset(self.terms.items())))

    def _check(self, other):
        if self.ring != other.ring:
            raise StructuralError(
                f"coefficient ring mismatch: {self.ring} vs {other.ring}")
        if self.n_even != other.n_even:
            raise StructuralError("presentation mismatch")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return SuperPolynomial(self.ring, self.n_even, terms)

    def __neg__(self):
        return SuperPolynomial(self.ring, self.n_even,
                               {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        return SuperPolynomial(self.ring, self.n_even,
                               {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, SuperPolynomial):
            return self.scaled(other)
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = mono_mul(m1, m2)
                if r is None:
                    continue
                sign, m = r
                terms[m] = terms.get(m, 0) + sign * c1 * c2
        return SuperPolynomial(self.ring, self.n_even, terms)

    __rmul__ = scaled

    def map_ring(self, ring: CoefficientRing) -> "SuperPolynomial":
        """Push coefficients into another ring (e.g. Z -> F_p reduction)."""
        return SuperPolynomial(ring, self.n_even, dict(self.terms))

    # -- canonical order and text form ---------------------------------

    def sorted_terms(self, pres=None):
        """Terms in canonical order: graded-lex (t, q, evenExp, oddSet)."""
        if pres is None:
            key = lambda m: (m.even, m.odd)
        else:
            key = lambda m: (mono_degree(m, pres).key(), m.even, m.odd)
        return [(m, self.terms[m]) for m in sorted(self.terms, key=key)]

    def text(self, pres) -> str:
        """Canonical text form, e.g. ``2*x1*xi0 - x0*xi1``."""
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms(pres):
            factors = []
            for i, e in enumerate(m.even):
                if e == 1:
                    factors.append(pres.even_symbols[i])
                elif e > 1:
                    factors.append(f"{pres.even_symbols[i]}^{e}")
            for j in m.odd:
                factors.append(pres.odd_symbols[j])
            body = "*".join(factors) if factors else "1"
            if c == 1 and factors:
                term = body
            elif c == -1 and factors:
                term = f"-{body}"
            elif factors:
                term = f"{c}*{body}"
            else:
                term = str(c)
            pieces.append(term)
        out = pieces[0]
        for term in pieces[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"SuperPolynomial({len(self.terms)} terms over {self.ring})"
