"""Dense polynomial arithmetic over F_p and the two rank-p truncated quotient rings.

Untruncated polynomials (FpPoly) are canonical coefficient tuples, lowest
degree first, trailing zeros stripped, empty tuple for zero.  Quotient-ring
elements (TruncPoly) hold exactly p coefficients and reduce x^p to 0
(variant XP) or to 1 (variant XP1).  The two quotient rings are isomorphic
via the substitution x <-> x - 1, implemented by iso_shift/iso_unshift.

The module-level ``*_trunc`` kernels operate on raw int sequences; sweeps
that visit every element of the quotient ring run on these directly.
"""

from __future__ import annotations

import enum

from .arith import FpScalar, Prime


class ModulusVariant(enum.Enum):
    """Defining relation of the truncated ring."""

    XP = "xp"    # x^p = 0
    XP1 = "xp1"  # x^p = 1

    @property
    def fold(self) -> int:
        """Image of x^p under the reduction."""
        return 0 if self is ModulusVariant.XP else 1

    @classmethod
    def parse(cls, text: str) -> "ModulusVariant":
        for v in cls:
            if v.value == text.lower():
                return v
        raise ValueError(f"unknown modulus variant {text!r} (expected 'xp' or 'xp1')")


# -- kernels on raw coefficient sequences ------------------------------------

def mul_trunc(a, b, p: int, fold: int):
    """Product of two length-p coefficient vectors, x^p folded to ``fold``."""
    res = [0] * p
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    k = i + j
                    if k < p:
                        res[k] += ai * bj
                    elif fold:
                        res[k - p] += ai * bj
    return tuple(c % p for c in res)


def shift_trunc(a, k: int, p: int, fold: int):
    """Multiply a length-p vector by x^k (0 <= k < p), folding as above."""
    res = [0] * p
    for i, ai in enumerate(a):
        if ai:
            j = i + k
            if j < p:
                res[j] += ai
            elif fold:
                res[j - p] += ai
    return tuple(c % p for c in res)


def derive_trunc(a, p: int):
    """Formal derivative of a length-p vector (degree p-1 term always dies)."""
    return tuple(((i + 1) * a[i + 1]) % p for i in range(p - 1)) + (0,)


def scale_seq(a, k: int, p: int):
    return tuple((ai * k) % p for ai in a)


class FpPoly:
    """Polynomial over F_p with no degree cap."""

    __slots__ = ("coeffs", "prime")

    def __init__(self, coeffs, prime: Prime):
        p = prime.p
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.prime = prime

    @classmethod
    def zero(cls, prime: Prime) -> "FpPoly":
        return cls((), prime)

    @classmethod
    def one(cls, prime: Prime) -> "FpPoly":
        return cls((1,), prime)

    @classmethod
    def x(cls, prime: Prime) -> "FpPoly":
        return cls((0, 1), prime)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant(self) -> FpScalar:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return FpScalar(self.coeffs[0] if self.coeffs else 0, self.prime)

    def _check(self, other: "FpPoly"):
        if self.prime != other.prime:
            raise ValueError("prime mismatch")

    def __add__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs, other.coeffs
        return FpPoly(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)],
            self.prime,
        )

    def __sub__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return FpPoly([-c for c in self.coeffs], self.prime)

    def __mul__(self, other):
        if not isinstance(other, FpPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly.zero(self.prime)
        res = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    res[i + j] += ai * bj
        return FpPoly(res, self.prime)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = FpPoly.one(self.prime)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, k) -> "FpPoly":
        return FpPoly([c * int(k) for c in self.coeffs], self.prime)

    def derive(self) -> "FpPoly":
        return FpPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.prime)

    def evaluate(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.prime.p
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly)
            and self.prime == other.prime
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.prime.p))

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)}, p={self.prime.p})"


class TruncPoly:
    """Element of F_p[x]/(x^p - c), c in {0, 1}; exactly p stored coefficients."""

    __slots__ = ("coeffs", "prime", "variant")

    def __init__(self, coeffs, prime: Prime, variant: ModulusVariant):
        p = prime.p
        fold = variant.fold
        acc = [0] * p
        for i, c in enumerate(coeffs):
            c = int(c)
            if i < p:
                acc[i] += c
            elif fold:
                acc[i % p] += c
        self.coeffs = tuple(c % p for c in acc)
        self.prime = prime
        self.variant = variant

    @classmethod
    def zero(cls, prime: Prime, variant: ModulusVariant) -> "TruncPoly":
        return cls((), prime, variant)

    @classmethod
    def one(cls, prime: Prime, variant: ModulusVariant) -> "TruncPoly":
        return cls((1,), prime, variant)

    @classmethod
    def x(cls, prime: Prime, variant: ModulusVariant) -> "TruncPoly":
        return cls((0, 1), prime, variant)

    @classmethod
    def from_fppoly(cls, f: FpPoly, variant: ModulusVariant) -> "TruncPoly":
        return cls(f.coeffs, f.prime, variant)

    def lift(self) -> FpPoly:
        """Canonical representative in F_p[x] (degree < p)."""
        return FpPoly(self.coeffs, self.prime)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_constant(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def constant(self) -> FpScalar:
        if not self.is_constant():
            raise ValueError("element is not constant")
        return FpScalar(self.coeffs[0], self.prime)

    def _check(self, other: "TruncPoly"):
        if self.prime != other.prime or self.variant is not other.variant:
            raise ValueError("variant/prime mismatch")

    def __add__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check(other)
        return self._wrap(tuple((a + b) % self.prime.p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check(other)
        return self._wrap(tuple((a - b) % self.prime.p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return self._wrap(tuple((-c) % self.prime.p for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, TruncPoly):
            return NotImplemented
        self._check(other)
        return self._wrap(mul_trunc(self.coeffs, other.coeffs, self.prime.p, self.variant.fold))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = TruncPoly.one(self.prime, self.variant)
        for _ in range(n):
            out = out * self
        return out

    def scale(self, k) -> "TruncPoly":
        return self._wrap(scale_seq(self.coeffs, int(k), self.prime.p))

    def derive(self) -> "TruncPoly":
        """Formal derivative; well defined since (x^p - c)' = 0 in char p."""
        return self._wrap(derive_trunc(self.coeffs, self.prime.p))

    def _wrap(self, coeffs) -> "TruncPoly":
        # internal: coeffs already canonical
        obj = object.__new__(TruncPoly)
        obj.coeffs = coeffs
        obj.prime = self.prime
        obj.variant = self.variant
        return obj

    def __eq__(self, other):
        return (
            isinstance(other, TruncPoly)
            and self.prime == other.prime
            and self.variant is other.variant
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.coeffs, self.prime.p, self.variant))

    def __repr__(self):
        return f"TruncPoly({list(self.coeffs)}, p={self.prime.p}, {self.variant.value})"


def trunc_mul(a: TruncPoly, b: TruncPoly) -> TruncPoly:
    """Product in the quotient ring; raises on variant/prime mismatch."""
    return a * b


def derive(a):
    """Formal derivative of a TruncPoly or FpPoly."""
    return a.derive()


def modulus_poly(prime: Prime, variant: ModulusVariant) -> FpPoly:
    """The defining modulus x^p - c as an untruncated polynomial."""
    coeffs = [0] * (prime.p + 1)
    coeffs[0] = -variant.fold
    coeffs[prime.p] = 1
    return FpPoly(coeffs, prime)


def poly_divmod(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly]:
    """Quotient and remainder in F_p[x]; b must be nonzero."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    p = a.prime.p
    a._check(b)
    rem = list(a.coeffs)
    db, lead = b.degree, b.coeffs[-1]
    inv_lead = pow(lead, -1, p)
    if len(rem) - 1 < db:
        return FpPoly.zero(a.prime), a
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c:
            q = (c * inv_lead) % p
            quot[i - db] = q
            for j, bj in enumerate(b.coeffs):
                rem[i - db + j] = (rem[i - db + j] - q * bj) % p
    return FpPoly(quot, a.prime), FpPoly(rem[:db], a.prime)


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd in F_p[x] (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scale(pow(a.coeffs[-1], -1, a.prime.p))


def is_zero_divisor(a: TruncPoly) -> bool:
    """True iff a kills some nonzero element; tested via gcd with the modulus."""
    g = poly_gcd(a.lift(), modulus_poly(a.prime, a.variant))
    return g.degree != 0


def iso_shift(a: TruncPoly) -> TruncPoly:
    """Ring isomorphism F_p[x]/(x^p) -> F_p[x]/(x^p - 1), f(x) |-> f(x - 1)."""
    if a.variant is not ModulusVariant.XP:
        raise ValueError("iso_shift expects variant XP")
    return _substitute(a, ModulusVariant.XP1, -1)


def iso_unshift(a: TruncPoly) -> TruncPoly:
    """Inverse isomorphism, f(x) |-> f(x + 1)."""
    if a.variant is not ModulusVariant.XP1:
        raise ValueError("iso_unshift expects variant XP1")
    return _substitute(a, ModulusVariant.XP, 1)


def _substitute(a: TruncPoly, target: ModulusVariant, offset: int) -> TruncPoly:
    # Horner evaluation of a at (x + offset) inside the target ring.
    arg = TruncPoly((offset, 1), a.prime, target)
    acc = TruncPoly.zero(a.prime, target)
    for c in reversed(a.coeffs):
        acc = acc * arg + TruncPoly((c,), a.prime, target)
    return acc


def poly_from_text(text: str, prime: Prime) -> FpPoly:
    """Parse the CLI format: comma-separated coefficients, lowest degree first."""
    parts = [s.strip() for s in text.split(",")]
    try:
        coeffs = [int(s) for s in parts]
    except ValueError as exc:
        raise ValueError(f"bad polynomial text {text!r}: {exc}") from None
    return FpPoly(coeffs, prime)


def poly_to_text(coeffs) -> str:
    cs = list(coeffs)
    if not cs:
        return "0"
    return ",".join(str(c) for c in cs)
