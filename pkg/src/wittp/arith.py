"""Prime-field scalars and the factorial/binomial congruences everything else leans on."""

from __future__ import annotations

import math

DEFAULT_MAX_PRIME = 101


def is_prime(n: int) -> bool:
    """Trial-division primality test; all moduli here are tiny."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Prime:
    """A validated prime modulus.

    Construction rejects composites and primes above ``max_allowed``
    (default 101); raise the bound explicitly for larger runs.
    """

    __slots__ = ("p",)

    def __init__(self, p: int, max_allowed: int = DEFAULT_MAX_PRIME):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError(f"prime must be an int, got {type(p).__name__}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > max_allowed:
            raise ValueError(f"prime {p} exceeds the configured maximum {max_allowed}")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, Prime) and self.p == other.p

    def __hash__(self):
        return hash(("Prime", self.p))

    def __int__(self):
        return self.p

    def __repr__(self):
        return f"Prime({self.p})"


class FpScalar:
    """Canonical residue in F_p.

    Arithmetic only combines scalars over the same modulus; plain ints are
    coerced as residues.
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: Prime):
        self.value = value % modulus.p
        self.modulus = modulus

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.modulus)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"FpScalar({self.value} mod {self.modulus.p})"

    def is_zero(self) -> bool:
        return self.value == 0


def inv_mod(a: FpScalar) -> FpScalar:
    """Multiplicative inverse in F_p; zero is rejected."""
    if a.value == 0:
        raise ValueError("not invertible")
    return FpScalar(pow(a.value, -1, a.modulus.p), a.modulus)


def factorial_mod(n: int, p: Prime) -> FpScalar:
    """n! mod p, computed exactly over Z and then reduced."""
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return FpScalar(math.factorial(n) % p.p, p)


def binom_mod(n: int, k: int, p: Prime) -> FpScalar:
    """C(n, k) mod p, computed exactly over Z and then reduced."""
    if not 0 <= k <= n:
        raise ValueError(f"binomial index k={k} out of range for n={n}")
    return FpScalar(math.comb(n, k) % p.p, p)
