"""Exact multivariate polynomials over Z and the symmetrized product-chain congruences.

Polynomials in t_1, ..., t_m are sparse maps from exponent vectors to
arbitrary-precision integers.  The central objects are the nested-partial-sum
products t_s(1) (t_s(1)+t_s(2)) ... (t_s(1)+...+t_s(m)) attached to
permutations s, their sum over the full symmetric group, and the power
(t_1+...+t_m)^m, compared coefficientwise mod p.

Summing over all m! permutations is factorial work; the default bound stops
at m = 6 (p = 7).  With the explicit override, p = 11 is evaluated through
the orbit-stabilizer form of the same sum (grouping the m! images of each
monomial by its sorted exponent signature), which is exact over Z and is
cross-checked against the literal sum for small m.
"""

from __future__ import annotations

import itertools
import math

from .arith import Prime
from .errors import BoundExceededError

DIRECT_PERMUTATION_BOUND = 7  # largest p whose (p-1)! product-chain sum runs literally
ALLOW_LARGE_BOUND = 11        # largest p accepted at all, behind allow_large


class MVPoly:
    """Sparse polynomial over Z in a fixed number of variables."""

    __slots__ = ("terms", "arity")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        tidy = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != arity:
                raise ValueError("exponent vector with wrong arity")
            if coeff:
                key = tuple(exps)
                tidy[key] = tidy.get(key, 0) + coeff
                if tidy[key] == 0:
                    del tidy[key]
        self.terms = tidy

    @classmethod
    def zero(cls, arity: int) -> "MVPoly":
        return cls(arity)

    @classmethod
    def one(cls, arity: int) -> "MVPoly":
        return cls(arity, {(0,) * arity: 1})

    @classmethod
    def variable(cls, i: int, arity: int) -> "MVPoly":
        """The variable t_i (1-based)."""
        if not 1 <= i <= arity:
            raise ValueError(f"variable index {i} out of range")
        e = [0] * arity
        e[i - 1] = 1
        return cls(arity, {tuple(e): 1})

    @classmethod
    def linear_sum(cls, arity: int) -> "MVPoly":
        """t_1 + ... + t_arity."""
        terms = {}
        for i in range(arity):
            e = [0] * arity
            e[i] = 1
            terms[tuple(e)] = 1
        return cls(arity, terms)

    def coefficient(self, exps) -> int:
        return self.terms.get(tuple(exps), 0)

    def _check(self, other: "MVPoly"):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")

    def __add__(self, other):
        if not isinstance(other, MVPoly):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) + c
        return MVPoly(self.arity, merged)

    def __sub__(self, other):
        if not isinstance(other, MVPoly):
            return NotImplemented
        self._check(other)
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) - c
        return MVPoly(self.arity, merged)

    def __neg__(self):
        return MVPoly(self.arity, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MVPoly):
            return NotImplemented
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return MVPoly(self.arity, out)

    def scale(self, k: int) -> "MVPoly":
        return MVPoly(self.arity, {e: c * k for e, c in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def is_zero_mod(self, p: Prime) -> bool:
        return all(c % p.p == 0 for c in self.terms.values())

    def first_nonzero_mod(self, p: Prime):
        """First (graded-lex) term whose coefficient survives mod p, or None."""
        for exps, coeff in self.sorted_terms():
            if coeff % p.p:
                return exps, coeff
        return None

    def permute_variables(self, perm) -> "MVPoly":
        """Rename t_i to t_perm[i] (1-based permutation)."""
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.arity
            for i, e in enumerate(exps):
                new[perm[i] - 1] = e
            key = tuple(new)
            out[key] = out.get(key, 0) + c
        return MVPoly(self.arity, out)

    def is_symmetric(self) -> bool:
        coeffs = {}
        counts = {}
        for exps, c in self.terms.items():
            sig = tuple(sorted(exps, reverse=True))
            if coeffs.setdefault(sig, c) != c:
                return False
            counts[sig] = counts.get(sig, 0) + 1
        return all(
            counts[sig] == sum(1 for _ in _distinct_permutations(sig)) for sig in counts
        )

    def sorted_terms(self):
        """Graded-lex order, highest degree first, for deterministic output."""
        return sorted(
            self.terms.items(),
            key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0])),
        )

    def to_json_obj(self):
        return [
            {"exponents": list(exps), "coeff": str(coeff)}
            for exps, coeff in self.sorted_terms()
        ]

    def __eq__(self, other):
        return (
            isinstance(other, MVPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"MVPoly(arity={self.arity}, terms={len(self.terms)})"


def _distinct_permutations(seq):
    """All distinct rearrangements of seq, lexicographically descending."""
    current = sorted(seq, reverse=True)
    n = len(current)
    while True:
        yield tuple(current)
        # next permutation in descending enumeration
        i = n - 2
        while i >= 0 and current[i] <= current[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while current[j] >= current[i]:
            j -= 1
        current[i], current[j] = current[j], current[i]
        current[i + 1:] = reversed(current[i + 1:])


def product_chain(perm) -> MVPoly:
    """t_s(1) (t_s(1)+t_s(2)) ... (t_s(1)+...+t_s(m)) for the permutation s."""
    m = len(perm)
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {perm!r}")
    partial = MVPoly.zero(m)
    acc = MVPoly.one(m)
    for idx in perm:
        partial = partial + MVPoly.variable(idx, m)
        acc = acc * partial
    return acc


def _check_bounds(p: Prime, allow_large: bool):
    if p.p > ALLOW_LARGE_BOUND:
        raise BoundExceededError(
            f"permutation sum for p={p.p} is refused (bound {ALLOW_LARGE_BOUND})"
        )
    if p.p > DIRECT_PERMUTATION_BOUND and not allow_large:
        raise BoundExceededError(
            f"permutation sum for p={p.p} needs allow_large "
            f"({math.factorial(p.p - 1)} permutations)"
        )


def lhs_sum(p: Prime, *, allow_large: bool = False, method: str = "auto") -> MVPoly:
    """Sum of product_chain over every permutation of {1..p-1}.

    method "direct" runs the literal factorial sum; "orbit" evaluates the
    same sum by symmetrizing the identity chain (exact over Z); "auto"
    picks direct up to the bound and orbit beyond it.
    """
    _check_bounds(p, allow_large)
    m = p.p - 1
    if method == "auto":
        method = "direct" if p.p <= DIRECT_PERMUTATION_BOUND else "orbit"
    if method == "direct":
        acc = MVPoly.zero(m)
        for perm in itertools.permutations(range(1, m + 1)):
            acc = acc + product_chain(perm)
        return acc
    if method == "orbit":
        return symmetrize(product_chain(tuple(range(1, m + 1))))
    raise ValueError(f"unknown method {method!r}")


def symmetrize(poly: MVPoly) -> MVPoly:
    """Sum of all variable permutations of poly.

    Permutations are grouped by the sorted exponent signature of each
    monomial: a vector with value multiplicities (n_v) is fixed by
    prod(n_v!) permutations, so each distinct rearrangement receives the
    accumulated coefficient times that stabilizer size.
    """
    m = poly.arity
    by_sig = {}
    for exps, c in poly.terms.items():
        sig = tuple(sorted(exps, reverse=True))
        by_sig[sig] = by_sig.get(sig, 0) + c
    out = {}
    for sig, c in by_sig.items():
        counts = {}
        for v in sig:
            counts[v] = counts.get(v, 0) + 1
        stab = 1
        for n in counts.values():
            stab *= math.factorial(n)
        weight = c * stab
        for arrangement in _distinct_permutations(sig):
            out[arrangement] = out.get(arrangement, 0) + weight
    return MVPoly(m, out)


def rhs_power(p: Prime) -> MVPoly:
    """(t_1 + ... + t_{p-1})^(p-1), exact over Z."""
    m = p.p - 1
    s = MVPoly.linear_sum(m)
    acc = MVPoly.one(m)
    for _ in range(m):
        acc = acc * s
    return acc


def power_sum(p: Prime) -> MVPoly:
    """t_1^p + ... + t_{p-1}^p."""
    m = p.p - 1
    terms = {}
    for i in range(m):
        e = [0] * m
        e[i] = p.p
        terms[tuple(e)] = 1
    return MVPoly(m, terms)


def theorem3_check(p: Prime, *, allow_large: bool = False) -> bool:
    """Permutation sum congruent to the full power mod p, coefficientwise."""
    return (lhs_sum(p, allow_large=allow_large) - rhs_power(p)).is_zero_mod(p)


def precancel_check(p: Prime, *, allow_large: bool = False) -> bool:
    """The identity before cancellation, plus the characteristic-p power step.

    Checks lhs * (t_1+...+t_{p-1}) = t_1^p+...+t_{p-1}^p mod p, and that the
    power sum agrees with (t_1+...+t_{p-1})^p mod p.
    """
    m = p.p - 1
    lin = MVPoly.linear_sum(m)
    lhs = lhs_sum(p, allow_large=allow_large) * lin
    psum = power_sum(p)
    if not (lhs - psum).is_zero_mod(p):
        return False
    full = rhs_power(p) * lin  # (t_1+...+t_{p-1})^p
    return (psum - full).is_zero_mod(p)


def cancel_divide(a: MVPoly, d: MVPoly) -> MVPoly:
    """Exact quotient a / d over Z; raises naming the first stuck monomial."""
    a._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = MVPoly(a.arity, dict(a.terms))
    lead_d, lead_dc = d.sorted_terms()[0]
    quot = {}
    while not rem.is_zero():
        lead_r, lead_rc = rem.sorted_terms()[0]
        exps = tuple(r - s for r, s in zip(lead_r, lead_d))
        if any(e < 0 for e in exps) or lead_rc % lead_dc != 0:
            raise ValueError(
                f"non-exact division: monomial {lead_r} (coeff {lead_rc}) "
                f"is not reducible by {lead_d} (coeff {lead_dc})"
            )
        c = lead_rc // lead_dc
        quot[exps] = quot.get(exps, 0) + c
        rem = rem - d * MVPoly(a.arity, {exps: c})
    return MVPoly(a.arity, quot)
