"""Derivations of the truncated rings and of F_p[x], with their p-th power structure.

A derivation is f * d/dx for a coefficient polynomial f, acting on its ring
by g |-> f g'.  Over the quotient ring A (dimension p) the p-fold
composition of a derivation is again a derivation, computed here by raw
matrix composition on the monomial basis and then certified: the composite
must agree columnwise with (its value on x) * d/dx, and Leibniz is
re-checked on products with x and on random pairs.  The closed forms
relating the composite to the alternating chain value C(f) are assertions
layered on top, never the definition.

Over F_p[x] the p-fold composition is normal-ordered as a differential
operator sum F_1 D + F_2 D^2 + ... + F_p D^p; the interior coefficients
must vanish, F_p must be f^p, and F_1 must be f times the chain value.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import FpScalar, inv_mod
from .errors import IdentityViolationError
from .ring import FpPoly, TruncPoly, derive_trunc, mul_trunc, scale_seq, shift_trunc

LEIBNIZ_RANDOM_PAIRS = 32


class Derivation:
    """A vector field f * d/dx over the quotient ring A or over F_p[x]."""

    __slots__ = ("f",)

    def __init__(self, f):
        if not isinstance(f, (TruncPoly, FpPoly)):
            raise TypeError("coefficient must be a TruncPoly or FpPoly")
        self.f = f

    @property
    def realm(self) -> str:
        return "A" if isinstance(self.f, TruncPoly) else "poly"

    def apply(self, g):
        """Action on a ring element: g |-> f g'."""
        return self.f * g.derive()

    def __add__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.f + other.f)

    def __sub__(self, other):
        if not isinstance(other, Derivation):
            return NotImplemented
        return Derivation(self.f - other.f)

    def scale(self, k) -> "Derivation":
        return Derivation(self.f.scale(k))

    def is_zero(self) -> bool:
        return self.f.is_zero()

    def __eq__(self, other):
        return isinstance(other, Derivation) and self.f == other.f

    def __repr__(self):
        return f"Derivation({self.f!r})"


def bracket(a: Derivation, b: Derivation) -> Derivation:
    """Commutator [f D, g D] = (f g' - g f') D."""
    return Derivation(a.f * b.f.derive() - b.f * a.f.derive())


# -- raw matrix helpers over the monomial basis of A --------------------------

def _action_columns(fc, p, fold):
    # column j = image of x^j under f d/dx = j * x^(j-1) * f
    cols = [(0,) * p]
    for j in range(1, p):
        cols.append(scale_seq(shift_trunc(fc, j - 1, p, fold), j, p))
    return cols


def _mat_vec(cols, v, p):
    out = [0] * p
    for j, vj in enumerate(v):
        if vj:
            col = cols[j]
            for i in range(p):
                out[i] += vj * col[i]
    return tuple(c % p for c in out)


def _compose(cols_a, cols_b, p):
    # matrix of (a after b): apply b's columns through a
    return [_mat_vec(cols_a, col, p) for col in cols_b]


def p_power(d: Derivation, *, rng=None) -> Derivation:
    """p-fold composition of the action, certified to be a derivation again.

    The composite operator T is compared columnwise with g * d/dx for
    g = T(x); Leibniz is then re-checked on the products (x, x^k) and on
    32 random pairs as defense in depth.  Any mismatch raises
    IdentityViolationError, which no input should trigger.
    """
    if not isinstance(d.f, TruncPoly):
        raise ValueError("p_power requires a derivation of the quotient ring A")
    f = d.f
    p = f.prime.p
    fold = f.variant.fold
    fc = f.coeffs
    cols = _action_columns(fc, p, fold)
    power = cols
    for _ in range(p - 1):
        power = _compose(cols, power, p)

    g = power[1]  # T(x) determines the candidate derivation
    expected = _action_columns(g, p, fold)
    for j in range(p):
        if power[j] != expected[j]:
            raise IdentityViolationError(
                "p-fold composition is not the derivation determined by its value on x",
                details={"f": list(fc), "p": p, "variant": f.variant.value, "column": j},
            )

    rng = rng or random.Random(0)
    pairs = [((0,) * j + (1,) + (0,) * (p - 1 - j)) for j in range(p)]
    checks = [(_x_vec(p), b) for b in pairs]
    checks += [
        (tuple(rng.randrange(p) for _ in range(p)), tuple(rng.randrange(p) for _ in range(p)))
        for _ in range(LEIBNIZ_RANDOM_PAIRS)
    ]
    for a, b in checks:
        ab = mul_trunc(a, b, p, fold)
        lhs = _mat_vec(power, ab, p)
        rhs = tuple(
            (x + y) % p
            for x, y in zip(
                mul_trunc(a, _mat_vec(power, b, p), p, fold),
                mul_trunc(_mat_vec(power, a, p), b, p, fold),
            )
        )
        if lhs != rhs:
            raise IdentityViolationError(
                "p-fold composition fails the Leibniz re-check",
                details={"f": list(fc), "p": p, "variant": f.variant.value,
                         "a": list(a), "b": list(b)},
            )
    return Derivation(f._wrap(g))


def _x_vec(p):
    return (0, 1) + (0,) * (p - 2)


def _word_chain(f, n: int):
    """Value of the alternating derive/multiply word of length n at f.

    Rightmost symbol first: start from f, derive, then n-1 rounds of
    multiply-by-f and derive.  Works for TruncPoly and FpPoly alike.
    """
    w = f.derive()
    for _ in range(n - 1):
        w = (f * w).derive()
    return w


def c_b(f: TruncPoly) -> FpScalar:
    """The alternating chain with p-1 derivatives; must land in the constants."""
    w = _word_chain(f, f.prime.p - 1)
    if not w.is_constant():
        raise IdentityViolationError(
            "alternating chain value is not constant",
            details={"f": list(f.coeffs), "p": f.prime.p, "variant": f.variant.value},
        )
    return w.constant()


def c_c(f: TruncPoly) -> FpScalar:
    """Minus the (p-1)-st derivative of f^(p-1); must land in the constants."""
    w = f ** (f.prime.p - 1)
    for _ in range(f.prime.p - 1):
        w = w.derive()
    if not w.is_constant():
        raise IdentityViolationError(
            "derivative of the power is not constant",
            details={"f": list(f.coeffs), "p": f.prime.p, "variant": f.variant.value},
        )
    return -w.constant()


@dataclass(frozen=True)
class LambdaDerivPoly:
    """Polynomial in a formal parameter whose coefficients are derivations."""

    coeffs: tuple[Derivation, ...]

    def coefficient(self, i: int) -> Derivation:
        return self.coeffs[i]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def ad_lambda_expansion(g: Derivation, h: Derivation, arg: Derivation) -> LambdaDerivPoly:
    """(ad(lambda g + h))^(p-1) applied to arg, expanded in powers of lambda."""
    p = g.f.prime.p
    coeffs = [arg.f]
    zero = g.f - g.f
    for _ in range(p - 1):
        nxt = []
        for j in range(len(coeffs) + 1):
            term = zero
            if j < len(coeffs):
                term = term + (h.f * coeffs[j].derive() - coeffs[j] * h.f.derive())
            if j >= 1:
                term = term + (g.f * coeffs[j - 1].derive() - coeffs[j - 1] * g.f.derive())
            nxt.append(term)
        coeffs = nxt
    return LambdaDerivPoly(tuple(Derivation(c) for c in coeffs))


def jacobson_s(g: Derivation, h: Derivation, *, apply_to: str = "g") -> list[Derivation]:
    """The correction terms s_1, ..., s_{p-1} of the p-th power sum rule.

    s_i is 1/i times the lambda^(i-1) coefficient of the iterated adjoint
    of lambda g + h applied to the argument selected by ``apply_to``.
    Applying to g reproduces the sum rule; applying to h is kept selectable
    because the alternative reading fails it (see check_restricted_sum).
    """
    if apply_to not in ("g", "h"):
        raise ValueError("apply_to must be 'g' or 'h'")
    p = g.f.prime
    expansion = ad_lambda_expansion(g, h, g if apply_to == "g" else h)
    out = []
    for i in range(1, p.p):
        inv_i = inv_mod(FpScalar(i, p))
        out.append(expansion.coefficient(i - 1).scale(inv_i))
    return out


def check_restricted_sum(g: Derivation, h: Derivation, *, apply_to: str = "g") -> bool:
    """(g + h)^[p] = g^[p] + h^[p] + sum of the correction terms."""
    total = p_power(g + h)
    acc = p_power(g).f + p_power(h).f
    for s in jacobson_s(g, h, apply_to=apply_to):
        acc = acc + s.f
    return total.f == acc


def check_ad_power(g: Derivation) -> bool:
    """ad(g^[p]) equals (ad g)^p on the monomial basis, and [g^[p], g] = 0."""
    f = g.f
    if not isinstance(f, TruncPoly):
        raise ValueError("check_ad_power requires a derivation of A")
    p = f.prime.p
    fold = f.variant.fold
    ad_g = _ad_columns(f.coeffs, p, fold)
    power = ad_g
    for _ in range(p - 1):
        power = _compose(ad_g, power, p)
    gp = p_power(g)
    ad_gp = _ad_columns(gp.f.coeffs, p, fold)
    return list(power) == list(ad_gp) and bracket(gp, g).is_zero()


def _ad_columns(gc, p, fold):
    # column k = coefficient vector of [g D, x^k D] = (k x^(k-1) g - x^k g') D
    dgc = derive_trunc(gc, p)
    cols = []
    for k in range(p):
        pos = scale_seq(shift_trunc(gc, k - 1, p, fold), k, p) if k else (0,) * p
        neg = shift_trunc(dgc, k, p, fold)
        cols.append(tuple((a - b) % p for a, b in zip(pos, neg)))
    return cols


@dataclass(frozen=True)
class DiffOperator:
    """Normal-ordered differential operator: coefficient k is attached to D^(k+1)."""

    coeffs: tuple[FpPoly, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, k: int) -> FpPoly:
        """The polynomial in front of D^k, 1-based."""
        return self.coeffs[k - 1]

    def apply(self, g: FpPoly) -> FpPoly:
        acc = FpPoly.zero(g.prime)
        dg = g
        for fk in self.coeffs:
            dg = dg.derive()
            acc = acc + fk * dg
        return acc


def normal_form_p_power(f: FpPoly) -> DiffOperator:
    """(f D)^p over F_p[x], normal ordered, with its structure asserted.

    The interior coefficients F_2, ..., F_{p-1} must vanish, F_p must be
    f^p, and F_1 must be f times the alternating chain value; violations
    raise IdentityViolationError and should never occur.
    """
    if not isinstance(f, FpPoly):
        raise ValueError("normal_form_p_power works over the full polynomial ring")
    p = f.prime.p
    coeffs = [f]
    for _ in range(p - 1):
        nxt = []
        for k in range(len(coeffs) + 1):
            term = FpPoly.zero(f.prime)
            if k < len(coeffs):
                term = term + f * coeffs[k].derive()
            if k >= 1:
                term = term + f * coeffs[k - 1]
            nxt.append(term)
        coeffs = nxt
    details = {"f": list(f.coeffs), "p": p}
    for k in range(1, p - 1):
        if not coeffs[k].is_zero():
            raise IdentityViolationError(
                f"interior coefficient at order {k + 1} is nonzero", details=details
            )
    if coeffs[p - 1] != f**p:
        raise IdentityViolationError("top coefficient differs from f^p", details=details)
    if p > 1 and coeffs[0] != f * _word_chain(f, p - 1):
        raise IdentityViolationError(
            "first coefficient differs from f times the chain value", details=details
        )
    return DiffOperator(tuple(coeffs))


def g_series(f: FpPoly) -> FpPoly:
    """The alternating chain value over F_p[x]; its derivative must vanish."""
    w = _word_chain(f, f.prime.p - 1)
    if not w.derive().is_zero():
        raise IdentityViolationError(
            "chain value has nonzero derivative",
            details={"f": list(f.coeffs), "p": f.prime.p},
        )
    return w
