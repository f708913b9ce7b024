"""Verification sweeps over the library's identities, with machine-readable reports.

Each sweep exercises one family of checks for one prime and reports pass or
fail together with the number of cases covered and, on failure, a payload
that reproduces the offending input.  Randomized sweeps are seeded and
deterministic; JSON serialization excludes wall-clock timing so that equal
inputs give byte-equal reports.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import Counter
from dataclasses import dataclass, field

from . import diffword, sympoly, young
from .arith import Prime
from .errors import IdentityViolationError
from .ring import FpPoly, ModulusVariant, TruncPoly, poly_to_text
from .witt import (
    Derivation,
    c_b,
    c_c,
    check_ad_power,
    check_restricted_sum,
    g_series,
    normal_form_p_power,
    p_power,
)

THEOREM_IDS = (
    "t1",
    "t2",
    "t3",
    "t4",
    "exercise",
    "restricted-axioms",
    "normal-form",
    "gprime",
)

DEFAULT_PRIMES = {
    "t1": (2, 3, 5, 7),
    "t2": (2, 3, 5, 7, 11, 13),
    "t3": (2, 3, 5, 7),
    "t4": (2, 3, 5, 7, 11, 13),
    "exercise": (3, 5, 7, 11, 13),
    "restricted-axioms": (2, 3, 5, 7),
    "normal-form": (2, 3, 5, 7),
    "gprime": (2, 3, 5, 7),
}

T1_EXHAUSTIVE_MAX = 5   # p^p elements up to 3125 are swept in full
T1_SAMPLES = 500
PAIR_SAMPLES = 200
POLY_SAMPLES = 100
SAMPLE_DEGREE = 6


@dataclass
class VerificationReport:
    theorem: str
    prime: int
    variant: str | None
    passed: bool
    cases_checked: int
    counterexample: dict | None = None
    elapsed_ms: int = 0
    notes: dict = field(default_factory=dict)

    def to_json_obj(self, include_timing: bool = False) -> dict:
        obj = {
            "theorem": self.theorem,
            "prime": self.prime,
            "variant": self.variant,
            "passed": self.passed,
            "cases_checked": self.cases_checked,
            "counterexample": self.counterexample,
            "notes": self.notes,
        }
        if include_timing:
            obj["elapsed_ms"] = self.elapsed_ms
        return obj


def _random_trunc(rng, p: Prime, variant: ModulusVariant) -> TruncPoly:
    return TruncPoly([rng.randrange(p.p) for _ in range(p.p)], p, variant)


def _random_fppoly(rng, p: Prime, degree: int) -> FpPoly:
    return FpPoly([rng.randrange(p.p) for _ in range(degree + 1)], p)


def _t1_inputs(p: Prime, seed: int):
    if p.p <= T1_EXHAUSTIVE_MAX:
        return list(itertools.product(range(p.p), repeat=p.p))
    rng = random.Random(seed)
    return [tuple(rng.randrange(p.p) for _ in range(p.p)) for _ in range(T1_SAMPLES)]


def _check_t1(p: Prime, variants, seed: int):
    cases = 0
    inputs = _t1_inputs(p, seed)
    for variant in variants:
        for coeffs in inputs:
            f = TruncPoly(coeffs, p, variant)
            const_b = c_b(f)
            const_c = c_c(f)
            if const_b != const_c:
                return False, cases, {
                    "poly": poly_to_text(coeffs),
                    "variant": variant.value,
                    "reason": "chain constant differs from power-derivative constant",
                    "c_b": int(const_b),
                    "c_c": int(const_c),
                }
            powered = p_power(Derivation(f))
            if powered.f != f.scale(int(const_b)):
                return False, cases, {
                    "poly": poly_to_text(coeffs),
                    "variant": variant.value,
                    "reason": "p-th power is not C(f) * f d/dx",
                    "c_b": int(const_b),
                    "power": poly_to_text(powered.f.coeffs),
                }
            cases += 1
    return True, cases, None


def _check_t2(p: Prime):
    word = diffword.power_word(p.p - 1)
    leib = diffword.leibniz_power(p.p - 1)
    residual = word + leib
    cases = len(set(word.terms) | set(leib.terms))
    for orders, coeff in residual.sorted_terms():
        if coeff % p.p:
            return False, cases, {
                "orders": list(orders),
                "coeff": str(coeff),
                "reason": "residual coefficient nonzero mod p",
            }
    # symmetrized form: (p-1)! times the word expansion matches the power derivative
    resid2 = word.scale(math.factorial(p.p - 1)) + leib.scale(-1)
    if not resid2.is_zero_mod(p):
        bad = next(kv for kv in resid2.sorted_terms() if kv[1] % p.p)
        return False, cases, {
            "orders": list(bad[0]),
            "coeff": str(bad[1]),
            "reason": "factorial-weighted congruence fails",
        }
    return True, cases, None


def _check_t3(p: Prime, allow_large: bool):
    cases = math.factorial(p.p - 1)
    lhs = sympoly.lhs_sum(p, allow_large=allow_large)
    diff = lhs - sympoly.rhs_power(p)
    bad = diff.first_nonzero_mod(p)
    if bad is not None:
        return False, cases, {
            "exponents": list(bad[0]),
            "coeff": str(bad[1]),
            "reason": "permutation sum differs from the power mod p",
        }
    lin = sympoly.MVPoly.linear_sum(p.p - 1)
    pre = lhs * lin - sympoly.power_sum(p)
    bad = pre.first_nonzero_mod(p)
    if bad is not None:
        return False, cases, {
            "exponents": list(bad[0]),
            "coeff": str(bad[1]),
            "reason": "pre-cancellation congruence fails",
        }
    dream = sympoly.power_sum(p) - sympoly.rhs_power(p) * lin
    bad = dream.first_nonzero_mod(p)
    if bad is not None:
        return False, cases, {
            "exponents": list(bad[0]),
            "coeff": str(bad[1]),
            "reason": "characteristic-p power step fails",
        }
    return True, cases, None


def _check_t4(p: Prime):
    memo = {}
    diagrams = young.partitions(p.p - 1)
    for diagram in diagrams:
        value = young.d_value(diagram, memo)
        if value % p.p != 1:
            return False, len(diagrams), {
                "diagram": list(diagram.parts),
                "d": str(value),
                "residue": value % p.p,
            }
    return True, len(diagrams), None


def _check_exercise(p: Prime):
    memo = {}
    diagrams = young.partitions(p.p - 2)
    for diagram in diagrams:
        value = young.d_value(diagram, memo)
        if value % p.p != 1:
            return False, len(diagrams), {
                "diagram": list(diagram.parts),
                "d": str(value),
                "residue": value % p.p,
            }
    return True, len(diagrams), None


def _check_restricted(p: Prime, variant: ModulusVariant, seed: int, samples: int):
    rng = random.Random(seed)
    cases = 0
    if p.p <= T1_EXHAUSTIVE_MAX:
        ad_inputs = list(itertools.product(range(p.p), repeat=p.p))
    else:
        ad_inputs = [tuple(rng.randrange(p.p) for _ in range(p.p)) for _ in range(samples)]
    for coeffs in ad_inputs:
        g = Derivation(TruncPoly(coeffs, p, variant))
        if not check_ad_power(g):
            return False, cases, {
                "poly": poly_to_text(coeffs),
                "variant": variant.value,
                "reason": "ad of the p-th power differs from the p-th power of ad",
            }, {}
    cases += len(ad_inputs)

    pairs = [
        (_random_trunc(rng, p, variant), _random_trunc(rng, p, variant))
        for _ in range(samples)
    ]
    for gf, hf in pairs:
        g, h = Derivation(gf), Derivation(hf)
        if not check_restricted_sum(g, h, apply_to="g"):
            return False, cases, {
                "g": poly_to_text(gf.coeffs),
                "h": poly_to_text(hf.coeffs),
                "variant": variant.value,
                "reason": "p-th power sum rule fails with apply-to-g",
            }, {}
    cases += len(pairs)

    for gf, _ in pairs:
        g = Derivation(gf)
        base = p_power(g)
        for lam in range(p.p):
            scaled = p_power(g.scale(lam))
            if scaled.f != base.f.scale(pow(lam, p.p, p.p)):
                return False, cases, {
                    "poly": poly_to_text(gf.coeffs),
                    "lambda": lam,
                    "variant": variant.value,
                    "reason": "scaling axiom fails",
                }, {}
        cases += p.p

    # record which reading of the correction terms satisfies the sum rule
    probe = pairs[: min(10, len(pairs))]
    h_ok = all(
        check_restricted_sum(Derivation(gf), Derivation(hf), apply_to="h")
        for gf, hf in probe
    )
    notes = {
        "jacobson_convention": "apply-to-g",
        "apply_to_h_satisfies_sum": h_ok,
        "modulus": variant.value,
    }
    return True, cases, None, notes


def _check_normal_form(p: Prime, seed: int, samples: int):
    rng = random.Random(seed)
    cases = 0
    for _ in range(samples):
        f = _random_fppoly(rng, p, SAMPLE_DEGREE)
        op = normal_form_p_power(f)  # structure asserted internally
        fbar = TruncPoly.from_fppoly(f, ModulusVariant.XP)
        const = c_b(fbar)
        projected = TruncPoly.from_fppoly(op.coefficient(1), ModulusVariant.XP)
        if projected != fbar.scale(int(const)):
            return False, cases, {
                "poly": poly_to_text(f.coeffs),
                "reason": "first coefficient does not project to C(f) * f",
                "c_b": int(const),
            }
        cases += 1
    return True, cases, None


def _check_gprime(p: Prime, seed: int, samples: int):
    rng = random.Random(seed)
    cases = 0
    for _ in range(samples):
        f = _random_fppoly(rng, p, SAMPLE_DEGREE)
        series = g_series(f)  # zero derivative asserted internally
        if any(c and (i % p.p) for i, c in enumerate(series.coeffs)):
            return False, cases, {
                "poly": poly_to_text(f.coeffs),
                "series": poly_to_text(series.coeffs),
                "reason": "chain value supported outside multiples of p",
            }
        cases += 1
    return True, cases, None


def run_verify(
    theorem: str,
    p: Prime,
    *,
    variant: ModulusVariant | None = None,
    seed: int = 0,
    allow_large: bool = False,
    samples: int | None = None,
) -> VerificationReport:
    """Run one verification sweep and return its report.

    ``variant`` restricts quotient-ring sweeps to one modulus; the default
    covers both.  Size-bound refusals propagate as BoundExceededError.
    """
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    start = time.perf_counter()
    notes: dict = {}
    variants = [variant] if variant is not None else list(ModulusVariant)
    try:
        if theorem == "t1":
            passed, cases, ce = _check_t1(p, variants, seed)
        elif theorem == "t2":
            passed, cases, ce = _check_t2(p)
        elif theorem == "t3":
            passed, cases, ce = _check_t3(p, allow_large)
        elif theorem == "t4":
            passed, cases, ce = _check_t4(p)
        elif theorem == "exercise":
            passed, cases, ce = _check_exercise(p)
        elif theorem == "restricted-axioms":
            passed, cases, ce, notes = _check_restricted(
                p, variants[0], seed, samples or PAIR_SAMPLES
            )
        elif theorem == "normal-form":
            passed, cases, ce = _check_normal_form(p, seed, samples or POLY_SAMPLES)
        else:
            passed, cases, ce = _check_gprime(p, seed, samples or POLY_SAMPLES)
    except IdentityViolationError as exc:
        passed = False
        cases = 1
        ce = {"violation": str(exc), **exc.details}
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return VerificationReport(
        theorem=theorem,
        prime=p.p,
        variant=variant.value if variant is not None else None,
        passed=passed,
        cases_checked=max(cases, 1),
        counterexample=ce,
        elapsed_ms=elapsed,
        notes=notes,
    )


def run_suite(
    theorems=None,
    prime: int | None = None,
    *,
    variant: ModulusVariant | None = None,
    seed: int = 0,
    allow_large: bool = False,
    samples: int | None = None,
    max_prime: int | None = None,
) -> list[VerificationReport]:
    """Run a batch of sweeps; default is every theorem over its default primes."""
    from .arith import DEFAULT_MAX_PRIME

    bound = max_prime or DEFAULT_MAX_PRIME
    reports = []
    for theorem in theorems or THEOREM_IDS:
        primes = (prime,) if prime is not None else DEFAULT_PRIMES[theorem]
        for value in primes:
            reports.append(
                run_verify(
                    theorem,
                    Prime(value, max_allowed=bound),
                    variant=variant,
                    seed=seed,
                    allow_large=allow_large,
                    samples=samples,
                )
            )
    return reports


def run_cvalue(p: Prime, f: TruncPoly) -> dict:
    """C(f) via power extraction, the chain, and the derivative of the power."""
    const_b = int(c_b(f))
    const_c = int(c_c(f))
    powered = p_power(Derivation(f))
    if f.is_zero():
        const_a = 0
        extract_ok = powered.f.is_zero()
    else:
        pivot = next(i for i, c in enumerate(f.coeffs) if c)
        const_a = (powered.f.coeffs[pivot] * pow(f.coeffs[pivot], -1, p.p)) % p.p
        extract_ok = powered.f == f.scale(const_a)
    return {
        "prime": p.p,
        "variant": f.variant.value,
        "poly": poly_to_text(f.coeffs),
        "c_power": const_a,
        "c_b": const_b,
        "c_c": const_c,
        "agree": extract_ok and const_a == const_b == const_c,
    }


def jacobson_conventions(p: Prime, variant: ModulusVariant, seed: int = 0, samples: int = 50) -> dict:
    """Which argument of the iterated adjoint satisfies the sum rule, empirically."""
    rng = random.Random(seed)
    outcome = {}
    for mode in ("g", "h"):
        ok = True
        for _ in range(samples):
            g = Derivation(_random_trunc(rng, p, variant))
            h = Derivation(_random_trunc(rng, p, variant))
            if not check_restricted_sum(g, h, apply_to=mode):
                ok = False
                break
        outcome[mode] = ok
    return outcome


def d_table(n: int, p: Prime | None = None) -> list[dict]:
    """Rows for the d-value table of all partitions of n."""
    memo = {}
    rows = []
    for diagram in young.partitions(n):
        value = young.d_value(diagram, memo)
        row = {"diagram": list(diagram.parts), "d": str(value)}
        if p is not None:
            row["mod"] = value % p.p
        rows.append(row)
    return rows


def figure_payload() -> dict:
    """Data series for the report figures; exact values, no sampling."""
    dvalues = []
    for value in (3, 5, 7, 11, 13):
        p = Prime(value)
        memo = {}
        rows = [
            (str(diagram), young.d_value(diagram, memo))
            for diagram in young.partitions(value - 1)
        ]
        dvalues.append({"p": value, "rows": rows})

    p5 = Prime(5)
    word = diffword.power_word(4)
    leib = diffword.leibniz_power(4)
    labels, word_coeffs, leib_coeffs = [], [], []
    for orders, coeff in word.sorted_terms():
        labels.append(diffword.DiffPoly({orders: 1}).format())
        word_coeffs.append(coeff)
        leib_coeffs.append(leib.coefficient(orders))

    cdist = {}
    for variant in ModulusVariant:
        counts = Counter()
        for coeffs in itertools.product(range(5), repeat=5):
            counts[int(c_b(TruncPoly(coeffs, p5, variant)))] += 1
        cdist[variant.value] = dict(sorted(counts.items()))

    return {
        "dvalues": dvalues,
        "t2": {"p": 5, "labels": labels, "word": word_coeffs, "leibniz": leib_coeffs},
        "cdist": {"p": 5, "counts": cdist},
    }
