"""Young diagrams, the recursive weight d(J), and its coefficient correspondences.

A diagram is a weakly decreasing tuple of positive parts.  The weight d is
defined by d(empty) = 1 and, for J = (j_1, ..., j_m) of size N,

    d(J) = sum over positions s with j_s > j_{s+1} (taking j_{m+1} = 0) of
           (N - j_s + 1) * n_{j_s}(J) * d(J with j_s decremented),

where n_k(J) counts parts equal to k in J itself and a part decremented to
zero is deleted.  For every diagram of size p - 1 (and p - 2) the weight is
congruent to 1 mod p; the sweeps below check this directly.

The correspondence half of the module works in the splitting variables
u_1, ..., u_{p-1} with f = u_1...u_{p-1} and the derivation acting as the
sum of the partials (each factor differentiates to 1).  The coefficient of
u_1^(n-j_1)...u_m^(n-j_m) u_{m+1}^n...u_{p-1}^n in the n-step alternating
expansion equals d(J) exactly over Z, while the same coefficient in the
n-th derivative of f^n is the closed product n! C(n,j_1)...C(n,j_m).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Prime
from .errors import BoundExceededError
from .sympoly import MVPoly

DEFAULT_TERM_LIMIT = 10**7


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing tuple of positive integers; possibly empty."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(j) for j in self.parts))
        if any(j <= 0 for j in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @classmethod
    def of(cls, *parts: int) -> "YoungDiagram":
        return cls(tuple(parts))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicity(self, k: int) -> int:
        return sum(1 for j in self.parts if j == k)

    def __str__(self):
        return "(" + ",".join(str(j) for j in self.parts) + ")"


def partitions(n: int) -> list[YoungDiagram]:
    """All partitions of n, ascending lexicographic order of the part tuples."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for j in range(min(cap, remaining), 0, -1):
            prefix.append(j)
            rec(remaining - j, j, prefix)
            prefix.pop()

    rec(n, n, [])
    return [YoungDiagram(parts) for parts in sorted(out)]


def _d(parts, memo):
    if not parts:
        return 1
    cached = memo.get(parts)
    if cached is not None:
        return cached
    n = sum(parts)
    m = len(parts)
    total = 0
    for s in range(m):
        nxt = parts[s + 1] if s + 1 < m else 0
        if parts[s] > nxt:
            child = parts[:s] + ((parts[s] - 1,) if parts[s] > 1 else ()) + parts[s + 1:]
            total += (n - parts[s] + 1) * parts.count(parts[s]) * _d(child, memo)
    memo[parts] = total
    return total


def d_value(diagram: YoungDiagram, memo=None) -> int:
    """Exact recursive weight; pass a dict to share the memo across a sweep."""
    return _d(diagram.parts, {} if memo is None else memo)


def theorem4_check(p: Prime) -> bool:
    """d(J) = 1 mod p for every partition J of p - 1."""
    memo = {}
    return all(d_value(j, memo) % p.p == 1 for j in partitions(p.p - 1))


def exercise_check(p: Prime) -> bool:
    """d(J) = 1 mod p for every partition J of p - 2."""
    if p.p < 3:
        raise ValueError("exercise_check needs p >= 3")
    memo = {}
    return all(d_value(j, memo) % p.p == 1 for j in partitions(p.p - 2))


def _diff_sum(terms):
    # sum of partial derivatives in all variables
    out = {}
    for exps, c in terms.items():
        for i, e in enumerate(exps):
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1:]
                out[key] = out.get(key, 0) + c * e
    return out


def power_word_in_u(n: int, p: Prime, term_limit: int = DEFAULT_TERM_LIMIT) -> MVPoly:
    """The n-step alternating expansion at f = u_1...u_{p-1}.

    Built by the recursion P_k = derive(f * P_{k-1}) with P_0 = 1, where
    multiplying by f raises every exponent by one and derive sums the
    partials.  Aborts if the sparse term count exceeds ``term_limit``.
    """
    nvars = p.p - 1
    if not 1 <= n <= nvars:
        raise ValueError(f"n must be in 1..{nvars}, got {n}")
    terms = {(0,) * nvars: 1}
    for _ in range(n):
        terms = {tuple(e + 1 for e in exps): c for exps, c in terms.items()}
        terms = _diff_sum(terms)
        if len(terms) > term_limit:
            raise BoundExceededError(
                f"term count {len(terms)} exceeds the limit {term_limit}"
            )
    return MVPoly(nvars, terms)


def derivative_power_in_u(n: int, p: Prime) -> MVPoly:
    """The n-th derivative of f^n at f = u_1...u_{p-1}, exact over Z."""
    nvars = p.p - 1
    if not 1 <= n <= nvars:
        raise ValueError(f"n must be in 1..{nvars}, got {n}")
    terms = {(n,) * nvars: 1}
    for _ in range(n):
        terms = _diff_sum(terms)
    return MVPoly(nvars, terms)


def designated_exponents(diagram: YoungDiagram, n: int, nvars: int) -> tuple[int, ...]:
    """Exponent vector u_1^(n-j_1)...u_m^(n-j_m) u_{m+1}^n...u_{p-1}^n."""
    if diagram.length > nvars:
        raise ValueError("diagram has more parts than variables")
    if diagram.parts and diagram.parts[0] > n:
        raise ValueError("largest part exceeds n")
    return tuple(n - j for j in diagram.parts) + (n,) * (nvars - diagram.length)


def coeff_correspondence_check(n: int, p: Prime) -> bool:
    """Designated coefficients of the alternating expansion equal d(J) over Z."""
    nvars = p.p - 1
    poly = power_word_in_u(n, p)
    memo = {}
    for diagram in partitions(n):
        if diagram.length > nvars:
            continue
        exps = designated_exponents(diagram, n, nvars)
        if poly.coefficient(exps) != d_value(diagram, memo):
            return False
    return True


def multinomial_coeff(diagram: YoungDiagram, n: int) -> int:
    """n! C(n,j_1)...C(n,j_m), the designated coefficient of the derivative power."""
    if diagram.parts and diagram.parts[0] > n:
        raise ValueError("largest part exceeds n")
    out = math.factorial(n)
    for j in diagram.parts:
        out *= math.comb(n, j)
    return out
