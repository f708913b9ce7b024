"""Symbolic expansion of words in the alphabet {D, F} into derivative monomials.

A word such as "DFDDF" is read right to left: the trailing F is the symbol f
itself, every further F multiplies by f, and every D applies the formal
Leibniz derivative.  The result is an exact integer combination of monomials
f^(k1)...f^(km), stored as a map from the ascending-sorted multiset of
derivative orders to an arbitrary-precision coefficient.

A variant with distinguishable symbols f_1, ..., f_m (orders tracked per
position, unsorted) supports the correspondence with products of nested
partial sums of commuting variables.
"""

from __future__ import annotations

from .arith import Prime
from .ring import FpPoly


def _leibniz_terms(orders):
    # one derivative step on a single monomial, pre-merge
    for i in range(len(orders)):
        bumped = list(orders)
        bumped[i] += 1
        bumped.sort()
        yield tuple(bumped)


class DiffPoly:
    """Integer combination of derivative monomials of a single symbol."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        tidy = {}
        for orders, coeff in (terms or {}).items():
            if coeff:
                key = tuple(sorted(orders))
                tidy[key] = tidy.get(key, 0) + coeff
                if tidy[key] == 0:
                    del tidy[key]
        self.terms = tidy

    @classmethod
    def zero(cls) -> "DiffPoly":
        return cls()

    def coefficient(self, orders) -> int:
        return self.terms.get(tuple(sorted(orders)), 0)

    def __add__(self, other):
        if not isinstance(other, DiffPoly):
            return NotImplemented
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) + c
        return DiffPoly(merged)

    def scale(self, k: int) -> "DiffPoly":
        return DiffPoly({orders: c * k for orders, c in self.terms.items()})

    def derive(self) -> "DiffPoly":
        out = {}
        for orders, c in self.terms.items():
            for key in _leibniz_terms(orders):
                out[key] = out.get(key, 0) + c
        return DiffPoly(out)

    def multiply_symbol(self) -> "DiffPoly":
        """Multiply by the undifferentiated symbol (adds a 0 to each multiset)."""
        return DiffPoly({(0,) + orders: c for orders, c in self.terms.items()})

    def is_zero_mod(self, p: Prime) -> bool:
        return all(c % p.p == 0 for c in self.terms.values())

    def sorted_terms(self):
        """Terms in display order: lowest derivatives written first."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def to_json_obj(self):
        return [
            {"orders": list(orders), "coeff": str(coeff)}
            for orders, coeff in self.sorted_terms()
        ]

    def __eq__(self, other):
        return isinstance(other, DiffPoly) and self.terms == other.terms

    def __repr__(self):
        return f"DiffPoly({self.terms})"

    def format(self) -> str:
        """Human-readable form, e.g. "f'f'' + ff'''" or "11f(f')^2f''"."""
        if not self.terms:
            return "0"
        chunks = []
        for orders, coeff in self.sorted_terms():
            body = _format_monomial(orders)
            mag = abs(coeff)
            text = body if mag == 1 and body else f"{mag}{body}"
            if not chunks:
                chunks.append(text if coeff > 0 else f"-{text}")
            else:
                chunks.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(chunks)


def _format_monomial(orders) -> str:
    parts = []
    i = 0
    orders = tuple(orders)
    while i < len(orders):
        k = orders[i]
        j = i
        while j < len(orders) and orders[j] == k:
            j += 1
        count = j - i
        if k == 0:
            token = "f"
            parts.append(token if count == 1 else f"f^{count}")
        else:
            token = "f" + "'" * k if k <= 3 else f"f^({k})"
            parts.append(token if count == 1 else f"({token})^{count}")
        i = j
    return "".join(parts)


def validate_word(word: str) -> str:
    if not word or any(ch not in "DF" for ch in word):
        bad = next((i for i, ch in enumerate(word) if ch not in "DF"), len(word))
        raise ValueError(f"malformed word {word!r}: unexpected character at position {bad}")
    if word[-1] != "F":
        raise ValueError(f"malformed word {word!r}: must end with F")
    return word


def expand_word(word: str) -> DiffPoly:
    """Expand a word over {D, F} (ending in F) into derivative monomials."""
    validate_word(word)
    acc = DiffPoly({(0,): 1})
    for ch in reversed(word[:-1]):
        acc = acc.derive() if ch == "D" else acc.multiply_symbol()
    return acc


def power_word(n: int) -> DiffPoly:
    """Expansion of the alternating word (DF)^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return expand_word("DF" * n)


def leibniz_power(n: int) -> DiffPoly:
    """Expansion of D^n F^n, i.e. the n-th derivative of the n-th power."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return expand_word("D" * n + "F" * n)


def theorem2_check(p: Prime) -> bool:
    """Coefficientwise congruence (DF)^(p-1) + D^(p-1)F^(p-1) = 0 mod p."""
    return theorem2_residual(p).is_zero_mod(p)


def theorem2_residual(p: Prime) -> DiffPoly:
    n = p.p - 1
    if n == 0:
        return DiffPoly.zero()
    return power_word(n) + leibniz_power(n)


class MultiDiffPoly:
    """Integer combination of monomials f_1^(k1)...f_m^(km), symbols kept apart."""

    __slots__ = ("terms", "arity")

    def __init__(self, arity: int, terms=None):
        self.arity = arity
        tidy = {}
        for orders, coeff in (terms or {}).items():
            if len(orders) != arity:
                raise ValueError("order vector with wrong arity")
            if coeff:
                tidy[tuple(orders)] = tidy.get(tuple(orders), 0) + coeff
                if tidy[tuple(orders)] == 0:
                    del tidy[tuple(orders)]
        self.terms = tidy

    def coefficient(self, orders) -> int:
        return self.terms.get(tuple(orders), 0)

    def __add__(self, other):
        if not isinstance(other, MultiDiffPoly):
            return NotImplemented
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) + c
        return MultiDiffPoly(self.arity, merged)

    def scale(self, k: int) -> "MultiDiffPoly":
        return MultiDiffPoly(self.arity, {o: c * k for o, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, MultiDiffPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"MultiDiffPoly(arity={self.arity}, {self.terms})"


def expand_multi(m: int, perm=None) -> MultiDiffPoly:
    """Expand D f_s(m) D f_s(m-1) ... D f_s(1) with distinguishable symbols.

    ``perm`` is a 1-based permutation of {1..m} giving the symbol order s;
    identity by default.  Each symbol occurs exactly once, so a monomial is
    the vector of derivative orders indexed by symbol.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if perm is None:
        perm = tuple(range(1, m + 1))
    if sorted(perm) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {perm!r}")
    base = [0] * m
    terms = {tuple(base): 1}
    introduced = [perm[0] - 1]
    # innermost: D f_s(1); then repeatedly multiply by the next symbol and derive
    terms = _derive_multi(terms, introduced)
    for idx in perm[1:]:
        introduced.append(idx - 1)
        terms = _derive_multi(terms, introduced)
    return MultiDiffPoly(m, terms)


def _derive_multi(terms, introduced):
    out = {}
    for orders, c in terms.items():
        for pos in introduced:
            bumped = list(orders)
            bumped[pos] += 1
            key = tuple(bumped)
            out[key] = out.get(key, 0) + c
    return out


def merge_symbols(mdp: MultiDiffPoly) -> DiffPoly:
    """Identify all symbols, turning each order vector into a sorted multiset."""
    out = {}
    for orders, c in mdp.terms.items():
        key = tuple(sorted(orders))
        out[key] = out.get(key, 0) + c
    return DiffPoly(out)


def permute_symbols(mdp: MultiDiffPoly, perm) -> MultiDiffPoly:
    """Relabel symbol i as symbol perm[i] (1-based)."""
    if sorted(perm) != list(range(1, mdp.arity + 1)):
        raise ValueError(f"not a permutation of 1..{mdp.arity}: {perm!r}")
    out = {}
    for orders, c in mdp.terms.items():
        new = [0] * mdp.arity
        for i, k in enumerate(orders):
            new[perm[i] - 1] = k
        out[tuple(new)] = out.get(tuple(new), 0) + c
    return MultiDiffPoly(mdp.arity, out)


def evaluate(dp: DiffPoly, f: FpPoly) -> FpPoly:
    """Substitute a concrete polynomial for the symbol, exactly over F_p[x]."""
    if not dp.terms:
        return FpPoly.zero(f.prime)
    top = max(k for orders in dp.terms for k in orders)
    derivs = [f]
    for _ in range(top):
        derivs.append(derivs[-1].derive())
    acc = FpPoly.zero(f.prime)
    for orders, coeff in dp.terms.items():
        term = FpPoly.one(f.prime)
        for k in orders:
            term = term * derivs[k]
        acc = acc + term.scale(coeff % f.prime.p)
    return acc


def apply_word(word: str, f: FpPoly) -> FpPoly:
    """Apply a word directly to a concrete polynomial (multiply/derive chain)."""
    validate_word(word)
    acc = None
    for ch in reversed(word):
        if ch == "F":
            acc = f if acc is None else f * acc
        else:
            acc = acc.derive()
    return acc
