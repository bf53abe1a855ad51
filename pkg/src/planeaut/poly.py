"""Sparse bivariate polynomials over the cyclotomic coefficient field.

Terms are stored as a map from (deg_x1, deg_x2) to a nonzero CycNum.  The
zero polynomial has degree NEG_INF so that deg(f*g) = deg f + deg g holds
without special cases.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycNum, as_cycnum

Monomial = tuple[int, int]

NEG_INF = float("-inf")


def grlex_key(m: Monomial) -> tuple[int, int]:
    """Sort key for graded lexicographic order with x1 > x2."""
    return (m[0] + m[1], m[0])


_PRINT_KEY = lambda m: (m[0] + m[1], m[1])  # ascending degree, x1-part first


class SparsePoly:
    """Polynomial in x1, x2 with exact cyclotomic coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Monomial, CycNum] | None = None):
        clean: dict[Monomial, CycNum] = {}
        if terms:
            for mono, coeff in terms.items():
                c = as_cycnum(coeff)
                if c.is_zero:
                    continue
                e1, e2 = mono
                if e1 < 0 or e2 < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                clean[(e1, e2)] = c
        self._terms = clean

    # -- construction --------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def constant(cls, c) -> "SparsePoly":
        return cls({(0, 0): as_cycnum(c)})

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls.constant(1)

    @classmethod
    def x1(cls) -> "SparsePoly":
        return cls({(1, 0): CycNum.one()})

    @classmethod
    def x2(cls) -> "SparsePoly":
        return cls({(0, 1): CycNum.one()})

    @classmethod
    def monomial(cls, e1: int, e2: int, coeff=1) -> "SparsePoly":
        return cls({(e1, e2): as_cycnum(coeff)})

    # -- queries --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self):
        """Iterator over (monomial, coefficient) pairs, canonical order."""
        for mono in sorted(self._terms, key=grlex_key):
            yield mono, self._terms[mono]

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(e1 + e2 for e1, e2 in self._terms)

    def coefficient(self, e1: int, e2: int) -> CycNum:
        return self._terms.get((e1, e2), CycNum.zero())

    def involves_x1(self) -> bool:
        return any(e1 for e1, _ in self._terms)

    def involves_x2(self) -> bool:
        return any(e2 for _, e2 in self._terms)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def constant_value(self) -> CycNum:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coefficient(0, 0)

    def x2_profile(self) -> dict[int, CycNum]:
        """Map degree -> coefficient for a polynomial in x2 alone."""
        if self.involves_x1():
            raise ValueError(f"{self} involves x1")
        return {e2: c for (_, e2), c in self._terms.items()}

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in o._terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(mono, None)
            else:
                out[mono] = s
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            c = as_cycnum(other)
            if c.is_zero:
                return SparsePoly.zero()
            return _raw({m: t * c for m, t in self._terms.items()})
        if not isinstance(other, SparsePoly):
            return NotImplemented
        out: dict[Monomial, CycNum] = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                mono = (a1 + b1, a2 + b2)
                s = out.get(mono)
                prod = c * d
                s = prod if s is None else s + prod
                if s.is_zero:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        if len(self._terms) == 1 and e:
            ((e1, e2), c), = self._terms.items()
            return _raw({(e1 * e, e2 * e): c ** e})
        result = SparsePoly.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    # -- substitution -----------------------------------------------------

    def substitute(self, s1: "SparsePoly", s2: "SparsePoly") -> "SparsePoly":
        """Evaluate self at x1 = s1, x2 = s2 by exact expansion.

        Powers of s1 and s2 are memoized; the conjugation pipelines repeatedly
        substitute monomials of large x2-degree, so cache hits dominate.
        """
        cache1: dict[int, SparsePoly] = {0: SparsePoly.one(), 1: s1}
        cache2: dict[int, SparsePoly] = {0: SparsePoly.one(), 1: s2}
        acc = SparsePoly.zero()
        for (e1, e2), c in self._terms.items():
            part = _cached_pow(s1, e1, cache1) * _cached_pow(s2, e2, cache2)
            acc = acc + part * c
        return acc

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other):
        o = _coerce_poly(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_PRINT_KEY):
            parts.append(_term_str(mono, self._terms[mono]))
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePoly({str(self)!r})"


def _raw(terms: dict[Monomial, CycNum]) -> SparsePoly:
    p = SparsePoly.__new__(SparsePoly)
    p._terms = terms
    return p


def _coerce_poly(value) -> SparsePoly | None:
    if isinstance(value, SparsePoly):
        return value
    if isinstance(value, (int, Fraction, CycNum)):
        c = as_cycnum(value)
        return SparsePoly.zero() if c.is_zero else _raw({(0, 0): c})
    return None


def _cached_pow(base: SparsePoly, e: int, cache: dict[int, SparsePoly]) -> SparsePoly:
    hit = cache.get(e)
    if hit is not None:
        return hit
    if len(base._terms) == 1:
        out = base ** e
    else:
        half = _cached_pow(base, e // 2, cache)
        out = half * half
        if e & 1:
            out = out * base
    cache[e] = out
    return out


def _mono_str(mono: Monomial) -> str:
    e1, e2 = mono
    parts = []
    if e1:
        parts.append("x1" if e1 == 1 else f"x1^{e1}")
    if e2:
        parts.append("x2" if e2 == 1 else f"x2^{e2}")
    return "*".join(parts)


def _term_str(mono: Monomial, coeff: CycNum) -> str:
    if mono == (0, 0):
        return str(coeff)
    ms = _mono_str(mono)
    if coeff == 1:
        return ms
    if coeff == -1:
        return "-" + ms
    cs = str(coeff)
    if not coeff.is_rational and coeff.term_count > 1:
        cs = f"({cs})"
    return f"{cs}*{ms}"
