"""Exact arithmetic in the cyclotomic fields Q(zeta_m) for m = p^n.

Values are represented on the power basis 1, zeta, ..., zeta^(phi(m)-1)
modulo the m-th cyclotomic polynomial, with Fraction coefficients.  The
representation is canonical: a value is always stored at the lowest level
that contains it (plain rationals at level 0), so equality and hashing are
plain tuple comparisons.

A fixed prime p is assumed per computation; combining values from the
towers of two different primes raises DomainMismatchError.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

_ZERO = Fraction(0)
_ONE = Fraction(1)


class DomainMismatchError(ValueError):
    """Two operands live over different primes."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def phi_prime_power(p: int, n: int) -> int:
    """Euler phi of p^n (1 when n = 0)."""
    return 1 if n == 0 else p ** (n - 1) * (p - 1)


def prime_power_decompose(m: int) -> tuple[int, int]:
    """Write m = p^n with p prime; raises ValueError otherwise.

    Returns (p, n); m = 1 yields (0, 0) since the prime is then irrelevant.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if m == 1:
        return 0, 0
    p = None
    for d in range(2, isqrt(m) + 1):
        if m % d == 0:
            p = d
            break
    if p is None:
        return m, 1
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    if m != 1:
        raise ValueError("modulus is not a prime power")
    return p, n


# ---------------------------------------------------------------------------
# dense univariate polynomials over Fraction (internal, for field inversion)

def _pdeg(a: list[Fraction]) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    db = _pdeg(b)
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [_ZERO] * max(len(a) - db, 1)
    lead = b[db]
    for i in range(_pdeg(rem), db - 1, -1):
        if not rem[i]:
            continue
        c = rem[i] / lead
        quo[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    return quo, rem


def _pmulsub(s0: list[Fraction], q: list[Fraction], s1: list[Fraction]) -> list[Fraction]:
    # s0 - q*s1
    out = list(s0) + [_ZERO] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, qi in enumerate(q):
        if not qi:
            continue
        for j, sj in enumerate(s1):
            if sj:
                out[i + j] -= qi * sj
    return out


def _invert_mod(u: list[Fraction], modulus: list[Fraction]) -> list[Fraction]:
    """Inverse of u modulo an irreducible polynomial, by extended Euclid."""
    r0, s0 = list(u), [_ONE]
    r1, s1 = list(modulus), [_ZERO]
    while _pdeg(r1) >= 0:
        q, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _pmulsub(s0, q, s1)
    d = _pdeg(r0)
    if d != 0:
        raise ZeroDivisionError("element is not invertible")
    g = r0[0]
    return [c / g for c in s0]


# ---------------------------------------------------------------------------

class CycNum:
    """An element of Q(zeta_{p^level}), canonically demoted to its minimal level.

    Level 0 is the rational field; such values carry prime None and mix
    freely with any tower.
    """

    __slots__ = ("prime", "level", "coeffs")

    def __init__(self, prime: int | None, level: int, coeffs: tuple[Fraction, ...]):
        # assumes canonical data; use the factory methods below
        self.prime = prime
        self.level = level
        self.coeffs = coeffs

    # -- construction ------------------------------------------------------

    @classmethod
    def _make(cls, prime: int | None, level: int, coeffs: list[Fraction]) -> "CycNum":
        p = prime
        while level >= 1:
            if any(coeffs[i] for i in range(len(coeffs)) if i % p):
                break
            coeffs = [coeffs[i * p] for i in range(phi_prime_power(p, level - 1))]
            level -= 1
        if level == 0:
            return cls(None, 0, (coeffs[0],))
        return cls(p, level, tuple(coeffs))

    @classmethod
    def rational(cls, value) -> "CycNum":
        return cls(None, 0, (Fraction(value),))

    @classmethod
    def zero(cls) -> "CycNum":
        return _CYC_ZERO

    @classmethod
    def one(cls) -> "CycNum":
        return _CYC_ONE

    @classmethod
    def zeta(cls, p: int, level: int, exp: int = 1) -> "CycNum":
        """zeta_{p^level}^exp as a field element."""
        _check_prime(p)
        if level < 0:
            raise ValueError("level must be nonnegative")
        if level == 0:
            return cls.one()
        return cls._from_exponent_map(p, level, {exp: _ONE})

    @classmethod
    def from_coeffs(cls, p: int, level: int, coeffs) -> "CycNum":
        _check_prime(p)
        cs = [Fraction(c) for c in coeffs]
        if len(cs) != phi_prime_power(p, level):
            raise ValueError("coefficient vector has wrong length")
        return cls._make(p, level, cs)

    @classmethod
    def _from_exponent_map(cls, p: int, n: int, emap: dict[int, Fraction]) -> "CycNum":
        """Reduce a zeta-exponent/coefficient map modulo the cyclotomic polynomial.

        Uses Phi_{p^n}(x) = 1 + x^q + ... + x^{(p-1)q} with q = p^(n-1), so a
        single rewrite step lands every exponent below phi(p^n).
        """
        m = p ** n
        phi = phi_prime_power(p, n)
        q = p ** (n - 1)
        dense = [_ZERO] * phi
        for e, c in emap.items():
            if not c:
                continue
            e %= m
            if e < phi:
                dense[e] += c
            else:
                r = e - phi
                for i in range(p - 1):
                    dense[r + i * q] -= c
        return cls._make(p, n, dense)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.level == 0 and not self.coeffs[0]

    @property
    def is_rational(self) -> bool:
        return self.level == 0

    def as_fraction(self) -> Fraction:
        if self.level != 0:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def modulus(self) -> int:
        """The m of the minimal field Q(zeta_m) containing the value."""
        return 1 if self.level == 0 else self.prime ** self.level

    def coeffs_at_level(self, level: int, prime: int | None = None) -> tuple[Fraction, ...]:
        """Coefficient vector of the canonical embedding into Q(zeta_{p^level})."""
        p = self.prime if self.prime is not None else prime
        if p is None:
            raise ValueError("a prime is needed to lift a rational")
        if self.prime is not None and prime is not None and prime != self.prime:
            raise DomainMismatchError(f"value lives over p={self.prime}, not {prime}")
        if level < self.level:
            raise ValueError("cannot lower the level of an embedding")
        return tuple(self._lift(p, level))

    def raised(self, level: int, prime: int | None = None) -> "CycNum":
        """The image under the canonical embedding; equal to self by canonicity."""
        p = self.prime if self.prime is not None else prime
        if p is None:
            return self
        return CycNum._make(p, level, self._lift(p, level))

    def _lift(self, p: int, n: int) -> list[Fraction]:
        if self.level == n:
            return list(self.coeffs)
        f = p ** (n - self.level)
        out = [_ZERO] * phi_prime_power(p, n)
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * f] = c
        return out

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(value) -> "CycNum | None":
        if isinstance(value, CycNum):
            return value
        if isinstance(value, (int, Fraction)):
            return CycNum.rational(value)
        return None

    def _common(self, other: "CycNum") -> tuple[int | None, int]:
        if self.level and other.level and self.prime != other.prime:
            raise DomainMismatchError(
                f"mixed primes {self.prime} and {other.prime}")
        p = self.prime if self.prime is not None else other.prime
        return p, max(self.level, other.level)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, n = self._common(o)
        if n == 0:
            return CycNum.rational(self.coeffs[0] + o.coeffs[0])
        a, b = self._lift(p, n), o._lift(p, n)
        return CycNum._make(p, n, [x + y if y else x for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.prime, self.level, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p, n = self._common(o)
        if n == 0:
            return CycNum.rational(self.coeffs[0] * o.coeffs[0])
        if self.level == 0 or o.level == 0:
            scalar, val = (self.coeffs[0], o) if self.level == 0 else (o.coeffs[0], self)
            if not scalar:
                return CycNum.zero()
            return CycNum._make(val.prime, val.level,
                                [scalar * c if c else c for c in val.coeffs])
        a, b = self._lift(p, n), o._lift(p, n)
        emap: dict[int, Fraction] = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    k = i + j
                    emap[k] = emap.get(k, _ZERO) + x * y
        return CycNum._from_exponent_map(p, n, emap)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero:
            raise ZeroDivisionError("division by zero in the cyclotomic field")
        if self.level == 0:
            return CycNum.rational(1 / self.coeffs[0])
        p, n = self.prime, self.level
        phi = phi_prime_power(p, n)
        q = p ** (n - 1)
        modulus = [_ZERO] * (phi + 1)
        for i in range(p):
            modulus[i * q] = _ONE
        inv = _invert_mod(list(self.coeffs), modulus)
        return CycNum._from_exponent_map(p, n, {i: c for i, c in enumerate(inv)})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.level == 0:
            return self * CycNum.rational(1 / o.as_fraction())
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if self.level and exponent and self.term_count == 1:
            i = next(k for k, c in enumerate(self.coeffs) if c)
            return CycNum._from_exponent_map(
                self.prime, self.level, {i * exponent: self.coeffs[i] ** exponent})
        result = CycNum.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / display ----------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.level == o.level and self.prime == o.prime
                and self.coeffs == o.coeffs)

    def __hash__(self):
        return hash((self.prime, self.level, self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __str__(self):
        if self.level == 0:
            return str(self.coeffs[0])
        m = self.modulus()
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
                continue
            base = f"z({m})" if e == 1 else f"z({m})^{e}"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append("-" + base)
            else:
                parts.append(f"{c}*{base}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CycNum({str(self)!r})"

    @property
    def term_count(self) -> int:
        return sum(1 for c in self.coeffs if c)


_CYC_ZERO = CycNum(None, 0, (_ZERO,))
_CYC_ONE = CycNum(None, 0, (_ONE,))


def as_cycnum(value) -> CycNum:
    c = CycNum._coerce(value)
    if c is None:
        raise TypeError(f"cannot interpret {value!r} as a cyclotomic number")
    return c


def multiplicative_order(u: CycNum, bound: int) -> int | None:
    """Smallest t <= bound with u^t = 1, or None."""
    if u.is_zero:
        return None
    w = u
    for t in range(1, bound + 1):
        if w == _CYC_ONE:
            return t
        w = w * u
    return None


# ---------------------------------------------------------------------------

class RootOfUnity:
    """An element of the Prufer group C_{p^infty}: zeta_{p^level}^exp.

    Stored as the exponent exp/p^level in Z[1/p]/Z, in lowest terms (p does
    not divide exp unless the element is the identity).  Independent of any
    embedding into a concrete field; to_field realizes it as a CycNum.
    """

    __slots__ = ("prime", "level", "exp")

    def __init__(self, prime: int, level: int, exp: int):
        _check_prime(prime)
        if level < 0:
            raise ValueError("level must be nonnegative")
        m = prime ** level
        exp %= m
        if exp == 0:
            level = 0
        else:
            while exp % prime == 0:
                exp //= prime
                level -= 1
        self.prime = prime
        self.level = level
        self.exp = exp

    @classmethod
    def one(cls, p: int) -> "RootOfUnity":
        return cls(p, 0, 0)

    @classmethod
    def from_exponent(cls, p: int, exponent: Fraction) -> "RootOfUnity":
        """Build from the additive exponent j/p^n in Z[1/p]/Z."""
        _check_prime(p)
        exponent = Fraction(exponent)
        den = exponent.denominator
        level = 0
        while den % p == 0:
            den //= p
            level += 1
        if den != 1:
            raise ValueError(
                f"exponent denominator must be a power of {p}, got {exponent}")
        return cls(p, level, exponent.numerator % p ** level if level else 0)

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.exp, self.prime ** self.level)

    @property
    def order(self) -> int:
        return self.prime ** self.level

    @property
    def is_identity(self) -> bool:
        return self.level == 0

    def __mul__(self, other: "RootOfUnity"):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        if self.prime != other.prime:
            raise DomainMismatchError(
                f"mixed primes {self.prime} and {other.prime}")
        s = self.exponent + other.exponent
        return RootOfUnity.from_exponent(self.prime, s - int(s))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        s = self.exponent * e
        return RootOfUnity.from_exponent(self.prime, s - int(s))

    def inverse(self) -> "RootOfUnity":
        return self ** -1

    def to_field(self) -> CycNum:
        if self.level == 0:
            return CycNum.one()
        return CycNum.zeta(self.prime, self.level, self.exp)

    def __eq__(self, other):
        if not isinstance(other, RootOfUnity):
            return NotImplemented
        if self.level == 0 and other.level == 0:
            return True
        return (self.prime, self.level, self.exp) == (other.prime, other.level, other.exp)

    def __hash__(self):
        if self.level == 0:
            return hash((0, 0))
        return hash((self.prime, self.level, self.exp))

    def __str__(self):
        if self.level == 0:
            return "1"
        m = self.order
        return f"z({m})" if self.exp == 1 else f"z({m})^{self.exp}"

    def __repr__(self):
        return f"RootOfUnity(p={self.prime}, {self.exponent})"


def as_root_of_unity(u: CycNum, p: int) -> RootOfUnity | None:
    """Recognize u as an element of C_{p^infty}, or return None."""
    _check_prime(p)
    if u.is_rational:
        q = u.as_fraction()
        if q == 1:
            return RootOfUnity.one(p)
        if q == -1 and p == 2:
            return RootOfUnity(2, 1, 1)
        return None
    if u.prime != p:
        return None
    n = u.level
    z = CycNum.zeta(p, n)
    w = CycNum.one()
    for j in range(p ** n):
        if w == u:
            return RootOfUnity(p, n, j)
        w = w * z
    return None
