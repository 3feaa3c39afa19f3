"""Dense univariate polynomials and rational functions over F_p or Q.

A polynomial a_0 + a_1 x + ... + a_n x^n is stored as the coefficient
tuple (a_0, a_1, ..., a_n) with a nonzero last entry; the zero
polynomial is the empty tuple.  Coefficients are ints in {0, ..., p-1}
for positive characteristic and gmpy2 rationals for characteristic 0.

All values are immutable; every operation returns a fresh object, so
instances can be shared freely across threads.

Polynomial gcds are monic.  Over Q they are computed by a small-prime
modular algorithm with verification by trial division, which keeps the
large inputs produced by operator arithmetic tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    AllZeroError,
    FieldMismatchError,
    NotAUnitError,
    OreError,
    ZeroInputError,
)

try:
    from gmpy2 import mpq, mpz
    from gmpy2 import gcd as _int_gcd
except ImportError:  # pragma: no cover - gmpy2 is a hard dependency in practice
    from fractions import Fraction as mpq
    from math import gcd as _int_gcd

    mpz = int


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: F_p for a prime characteristic, Q for 0."""

    characteristic: int

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not is_prime(p)):
            raise OreError(f"characteristic must be 0 or a prime, got {p}")

    @property
    def p(self) -> int:
        return self.characteristic

    def element(self, v):
        """Canonical field element from an int, rational or string like '3/4'."""
        p = self.characteristic
        if p:
            if isinstance(v, str):
                if "/" in v:
                    a, b = v.split("/")
                    return int(a) * pow(int(b), -1, p) % p
                v = int(v)
            if not isinstance(v, int):
                num, den = v.numerator, v.denominator
                return int(num) * pow(int(den) % p, -1, p) % p
            return v % p
        return mpq(v)

    def zero(self):
        return 0 if self.characteristic else mpq(0)

    def one(self):
        return 1 if self.characteristic else mpq(1)

    def neg(self, a):
        return -a % self.characteristic if self.characteristic else -a

    def inv(self, a):
        p = self.characteristic
        if p:
            if a % p == 0:
                raise ZeroDivisionError("inverse of zero field element")
            return pow(a, -1, p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return 1 / a

    def mul(self, a, b):
        return a * b % self.characteristic if self.characteristic else a * b

    def add(self, a, b):
        return (a + b) % self.characteristic if self.characteristic else a + b


QQ = FieldSpec(0)

CoeffLike = Union[int, str, "mpq"]


class Poly:
    """Dense univariate polynomial over a FieldSpec."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[CoeffLike], *, _raw=False):
        object.__setattr__(self, "field", field)
        if _raw:
            object.__setattr__(self, "coeffs", tuple(coeffs))
            return
        elem = field.element
        lst = [elem(c) for c in coeffs]
        while lst and not lst[-1]:
            lst.pop()
        object.__setattr__(self, "coeffs", tuple(lst))

    def __setattr__(self, *args):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "Poly":
        return cls(field, (), _raw=True)

    @classmethod
    def one(cls, field: FieldSpec) -> "Poly":
        return cls(field, (field.one(),), _raw=True)

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def x(cls, field: FieldSpec) -> "Poly":
        return cls(field, (field.zero(), field.one()), _raw=True)

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs: Sequence[CoeffLike]) -> "Poly":
        return cls(field, coeffs)

    def _make(self, lst) -> "Poly":
        while lst and not lst[-1]:
            lst.pop()
        return Poly(self.field, lst, _raw=True)

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self):
        if not self.coeffs:
            raise ZeroInputError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else self.field.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash((self.field.characteristic, self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Poly({self.field.characteristic}, {format_poly(self)!r})"

    # -- arithmetic ----------------------------------------------------

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        p = self.field.characteristic
        if p:
            lst = [(a[i] + b[i]) % p for i in range(len(b))] + list(a[len(b):])
        else:
            lst = [a[i] + b[i] for i in range(len(b))] + list(a[len(b):])
        return self._make(lst)

    def __neg__(self) -> "Poly":
        p = self.field.characteristic
        if p:
            return Poly(self.field, tuple((-c) % p for c in self.coeffs), _raw=True)
        return Poly(self.field, tuple(-c for c in self.coeffs), _raw=True)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(self.field)
        out = [self.field.zero()] * (len(a) + len(b) - 1)
        p = self.field.characteristic
        for i, ci in enumerate(a):
            if not ci:
                continue
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
        if p:
            out = [c % p for c in out]
        return self._make(out)

    def scale(self, c) -> "Poly":
        """Multiply by a field element."""
        c = self.field.element(c)
        if not c:
            return Poly.zero(self.field)
        p = self.field.characteristic
        if p:
            return Poly(self.field, tuple(c * a % p for a in self.coeffs), _raw=True)
        return Poly(self.field, tuple(c * a for a in self.coeffs), _raw=True)

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise OreError("negative polynomial power")
        result = Poly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        """Euclidean division: self = q*other + r with deg r < deg other."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.characteristic
        rem = list(self.coeffs)
        dn = other.degree
        bl = other.coeffs
        inv_lead = self.field.inv(bl[-1])
        q = [self.field.zero()] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if p:
                c %= p
            if not c:
                rem[i] = self.field.zero()
                continue
            c = c * inv_lead % p if p else c * inv_lead
            q[i - dn] = c
            for j in range(dn + 1):
                rem[i - dn + j] -= c * bl[j]
            rem[i] = self.field.zero()
        if p:
            rem = [c % p for c in rem]
        return self._make(q), self._make(rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        """True if self divides other exactly."""
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise OreError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == self.field.one():
            return self
        return self.scale(self.field.inv(lead))

    def gcd(self, other: "Poly") -> "Poly":
        """Monic greatest common divisor."""
        self._check(other)
        if self.is_zero() and other.is_zero():
            return Poly.zero(self.field)
        if self.field.characteristic == 0:
            return _q_gcd(self, other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.field)
        return (self * other).exact_div(self.gcd(other)).monic()

    # -- shift action and evaluation ------------------------------------

    def shift(self, k: int) -> "Poly":
        """Return self(x + k)."""
        if k == 0 or self.is_constant():
            return self
        field = self.field
        p = field.characteristic
        kk = k % p if p else mpq(k)
        out = [field.zero()]
        # Horner in (x + k): out <- out*(x+k) + c, from the top coefficient down
        for c in reversed(self.coeffs):
            shifted = [field.zero()] + out
            for i, v in enumerate(out):
                shifted[i] += v * kk
            shifted[0] += c
            if p:
                shifted = [v % p for v in shifted]
            out = shifted
        while out and not out[-1]:
            out.pop()
        return Poly(field, out, _raw=True)

    def __call__(self, v):
        """Evaluate at a field element."""
        field = self.field
        v = field.element(v)
        acc = field.zero()
        p = field.characteristic
        for c in reversed(self.coeffs):
            acc = acc * v + c
            if p:
                acc %= p
        return acc

    def eval_poly(self, g: "Poly") -> "Poly":
        """Substitute the polynomial g for the variable."""
        self._check(g)
        acc = Poly.zero(self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly.constant(self.field, c)
        return acc

    def truncate(self, m: int) -> "Poly":
        """Reduce mod x^m."""
        return self._make(list(self.coeffs[:m]))

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero polynomial)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def shift_down(self, v: int) -> "Poly":
        """Exact division by x^v."""
        if v == 0:
            return self
        if any(self.coeffs[i] for i in range(min(v, len(self.coeffs)))):
            raise OreError("inexact division by power of the variable")
        return self._make(list(self.coeffs[v:]))


def content_poly(polys: Sequence[Poly]) -> Poly:
    """Monic gcd of a nonempty family of polynomials."""
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise AllZeroError("content of an all-zero family")
    g = nonzero[0]
    for f in nonzero[1:]:
        if g.is_constant():
            break
        g = g.gcd(f)
    return g.monic()


def series_inverse(b: Poly, m: int) -> Poly:
    """Inverse of b as a power series, mod x^m."""
    if m <= 0:
        raise OreError("precision must be positive")
    if b.is_zero() or not b.coeffs[0]:
        raise NotAUnitError("series inverse requires a unit constant term")
    field = b.field
    p = field.characteristic
    inv0 = field.inv(b.coeffs[0])
    out = [inv0]
    bc = b.coeffs
    for k in range(1, m):
        acc = field.zero()
        for j in range(1, min(k, len(bc) - 1) + 1):
            acc += bc[j] * out[k - j]
        c = -acc * inv0
        out.append(c % p if p else c)
    while out and not out[-1]:
        out.pop()
    return Poly(field, out, _raw=True)


# -- integer polynomial helpers (modular gcd over Q) -----------------------


def _zx_content(a: list) -> "mpz":
    g = mpz(0)
    for c in a:
        if c:
            g = _int_gcd(g, c)
            if g == 1:
                break
    return g


def _zx_trial_div(a: list, b: list):
    """Exact quotient of integer polynomials, or None if division fails."""
    if not b:
        return None
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [mpz(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if not c:
            continue
        if c % lead:
            return None
        f = c // lead
        q[i - db] = f
        for j in range(db + 1):
            rem[i - db + j] -= f * b[j]
    if any(rem):
        return None
    return q


_gcd_primes: list[int] = []


def _more_gcd_primes():
    start = _gcd_primes[-1] - 2 if _gcd_primes else (1 << 62) - 1
    n = start
    while True:
        if is_prime(n):
            _gcd_primes.append(n)
            return
        n -= 2


def _zx_gcd_modular(a: list, b: list) -> list:
    """Gcd of primitive integer polynomials via small-prime images and CRT."""
    if len(a) < len(b):
        a, b = b, a
    lc_bound = _int_gcd(a[-1], b[-1])
    best_deg = None
    crt_res: list = []
    crt_mod = mpz(1)
    stable = 0
    idx = 0
    while True:
        if idx >= len(_gcd_primes):
            _more_gcd_primes()
        q = _gcd_primes[idx]
        idx += 1
        if a[-1] % q == 0 or b[-1] % q == 0:
            continue
        fq = FieldSpec(q)
        g = Poly(fq, [int(c % q) for c in a]).gcd(Poly(fq, [int(c % q) for c in b]))
        if g.degree == 0:
            return [mpz(1)]
        if best_deg is None or g.degree < best_deg:
            best_deg = g.degree
            crt_res, crt_mod, stable = [], mpz(1), 0
        elif g.degree > best_deg:
            continue
        scaled = [int(lc_bound) * c % q for c in g.coeffs]
        if crt_mod == 1:
            crt_res = [mpz(c if c <= q // 2 else c - q) for c in scaled]
            crt_mod = mpz(q)
            stable = 0
        else:
            inv = pow(int(crt_mod % q), -1, q)
            new_res = []
            new_mod = crt_mod * q
            changed = False
            for i in range(best_deg + 1):
                r = crt_res[i] if i < len(crt_res) else mpz(0)
                s = scaled[i] if i < len(scaled) else 0
                t = (s - int(r % q)) * inv % q
                v = r + crt_mod * t
                half = new_mod // 2
                v = v - new_mod if v > half else v
                changed = changed or (v != r)
                new_res.append(v)
            crt_res, crt_mod = new_res, new_mod
            stable = 0 if changed else stable + 1
        if stable >= 1 and crt_res:
            cand = list(crt_res)
            cont = _zx_content(cand)
            if cont > 1:
                cand = [c // cont for c in cand]
            if _zx_trial_div(list(a), cand) is not None and _zx_trial_div(list(b), cand) is not None:
                return cand


def _q_to_zx(f: Poly) -> list:
    den = mpz(1)
    for c in f.coeffs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    out = [mpz(c.numerator) * (den // c.denominator) for c in f.coeffs]
    cont = _zx_content(out)
    if cont > 1:
        out = [c // cont for c in out]
    return out


def _q_gcd(f: Poly, g: Poly) -> Poly:
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if f.is_constant() or g.is_constant():
        return Poly.one(f.field)
    a = _q_to_zx(f)
    b = _q_to_zx(g)
    h = _zx_gcd_modular(a, b)
    return Poly(f.field, [mpq(c) for c in h], _raw=False).monic()


# -- rational functions ----------------------------------------------------


class RatFun:
    """Normalized quotient of two polynomials: gcd 1, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = None, *, _raw=False):
        if den is None:
            den = Poly.one(num.field)
        if _raw:
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)
            return
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.field != den.field:
            raise FieldMismatchError("numerator and denominator over different fields")
        if num.is_zero():
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", Poly.one(num.field))
            return
        if not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num.exact_div(g)
                den = den.exact_div(g)
            if not den.is_monic():
                c = num.field.inv(den.leading())
                num = num.scale(c)
                den = den.scale(c)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFun is immutable")

    @classmethod
    def from_poly(cls, f: Poly) -> "RatFun":
        return cls(f, Poly.one(f.field), _raw=True)

    @classmethod
    def zero(cls, field: FieldSpec) -> "RatFun":
        return cls(Poly.zero(field), Poly.one(field), _raw=True)

    @classmethod
    def one(cls, field: FieldSpec) -> "RatFun":
        return cls(Poly.one(field), Poly.one(field), _raw=True)

    @classmethod
    def constant(cls, field: FieldSpec, c) -> "RatFun":
        return cls(Poly.constant(field, c), Poly.one(field), _raw=True)

    @property
    def field(self) -> FieldSpec:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_poly(self) -> bool:
        return self.den.is_one()

    def as_poly(self) -> Poly:
        if not self.den.is_one():
            raise OreError("rational function is not a polynomial")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __eq__(self, other):
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return f"RatFun({format_ratfun(self)!r})"

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den, _raw=True)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        if self.den.is_one() and other.den.is_one():
            return RatFun(self.num * other.num, self.den, _raw=True)
        return RatFun(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFun(self.den, self.num)

    def scale(self, c) -> "RatFun":
        c = self.field.element(c)
        if not c:
            return RatFun.zero(self.field)
        return RatFun(self.num.scale(c), self.den, _raw=True)

    def shift(self, k: int) -> "RatFun":
        num = self.num.shift(k)
        den = self.den.shift(k)
        if den.is_monic():
            return RatFun(num, den, _raw=True)
        return RatFun(num, den)


def shift(f, k: int):
    """Apply the substitution x -> x+k to a Poly or RatFun."""
    return f.shift(k)


# -- formatting -------------------------------------------------------------


def format_coeff(field: FieldSpec, c) -> str:
    return str(c)


def format_poly(f: Poly, var: str = "x") -> str:
    """Human-readable form, highest degree first."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            term = str(c)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            if c == f.field.one():
                term = xs
            elif f.field.characteristic == 0 and c == -1:
                term = f"-{xs}"
            else:
                term = f"{c}*{xs}"
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += " - " + term[1:] if term.startswith("-") else " + " + term
    return out


def format_ratfun(r: RatFun, var: str = "x") -> str:
    if r.den.is_one():
        return format_poly(r.num, var)
    return f"({format_poly(r.num, var)})/({format_poly(r.den, var)})"
