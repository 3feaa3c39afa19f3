"""Skew polynomials in the shift operator.

An operator sum(a_i * t^i) acts on sequences by (L y)(x) = sum a_i(x)
y(x+i); multiplication follows the commutation rule t * r(x) =
r(x+1) * t.  Coefficients are rational functions; an operator whose
coefficients are all polynomials is called integral.

GCRD and LCLM run on a fraction-free extended Euclidean remainder
sequence over the integral subring: each division step multiplies
through by shifted leading coefficients instead of dividing, and rows
are reduced by the gcd of their polynomial contents.  This avoids
fraction-field normalization inside the loop, which dominates the cost
on large inputs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import (
    DegenerateReductionError,
    DivisionByZeroError,
    FieldMismatchError,
    NotIntegralError,
    OrderDroppedWarning,
    OrderZeroError,
    OreError,
    ZeroInputError,
    ZeroTrailingError,
)
from .poly import FieldSpec, Poly, RatFun, content_poly, format_ratfun, is_prime

try:
    from gmpy2 import mpz
    from gmpy2 import gcd as _int_gcd
except ImportError:  # pragma: no cover
    from math import gcd as _int_gcd

    mpz = int


class OrePoly:
    """Operator sum(a_i * t^i) with RatFun coefficients, index = power of t."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs, *, _raw=False):
        object.__setattr__(self, "field", field)
        lst = list(coeffs)
        if not _raw:
            out = []
            for c in lst:
                if isinstance(c, RatFun):
                    out.append(c)
                elif isinstance(c, Poly):
                    out.append(RatFun.from_poly(c))
                else:
                    out.append(RatFun.constant(field, c))
            lst = out
            while lst and lst[-1].is_zero():
                lst.pop()
        object.__setattr__(self, "coeffs", tuple(lst))

    def __setattr__(self, *args):
        raise AttributeError("OrePoly is immutable")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, field: FieldSpec) -> "OrePoly":
        return cls(field, (), _raw=True)

    @classmethod
    def one(cls, field: FieldSpec) -> "OrePoly":
        return cls(field, (RatFun.one(field),), _raw=True)

    @classmethod
    def tau(cls, field: FieldSpec, i: int = 1) -> "OrePoly":
        return cls(field, [RatFun.zero(field)] * i + [RatFun.one(field)], _raw=True)

    @classmethod
    def from_polys(cls, field: FieldSpec, polys) -> "OrePoly":
        return cls(field, [RatFun.from_poly(f) for f in polys])

    @classmethod
    def monomial(cls, coeff: RatFun, i: int) -> "OrePoly":
        field = coeff.field
        return cls(field, [RatFun.zero(field)] * i + [coeff])

    # -- queries ----------------------------------------------------------

    @property
    def order(self) -> int:
        """Degree in t, -1 for the zero operator."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.is_poly() for c in self.coeffs)

    def coefficient(self, i: int) -> RatFun:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFun.zero(self.field)

    def leading(self) -> RatFun:
        if not self.coeffs:
            raise ZeroInputError("zero operator has no leading coefficient")
        return self.coeffs[-1]

    def poly_coeffs(self) -> list[Poly]:
        """Coefficients as polynomials; requires an integral operator."""
        if not self.is_integral():
            raise NotIntegralError("operator has non-polynomial coefficients")
        return [c.as_poly() for c in self.coeffs]

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, OrePoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "OrePoly(0)"
        parts = []
        for i in range(self.order, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            ts = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            cs = format_ratfun(c)
            if ts and not c.is_one():
                parts.append(f"({cs})*{ts}")
            elif ts:
                parts.append(ts)
            else:
                parts.append(f"({cs})")
        return "OrePoly(" + " + ".join(parts) + ")"

    # -- ring operations ---------------------------------------------------

    def _check(self, other: "OrePoly"):
        if self.field != other.field:
            raise FieldMismatchError("operators over different fields")

    def __add__(self, other: "OrePoly") -> "OrePoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return OrePoly(self.field, out)

    def __neg__(self) -> "OrePoly":
        return OrePoly(self.field, [-c for c in self.coeffs], _raw=True)

    def __sub__(self, other: "OrePoly") -> "OrePoly":
        return self + (-other)

    def __mul__(self, other: "OrePoly") -> "OrePoly":
        return ore_mul(self, other)

    def scale(self, r) -> "OrePoly":
        """Left-multiply by a rational function or polynomial."""
        if isinstance(r, Poly):
            r = RatFun.from_poly(r)
        return OrePoly(self.field, [r * c for c in self.coeffs])

    def monic(self) -> "OrePoly":
        """Divide on the left by the leading coefficient."""
        if self.is_zero():
            raise ZeroInputError("cannot make the zero operator monic")
        lead = self.leading()
        if lead.is_one():
            return self
        return self.scale(lead.inverse())


def ore_mul(a: OrePoly, b: OrePoly) -> OrePoly:
    """Product under t * r(x) = r(x+1) * t."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return OrePoly.zero(a.field)
    out = [RatFun.zero(a.field) for _ in range(a.order + b.order + 1)]
    for i, ci in enumerate(a.coeffs):
        if ci.is_zero():
            continue
        for j, cj in enumerate(b.coeffs):
            if cj.is_zero():
                continue
            out[i + j] = out[i + j] + ci * cj.shift(i)
    return OrePoly(a.field, out)


def right_divide(a: OrePoly, b: OrePoly) -> tuple[OrePoly, OrePoly]:
    """Quotient and remainder with a = q*b + r and ord(r) < ord(b)."""
    a._check(b)
    if b.is_zero():
        raise DivisionByZeroError("right division by the zero operator")
    field = a.field
    n = b.order
    rem = list(a.coeffs)
    q = [RatFun.zero(field)] * max(len(rem) - n, 1)
    while len(rem) - 1 >= n and rem:
        m = len(rem) - 1
        if rem[-1].is_zero():
            rem.pop()
            continue
        c = rem[-1] / b.leading().shift(m - n)
        q[m - n] = q[m - n] + c
        for j, bc in enumerate(b.coeffs):
            rem[j + m - n] = rem[j + m - n] - c * bc.shift(m - n)
        rem.pop()
    return OrePoly(field, q), OrePoly(field, rem)


# -- fraction-free remainder sequences -----------------------------------


def _op_trim(lst: list[Poly]) -> list[Poly]:
    while lst and lst[-1].is_zero():
        lst.pop()
    return lst


def _op_mul_int(a: list[Poly], b: list[Poly], field: FieldSpec) -> list[Poly]:
    """Ore product of integral operators given as Poly lists."""
    if not a or not b:
        return []
    out = [Poly.zero(field)] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if ci.is_zero():
            continue
        for j, cj in enumerate(b):
            if cj.is_zero():
                continue
            out[i + j] = out[i + j] + ci * cj.shift(i)
    return _op_trim(out)


def _op_scale(a: list[Poly], s: Poly) -> list[Poly]:
    return [s * c for c in a]


def _op_sub(a: list[Poly], b: list[Poly], field: FieldSpec) -> list[Poly]:
    out = list(a) + [Poly.zero(field)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _op_trim(out)


def _ff_divstep(a: list[Poly], b: list[Poly], field: FieldSpec):
    """Fraction-free right division: returns (lam, q, r) with lam*a = q b + r."""
    n = len(b) - 1
    lead = b[-1]
    r = list(a)
    q: list[Poly] = []
    lam = Poly.one(field)
    while r and len(r) - 1 >= n:
        if r[-1].is_zero():
            r.pop()
            continue
        m = len(r) - 1
        s = lead.shift(m - n)
        t = r[-1]
        new_r = [s * c for c in r]
        for j, bc in enumerate(b):
            new_r[j + m - n] = new_r[j + m - n] - t * bc.shift(m - n)
        r = _op_trim(new_r)
        q = _op_scale(q, s)
        if len(q) < m - n + 1:
            q += [Poly.zero(field)] * (m - n + 1 - len(q))
        q[m - n] = q[m - n] + t
        lam = s * lam
    return lam, _op_trim(q), r


def _row_strip(row: list[list[Poly]]) -> None:
    """Divide a PRS row through by the gcd of all its polynomial entries."""
    polys = [c for part in row for c in part if not c.is_zero()]
    if not polys:
        return
    g = polys[0]
    for f in polys[1:]:
        if g.is_constant():
            break
        g = g.gcd(f)
    g = g.monic()
    if g.is_constant():
        lead = polys[-1]
        unit = lead.field.inv(lead.leading())
        for part in row:
            for i, c in enumerate(part):
                part[i] = c.scale(unit)
        return
    for part in row:
        for i, c in enumerate(part):
            part[i] = c.exact_div(g) if not c.is_zero() else c


def _integral_primitive_list(a: OrePoly) -> list[Poly]:
    """Clear denominators and content, returning primitive Poly coefficients."""
    field = a.field
    den = Poly.one(field)
    for c in a.coeffs:
        den = den.lcm(c.den)
    polys = [(c.num * den.exact_div(c.den)) for c in a.coeffs]
    cont = content_poly([f for f in polys if not f.is_zero()])
    if not cont.is_one():
        polys = [f.exact_div(cont) if not f.is_zero() else f for f in polys]
    return polys


def _ff_euclid(a: OrePoly, b: OrePoly, want_cofactors: bool):
    """Remainder sequence on integral primitivized inputs.

    Returns (gcrd_row, last_row) where each row is [R, U, V] with
    R = U A' + V B' for the primitivized inputs A', B'; last_row has
    R = [] and exists only when cofactors are requested.
    """
    field = a.field
    a_list = _integral_primitive_list(a)
    b_list = _integral_primitive_list(b)
    one = [Poly.one(field)]
    if want_cofactors:
        row0 = [a_list, [Poly.one(field)], []]
        row1 = [b_list, [], [Poly.one(field)]]
    else:
        row0 = [a_list, [], []]
        row1 = [b_list, [], []]
    while row1[0]:
        lam, q, r = _ff_divstep(row0[0], row1[0], field)
        new_row = [r]
        if want_cofactors:
            for k in (1, 2):
                new_row.append(
                    _op_sub(_op_scale(row0[k], lam), _op_mul_int(q, row1[k], field), field)
                )
        else:
            new_row += [[], []]
        _row_strip(new_row)
        row0, row1 = row1, new_row
    return row0, row1


def gcrd(a: OrePoly, b: OrePoly) -> OrePoly:
    """Monic greatest common right divisor."""
    a._check(b)
    if a.is_zero() and b.is_zero():
        raise ZeroInputError("gcrd of two zero operators")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.order == 0 or b.order == 0:
        return OrePoly.one(a.field)
    row, _ = _ff_euclid(a, b, want_cofactors=False)
    return OrePoly.from_polys(a.field, row[0]).monic()


def lclm(a: OrePoly, b: OrePoly) -> OrePoly:
    """Monic least common left multiple, of order ord a + ord b - ord gcrd."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        raise ZeroInputError("lclm of a zero operator")
    if a.order == 0:
        return b.monic()
    if b.order == 0:
        return a.monic()
    gcrd_row, last_row = _ff_euclid(a, b, want_cofactors=True)
    a_prim = _integral_primitive_list(a)
    m = _op_mul_int(last_row[1], a_prim, a.field)
    result = OrePoly.from_polys(a.field, m).monic()
    expected = a.order + b.order - (len(gcrd_row[0]) - 1)
    if result.order != expected:
        raise OreError("lclm order mismatch: remainder sequence is inconsistent")
    return result


# -- content, primitive part, adjusted coefficients ------------------------


def content(a: OrePoly) -> Poly:
    """Monic gcd of the polynomial coefficients of an integral operator."""
    if a.is_zero():
        raise ZeroInputError("content of the zero operator")
    return content_poly([f for f in a.poly_coeffs() if not f.is_zero()])


def prim(a: OrePoly) -> OrePoly:
    """Canonical primitive part: integral, coefficient gcd 1, monic leading polynomial.

    Accepts any nonzero operator; denominators are cleared first.
    """
    if a.is_zero():
        raise ZeroInputError("primitive part of the zero operator")
    polys = _integral_primitive_list(a)
    unit = a.field.inv(polys[-1].leading())
    if unit != a.field.one():
        polys = [f.scale(unit) for f in polys]
    return OrePoly.from_polys(a.field, polys)


def adjusted_leading(a: OrePoly) -> Poly:
    """Leading polynomial coefficient shifted by -order, not normalized."""
    if a.is_zero():
        raise ZeroInputError("zero operator")
    polys = a.poly_coeffs()
    return polys[-1].shift(-a.order)


def lc_star(a: OrePoly) -> Poly:
    """Monic adjusted leading coefficient a_n(x - n)."""
    return adjusted_leading(a).monic()


def tc_star(a: OrePoly) -> Poly:
    """Monic trailing coefficient a_0; requires a_0 != 0."""
    if a.is_zero():
        raise ZeroInputError("zero operator")
    polys = a.poly_coeffs()
    if polys[0].is_zero():
        raise ZeroTrailingError("trailing coefficient at index 0 vanishes")
    return polys[0].monic()


def adjusted_trailing(a: OrePoly) -> Poly:
    """Monic a_m(x - m) for the lowest index m with a_m != 0."""
    if a.is_zero():
        raise ZeroInputError("zero operator")
    polys = a.poly_coeffs()
    m = next(i for i, f in enumerate(polys) if not f.is_zero())
    return polys[m].shift(-m).monic()


# -- companion matrix --------------------------------------------------------


@dataclass(frozen=True)
class CompanionMatrix:
    """Matrix of the shift action on the standard basis 1, t, ..., t^(n-1).

    Superdiagonal entries are 1 and the last row is
    (-a_0/a_n, ..., -a_{n-1}/a_n).
    """

    size: int
    entries: tuple

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def companion(a: OrePoly) -> CompanionMatrix:
    if a.order < 1:
        raise OrderZeroError("companion matrix needs order >= 1")
    field = a.field
    n = a.order
    lead = a.leading()
    rows = []
    for i in range(n - 1):
        row = [RatFun.zero(field)] * n
        row[i + 1] = RatFun.one(field)
        rows.append(tuple(row))
    last = tuple(-(a.coeffs[j] / lead) for j in range(n))
    rows.append(last)
    return CompanionMatrix(n, tuple(rows))


# -- reduction mod p ----------------------------------------------------------


def reduce_mod_p(a: OrePoly, p: int) -> OrePoly:
    """Coefficient-wise reduction of an integral operator over Q modulo p.

    Integer denominators are cleared first (common integer content is
    kept, so e.g. 2t - 2 reduces to zero mod 2 and is rejected).
    """
    if a.field.characteristic != 0:
        raise OreError("reduce_mod_p expects an operator over Q")
    if not is_prime(p):
        raise OreError(f"{p} is not prime")
    if a.is_zero():
        raise ZeroInputError("cannot reduce the zero operator")
    polys = a.poly_coeffs()
    den = mpz(1)
    for f in polys:
        for c in f.coeffs:
            d = c.denominator
            den = den * d // _int_gcd(den, d)
    fp = FieldSpec(p)
    reduced = []
    for f in polys:
        ints = [int(c.numerator * (den // c.denominator)) for c in f.coeffs]
        reduced.append(Poly(fp, ints))
    while reduced and reduced[-1].is_zero():
        reduced.pop()
    if not reduced or all(f.is_zero() for f in reduced):
        raise DegenerateReductionError(f"all coefficients vanish mod {p}")
    if len(reduced) - 1 < a.order:
        warnings.warn(
            f"order dropped from {a.order} to {len(reduced) - 1} mod {p}",
            OrderDroppedWarning,
            stacklevel=2,
        )
    return OrePoly.from_polys(fp, reduced)
