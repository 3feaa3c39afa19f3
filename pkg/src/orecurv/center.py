"""The invariant subring in characteristic p.

Over F_p the polynomial x^p - x is fixed by the shift x -> x+1; we call
it Z.  Shift-invariant rational functions are exactly the rational
functions in Z, and the multiplicative norm

    f(x)  |->  f(x) f(x+1) ... f(x+p-1)

lands in F_p(Z).  This module provides the norm, the rewriting of
shift-invariant polynomials into Z, and CenterPoly, a polynomial in a
second variable T whose coefficients are rational functions in Z.  A
Poly returned "in Z" is an ordinary Poly whose variable is read as Z.
"""

from __future__ import annotations

from .errors import (
    AllZeroError,
    NeedsPositiveCharacteristicError,
    NotCentralError,
    OreError,
    ZeroInputError,
)
from .poly import FieldSpec, Poly, RatFun, content_poly, format_poly, format_ratfun


def z_poly(field: FieldSpec) -> Poly:
    """The invariant polynomial x^p - x as an element of F_p[x]."""
    p = field.characteristic
    if not p:
        raise NeedsPositiveCharacteristicError("x^p - x needs characteristic p > 0")
    coeffs = [0] * (p + 1)
    coeffs[1] = p - 1
    coeffs[p] = 1
    return Poly(field, coeffs, _raw=True)


def to_center(f: Poly) -> Poly:
    """Rewrite a shift-invariant f(x) as g with g(x^p - x) = f(x).

    Works by expanding f in base x^p - x; invariance under x -> x+1 is
    equivalent to every digit of that expansion being a constant, and a
    non-constant digit raises NotCentralError.
    """
    field = f.field
    if not field.characteristic:
        raise NeedsPositiveCharacteristicError("to_center needs characteristic p > 0")
    zx = z_poly(field)
    digits = []
    rest = f
    while not rest.is_zero():
        rest, digit = rest.divmod(zx)
        if digit.degree > 0:
            raise NotCentralError(
                f"polynomial is not invariant under the shift: digit {format_poly(digit)}"
            )
        digits.append(digit.constant_term())
    return Poly(field, digits)


def from_center(g: Poly) -> Poly:
    """Substitute x^p - x for the variable of g, mapping F_p[Z] back into F_p[x]."""
    return g.eval_poly(z_poly(g.field))


def norm(f: Poly) -> Poly:
    """Norm of f: the product of all p shifts of f, written in Z.

    Multiplicative, with deg_Z(norm(f)) = deg_x(f); norm(x) = Z.
    """
    field = f.field
    if not field.characteristic:
        raise NeedsPositiveCharacteristicError("norm needs characteristic p > 0")
    if f.is_zero():
        return Poly.zero(field)
    prod = f
    for i in range(1, field.characteristic):
        prod = prod * f.shift(i)
    return to_center(prod)


def norm_ratfun(r: RatFun) -> RatFun:
    """Norm map extended to rational functions, as a normalized quotient in Z."""
    if r.is_zero():
        raise ZeroInputError("norm of the zero rational function")
    return RatFun(norm(r.num), norm(r.den))


class CenterPoly:
    """Polynomial in T with coefficients in F_p(Z), low T-degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs, *, _raw=False):
        if not field.characteristic:
            raise NeedsPositiveCharacteristicError("CenterPoly needs characteristic p > 0")
        object.__setattr__(self, "field", field)
        lst = list(coeffs)
        if not _raw:
            lst = [c if isinstance(c, RatFun) else RatFun.from_poly(c) for c in lst]
            while lst and lst[-1].is_zero():
                lst.pop()
        object.__setattr__(self, "coeffs", tuple(lst))

    def __setattr__(self, *args):
        raise AttributeError("CenterPoly is immutable")

    @classmethod
    def from_polys(cls, field: FieldSpec, polys) -> "CenterPoly":
        return cls(field, [RatFun.from_poly(f) for f in polys])

    @classmethod
    def one(cls, field: FieldSpec) -> "CenterPoly":
        return cls(field, [RatFun.one(field)], _raw=True)

    @classmethod
    def zero(cls, field: FieldSpec) -> "CenterPoly":
        return cls(field, (), _raw=True)

    @property
    def degree(self) -> int:
        """Degree in T, -1 for zero."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def is_integral(self) -> bool:
        return all(c.is_poly() for c in self.coeffs)

    def integral_coeffs(self) -> list[Poly]:
        return [c.as_poly() for c in self.coeffs]

    def deg_z(self) -> int:
        """Largest Z-degree among the coefficients (integral input only)."""
        if self.is_zero():
            return -1
        return max(c.as_poly().degree for c in self.coeffs)

    def denominator(self) -> Poly:
        """Monic lcm of the coefficient denominators in F_p[Z]."""
        acc = Poly.one(self.field)
        for c in self.coeffs:
            acc = acc.lcm(c.den)
        return acc

    def content(self) -> Poly:
        """Monic gcd of the coefficients of an integral CenterPoly."""
        if not self.is_integral():
            raise OreError("content is defined for integral center polynomials")
        if self.is_zero():
            raise AllZeroError("content of the zero center polynomial")
        return content_poly(self.integral_coeffs())

    def primitive_part(self) -> "CenterPoly":
        c = self.content()
        return CenterPoly(
            self.field,
            [RatFun.from_poly(f.as_poly().exact_div(c)) for f in self.coeffs],
            _raw=True,
        )

    def scale(self, r) -> "CenterPoly":
        """Multiply every coefficient by a Poly or RatFun in Z."""
        if isinstance(r, Poly):
            r = RatFun.from_poly(r)
        return CenterPoly(self.field, [c * r for c in self.coeffs])

    def truncate_z(self, m: int) -> "CenterPoly":
        """Reduce every coefficient mod Z^m (integral input only)."""
        return CenterPoly.from_polys(
            self.field, [c.as_poly().truncate(m) for c in self.coeffs]
        )

    def shift_down_z(self, v: int) -> "CenterPoly":
        """Exact coefficient-wise division by Z^v (integral input only)."""
        return CenterPoly.from_polys(
            self.field, [c.as_poly().shift_down(v) for c in self.coeffs]
        )

    def __eq__(self, other):
        if not isinstance(other, CenterPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "CenterPoly") -> "CenterPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CenterPoly(self.field, out)

    def __neg__(self) -> "CenterPoly":
        return CenterPoly(self.field, [-c for c in self.coeffs], _raw=True)

    def __sub__(self, other: "CenterPoly") -> "CenterPoly":
        return self + (-other)

    def __mul__(self, other: "CenterPoly") -> "CenterPoly":
        if self.is_zero() or other.is_zero():
            return CenterPoly.zero(self.field)
        out = [RatFun.zero(self.field) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out[i + j] + a * b
        return CenterPoly(self.field, out)

    def __pow__(self, e: int) -> "CenterPoly":
        if e < 0:
            raise OreError("negative power of a center polynomial")
        result = CenterPoly.one(self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __repr__(self):
        return f"CenterPoly({format_center(self)!r})"


def format_center(cp: CenterPoly) -> str:
    """Render in the variables Z and T, highest T-degree first."""
    if cp.is_zero():
        return "0"
    parts = []
    for i in range(cp.degree, -1, -1):
        c = cp.coeffs[i]
        if c.is_zero():
            continue
        ts = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
        if not ts:
            term = format_ratfun(c, "Z")
        elif c.is_one():
            term = ts
        else:
            cs = format_ratfun(c, "Z")
            if not (c.is_poly() and c.num.is_constant()):
                cs = f"({cs})"
            term = f"{cs}*{ts}"
        parts.append(term)
    return " + ".join(parts)
