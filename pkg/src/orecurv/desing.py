"""Desingularization at order 1.

The leading coefficient of an integral operator L, shifted by -ord(L)
and made monic, carries the singularities of the recurrence.  Integral
left multiples A*L can have strictly smaller adjusted leading
coefficients; the monic generator of the ideal of those, for
ord(A) <= k, is the essential part at order k (lc1 for k = 1) and the
quotient is the removable part (rp1).

Three routes are implemented:

* the deterministic index-set method: for indices I with
  gcd(a_i : i in I) = 1, the gcd of the order-0 essential parts of the
  multiples L_i = (a_i t - a_{i-1}(x+1)) L is exactly lc1;
* a one-multiple variant that bounds the leading and trailing essential
  parts simultaneously from the single L_i with i = floor(n/2);
* the Monte-Carlo least-common-left-multiple method, which removes
  apparent singularities by mixing L with a random low-order operator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    FieldTooSmallError,
    NotPrimitiveError,
    OrderZeroError,
    OreError,
    ZeroInputError,
    ZeroTrailingError,
)
from .ore import (
    OrePoly,
    _op_mul_int,
    adjusted_trailing,
    content_poly,
    lc_star,
    lclm,
    prim,
    tc_star,
)
from .poly import FieldSpec, Poly

try:
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq


class DesingMethod(str, Enum):
    ALGORITHM2 = "algorithm2"
    ALGORITHM3 = "algorithm3"
    LCLM_MC = "lclm_mc"


@dataclass(frozen=True)
class DesingReport:
    """Result of a desingularization run.

    lc1 is exact for the index-set method and an upper bound (a multiple
    of the true essential part dividing lc0) for the other two; rp1 is
    always lc0/lc1 exactly.  witnesses records the indices i used and
    the corresponding lc0(L_i).
    """

    lc0: Poly
    lc1: Poly
    rp1: Poly
    tc_bound: Optional[Poly]
    method: DesingMethod
    witnesses: tuple


def _require_primitive(op: OrePoly) -> list[Poly]:
    polys = op.poly_coeffs()
    nonzero = [f for f in polys if not f.is_zero()]
    if not nonzero:
        raise ZeroInputError("zero operator")
    if not content_poly(nonzero).is_one():
        raise NotPrimitiveError("operator is not primitive")
    return polys


def lc0(op: OrePoly) -> Poly:
    """Essential part at order 0: the adjusted leading coefficient of Prim(op)."""
    if op.is_zero():
        raise ZeroInputError("zero operator")
    return lc_star(prim(op))


def tc0(op: OrePoly) -> Poly:
    """Trailing counterpart of lc0, taken at the lowest nonzero index."""
    if op.is_zero():
        raise ZeroInputError("zero operator")
    return adjusted_trailing(prim(op))


def build_Li(op: OrePoly, i: int) -> OrePoly:
    """The integral left multiple (a_i t - a_{i-1}(x+1)) * op, 0 <= i <= n+1."""
    polys = op.poly_coeffs()
    n = op.order
    if not 0 <= i <= n + 1:
        raise OreError(f"index {i} out of range for order {n}")
    field = op.field
    a_i = polys[i] if i <= n else Poly.zero(field)
    a_prev = polys[i - 1] if 1 <= i <= n + 1 else Poly.zero(field)
    left = [-a_prev.shift(1), a_i]
    while left and left[-1].is_zero():
        left.pop()
    return OrePoly.from_polys(field, _op_mul_int(left, polys, field))


def select_index_set(op: OrePoly) -> list[int]:
    """Indices I with gcd(a_i : i in I) = 1, grown greedily by ascending degree."""
    polys = _require_primitive(op)
    order = sorted(
        (i for i, f in enumerate(polys) if not f.is_zero()),
        key=lambda i: (polys[i].degree, i),
    )
    chosen = [order[0]]
    g = polys[order[0]].monic()
    for i in order[1:]:
        if g.is_one():
            break
        g2 = g.gcd(polys[i])
        if g2.degree < g.degree:
            chosen.append(i)
            g = g2
    if not g.is_one():
        raise NotPrimitiveError("coefficient gcd never reaches 1")
    return sorted(chosen)


def lc1_algorithm2(op: OrePoly) -> DesingReport:
    """Exact essential part of the leading coefficient at order 1.

    Requires a primitive operator of positive order.  Deterministic: the
    output is the monic generator of the order-1 ideal.
    """
    _require_primitive(op)
    if op.order < 1:
        raise OrderZeroError("operator of positive order required")
    witnesses = []
    g = None
    for i in select_index_set(op):
        w = lc0(build_Li(op, i))
        witnesses.append((i, w))
        g = w if g is None else g.gcd(w)
    lc1 = g.monic()
    lc0_val = lc_star(op)
    return DesingReport(
        lc0=lc0_val,
        lc1=lc1,
        rp1=lc0_val.exact_div(lc1).monic(),
        tc_bound=None,
        method=DesingMethod.ALGORITHM2,
        witnesses=tuple(witnesses),
    )


def lc1_tc1_algorithm3(op: OrePoly) -> DesingReport:
    """Simultaneous leading/trailing bounds from the single multiple at i = n//2.

    Returns l with lc1 | l | lc0 in the lc1 slot and the trailing bound
    t with tc1 | t | tc0 in tc_bound.
    """
    polys = _require_primitive(op)
    if op.order < 1:
        raise OrderZeroError("operator of positive order required")
    if polys[0].is_zero():
        raise ZeroTrailingError("trailing coefficient vanishes")
    i = op.order // 2
    li = prim(build_Li(op, i))
    lead_bound = lc_star(op).gcd(lc_star(li))
    trail_bound = tc_star(op).gcd(adjusted_trailing(li))
    lc0_val = lc_star(op)
    return DesingReport(
        lc0=lc0_val,
        lc1=lead_bound,
        rp1=lc0_val.exact_div(lead_bound).monic(),
        tc_bound=trail_bound,
        method=DesingMethod.ALGORITHM3,
        witnesses=((i, lc_star(li)),),
    )


def _sample_constants(field: FieldSpec, k: int, rng: random.Random) -> list:
    p = field.characteristic
    if p:
        cs = [rng.randrange(p) for _ in range(k)]
        cs.append(rng.randrange(1, p))
    else:
        cs = [mpq(rng.randint(-20, 20)) for _ in range(k)]
        top = 0
        while top == 0:
            top = rng.randint(-20, 20)
        cs.append(mpq(top))
    return cs


def _order1_mix(op: OrePoly, c) -> OrePoly:
    """The left multiple sum(c^i L_i) = (C1 t - C0) op for the constant c."""
    polys = op.poly_coeffs()
    field = op.field
    n = op.order
    c1 = Poly.zero(field)
    c0 = Poly.zero(field)
    power = field.one()
    for i in range(n + 2):
        if i <= n and not polys[i].is_zero():
            c1 = c1 + polys[i].scale(power)
        if 1 <= i and not polys[i - 1].is_zero():
            c0 = c0 + polys[i - 1].shift(1).scale(power)
        power = field.mul(power, c) if field.characteristic else power * c
    left = [-c0, c1]
    while left and left[-1].is_zero():
        left.pop()
    return OrePoly.from_polys(field, _op_mul_int(left, polys, field))


def lclm_method(
    op: OrePoly, k: int = 1, trials: int = 2, *, rng: random.Random | int | None = None
) -> Poly:
    """Monte-Carlo essential-part candidate via least common left multiples.

    Each trial mixes op with a random operator of order k and takes
    gcd(lc0(op), lc0(mix)); the result is the gcd across trials.  It is
    always a multiple of the true order-k essential part and divides
    lc0(op); with high probability it is equal to the essential part.
    """
    _require_primitive(op)
    if op.order < 1:
        raise OrderZeroError("operator of positive order required")
    if k < 1 or trials < 1:
        raise OreError("k and trials must be positive")
    field = op.field
    p = field.characteristic
    if p and p <= k + 1:
        raise FieldTooSmallError(f"p = {p} too small to sample {k + 1} constants")
    if rng is None or isinstance(rng, int):
        rng = random.Random(rng)
    result = None
    base = lc_star(op)
    for _ in range(trials):
        while True:
            cs = _sample_constants(field, k, rng)
            if k == 1:
                # lclm(op, c1 t + c0) in closed form, with c = -c0/c1
                c = field.element(-cs[0]) if not p else (-cs[0]) * pow(cs[1], -1, p) % p
                if not p:
                    c = -cs[0] / cs[1]
                mix = _order1_mix(op, c)
                if mix.order == op.order + 1:
                    break
            else:
                rand_op = OrePoly(field, [Poly.constant(field, ci) for ci in cs])
                mix = lclm(rand_op, op)
                if mix.order == op.order + k:
                    break
        candidate = base.gcd(lc_star(prim(mix)))
        result = candidate if result is None else result.gcd(candidate)
    return result.monic()


def rp(op: OrePoly, k: int) -> Poly:
    """Removable part at order k (k = 0 or 1): lc_star(op)/lc_k, monic."""
    if op.is_zero():
        raise ZeroInputError("zero operator")
    if k not in (0, 1):
        raise OreError("only orders 0 and 1 are supported")
    top = lc_star(op)
    if k == 0:
        return top.exact_div(lc0(op)).monic()
    return top.exact_div(lc1_algorithm2(prim(op)).lc1).monic()


# -- properties of the order-1 theory ----------------------------------------


def _solve_linear(field: FieldSpec, rows: list[list], rhs: list):
    """One solution of rows * x = rhs over the field, or None."""
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(v, inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [
                    field.add(a, field.mul(field.neg(f), b)) for a, b in zip(m[i], m[r])
                ]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    for i in range(r, len(m)):
        if m[i][ncols]:
            return None
    x = [field.zero()] * ncols
    for row_idx, c in enumerate(pivots):
        x[c] = m[row_idx][ncols]
    return x


def order1_content_witness(op: OrePoly, delta: Poly | None = None) -> Optional[Poly]:
    """A polynomial b with shift(delta, n+1) dividing every coefficient of (t - b) op.

    With delta = rp1 (the default) such a b always exists and the
    content of (t - b) op is then exactly shift(rp1, n+1); returns None
    when the divisibility system has no solution for the given delta.
    """
    polys = _require_primitive(op)
    field = op.field
    n = op.order
    if delta is None:
        delta = lc1_algorithm2(op).rp1
    big_d = delta.shift(n + 1).monic()
    if big_d.is_one():
        return Poly.zero(field)
    if not big_d.divides(polys[-1].shift(1)):
        return None
    d = big_d.degree
    rows = []
    rhs = []
    for j in range(n + 1):
        a_j = polys[j]
        target = polys[j - 1].shift(1) % big_d if j >= 1 else Poly.zero(field)
        cols = []
        xk = Poly.one(field)
        for _ in range(d):
            cols.append((xk * a_j) % big_d)
            xk = (xk * Poly.x(field)) % big_d
        for row_i in range(d):
            rows.append([c.coeffs[row_i] if row_i <= c.degree else field.zero() for c in cols])
            tc = target.coeffs[row_i] if row_i <= target.degree else field.zero()
            rhs.append(tc)
    sol = _solve_linear(field, rows, rhs)
    if sol is None:
        return None
    return Poly(field, sol)


def sandwich_check(op: OrePoly, constants: list) -> bool:
    """Divisibility sandwich for the random mix (C1 t - C0) op.

    constants is a vector of n+2 field elements c_i with
    C1 = sum c_i a_i nonzero; checks
    lc1 | lc0(mix) | shift(C1, -n-1) * lc1.
    """
    polys = _require_primitive(op)
    field = op.field
    n = op.order
    if len(constants) != n + 2:
        raise OreError(f"need {n + 2} constants")
    cs = [field.element(c) for c in constants]
    c1 = Poly.zero(field)
    c0 = Poly.zero(field)
    for i in range(n + 2):
        if i <= n and not polys[i].is_zero() and cs[i]:
            c1 = c1 + polys[i].scale(cs[i])
        if i >= 1 and not polys[i - 1].is_zero() and cs[i]:
            c0 = c0 + polys[i - 1].shift(1).scale(cs[i])
    if c1.is_zero():
        raise ZeroInputError("C1 vanished, resample the constants")
    left = [-c0, c1]
    mix = OrePoly.from_polys(field, _op_mul_int(left, polys, field))
    lc1 = lc1_algorithm2(op).lc1
    mid = lc0(mix)
    upper = c1.shift(-n - 1) * lc1
    return lc1.divides(mid) and mid.divides(upper)
