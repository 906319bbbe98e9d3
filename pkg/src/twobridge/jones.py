"""Jones polynomials of 2-bridge links, by three independent engines.

Input is a continued fraction; output is an exact Laurent polynomial in
t^(1/2).  The engines:

* ``jones_recursive`` - the skein recursion, peeling one entry of the even
  continued fraction at a time;
* ``jones_direct`` - the closed continued-fraction-of-Laurent-polynomials
  formula evaluated on a positive continued fraction;
* ``jones_via_f`` - normalization data (degree and leading sign) combined
  with the specialized matching generating function.

All three agree exactly; the cross-check is part of the test suite.

Orientation conventions.  An even continued fraction determines the link
*and* its orientation, so the even entries are the authoritative input.  A
rational p/q > 1 with p*q even maps to its unique even expansion.  When p
and q are both odd only the partner p/(p - q) has an even expansion, and the
link of the positive continued fraction is the one carrying the *negated*
even entries (value -p/(p-q)); using the positive-value expansion instead
would mirror the link (visible already for the trefoil).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfrac import (EvenCF, PositiveCF, Rat, _sgn, eval_cf, even_cf_for_link,
                    numerator_rec, positive_cf, tau, type_sequence)
from .errors import HypothesisViolated, WrongOrientation, ZeroPolynomial
from .laurent import HLPoly, q_integer, q_power

#: smallest hyperbolic volume bound per twist region, and the volume of a
#: regular ideal tetrahedron (for the upper bound 30*v3 per region)
VOLUME_LOWER_SLOPE = 0.35367
V3 = 1.0149

_TWO_UNKNOTS = HLPoly({-1: -1, 1: -1})  # -t^(-1/2) - t^(1/2)
_EPSILON = HLPoly({-3: 1, -1: -1})      # t^(-3/2) - t^(-1/2)
_EPSILON_BAR = HLPoly({3: 1, 1: -1})    # t^(3/2) - t^(1/2)


def skein_constants():
    """(epsilon, epsilon-bar, unknot value, two-unknots value)."""
    return _EPSILON, _EPSILON_BAR, HLPoly.one(), _TWO_UNKNOTS


@dataclass(frozen=True)
class JonesResult:
    """A Jones polynomial together with its normalization data.

    ``poly == leading_sign * t^degree * normalized`` holds exactly, and the
    normalized polynomial has constant term 1 and degree 0.
    """

    poly: HLPoly
    degree: Fraction
    leading_sign: int
    normalized: HLPoly
    engine: str


def _half_units(j) -> int:
    j = Fraction(j)
    return j.numerator * (2 // j.denominator)  # denominator is 1 or 2


def _result(poly: HLPoly, engine: str) -> JonesResult:
    j, c = poly.leading_term()
    if c not in (1, -1):
        raise ZeroPolynomial(f"leading coefficient {c} is not a unit")
    normalized = poly * HLPoly.monomial(c, -_half_units(j))
    return JonesResult(poly=poly, degree=j, leading_sign=c,
                       normalized=normalized, engine=engine)


def _t_pow(j: Fraction) -> HLPoly:
    return HLPoly.monomial(1, _half_units(j))


def _assemble(j, delta, normalized, engine) -> JonesResult:
    return JonesResult(poly=delta * _t_pow(j) * normalized, degree=Fraction(j),
                       leading_sign=delta, normalized=normalized, engine=engine)


def jones_recursive(cf: EvenCF) -> JonesResult:
    """Skein-recursion engine.

    Peeling the last entry b_m of the even continued fraction removes one
    braid; which smoothing applies depends on the braid sign, the last entry
    of the type sequence:

    * sign -: V_m = t^(-|b_m|) V_(m-2) - t^(-1/2) [|b_m|]_q V_(m-1)
    * sign +: V_m = t^(+|b_m|) V_(m-2) - t^(+1/2) [|b_m|]_qbar V_(m-1)

    with the conventions V(empty) = 1 (unknot) and V at index -1 equal to
    the two-unknot value -t^(-1/2) - t^(1/2).
    """
    v_prev2, v_prev1 = _TWO_UNKNOTS, HLPoly.one()
    for k, b in enumerate(cf.entries, start=1):
        braid_sign = _sgn(b) * (-1) ** (k + 1)
        ab = abs(b)
        if braid_sign < 0:
            v = (HLPoly.monomial(1, -2 * ab) * v_prev2
                 - HLPoly.monomial(1, -1) * q_integer(ab) * v_prev1)
        else:
            v = (HLPoly.monomial(1, 2 * ab) * v_prev2
                 - HLPoly.monomial(1, 1) * q_integer(ab, barred=True) * v_prev1)
        v_prev2, v_prev1 = v_prev1, v
    return _result(v_prev1, "recursive")


def degree_and_sign(cf: EvenCF):
    """Degree j and leading sign of the Jones polynomial, in closed form.

    j = sum over i of max((-1)^(i+1) b_i + sign(b_i b_(i-1))/2, -1/2) with
    the convention sign(b_0) = 1; the leading sign is (-1)^(m - tau) where
    tau counts the (+, +) pairs in the type sequence.
    """
    j = Fraction(0)
    prev = 1
    for i, b in enumerate(cf.entries, start=1):
        term = Fraction((-1) ** (i + 1) * b) + Fraction(_sgn(b * prev), 2)
        j += max(term, Fraction(-1, 2))
        prev = b
    delta = (-1) ** (cf.m - tau(type_sequence(cf)))
    return j, delta


def specialized_f_positive(cf: PositiveCF) -> HLPoly:
    """Specialized matching generating function of a positive CF.

    The numerator of the continued fraction of Laurent polynomials whose
    entries are, with q = -t^(-1) and l_i = a_1 + ... + a_i:

        [a_1 + 1]_q - q,  [a_2]_q q^(-l_2),  [a_3]_q q^(l_2 + 1),  ...

    (even positions carry q^(-l_i), odd positions q^(l_(i-1) + 1)); for even
    n the numerator is further multiplied by q^(l_n).  The result has
    constant term 1, lowest term (-1)^(d+1) t^(-d-1) with d = sum(a_i) - 1,
    and equals the Jones polynomial divided by its leading term.
    """
    a = cf.entries
    ell = cf.partial_sums()
    terms = [q_integer(a[0] + 1) - q_power(1)]
    for i in range(2, cf.n + 1):
        if i % 2 == 0:
            terms.append(q_integer(a[i - 1]) * q_power(-ell[i - 1]))
        else:
            terms.append(q_integer(a[i - 1]) * q_power(ell[i - 2] + 1))
    result = numerator_rec(terms)
    if cf.n % 2 == 0:
        result = q_power(ell[-1]) * result
    return result


def specialized_f_even(cf: EvenCF) -> HLPoly:
    """Specialized matching generating function of an even CF.

    For value r/s > 0 this is the positive-CF polynomial of r/s; for
    negative value it is (-t^(-1))^(d+1) times the bar involution of the
    positive-CF polynomial of |r/s|.
    """
    r = eval_cf(cf.entries)
    pos = positive_cf(abs(r))
    F = specialized_f_positive(pos)
    if cf.entries[0] > 0:
        return F
    return q_power(pos.d + 1) * F.bar()


def f_recursive(cf: EvenCF) -> HLPoly:
    """Two-term recursion for the specialized generating function, b_1 > 0.

    F_m = mu(t) F_(m-2) + nu(t) [|b_m|]_q F_(m-1), where mu and nu depend on
    the tail of the type sequence (extended by a leading sentinel minus, the
    braid-sign convention for index 0):

        tail (-,-):    nu = 1,        mu = t^(-|b_m|+1)
        tail (-,+,-):  nu = 1,        mu = t^(-|b_m|-|b_(m-1)|)
        tail (+,+,-):  nu = 1,        mu = -t^(-|b_m|-|b_(m-1)|+1)
        tail (-,+):    nu = -t^(-1),  mu = 1
        tail (-,+,+):  nu = 1,        mu = -t^(-|b_(m-1)|)
        tail (+,+,+):  nu = 1,        mu = t^(-|b_(m-1)|+1)

    Base cases: F of the empty prefix is 1, and F_(b_1) = [b_1 + 1]_q - q.
    """
    bs = cf.entries
    if bs[0] < 0:
        raise WrongOrientation("recursion requires b_1 > 0; mirror first")
    types = [-1, *type_sequence(cf).types]  # sentinel at index 0
    f_prev2 = HLPoly.one()
    f_prev1 = q_integer(bs[0] + 1) - q_power(1)
    for k in range(2, cf.m + 1):
        t2, t1, t0 = types[k - 2], types[k - 1], types[k]
        ab, ab1 = abs(bs[k - 1]), abs(bs[k - 2])
        nu = HLPoly.one()
        if (t1, t0) == (-1, -1):
            mu = HLPoly.monomial(1, 2 * (1 - ab))
        elif (t1, t0) == (1, -1):
            mu = (HLPoly.monomial(1, -2 * (ab + ab1)) if t2 == -1
                  else HLPoly.monomial(-1, 2 * (1 - ab - ab1)))
        elif (t1, t0) == (-1, 1):
            nu = HLPoly.monomial(-1, -2)
            mu = HLPoly.one()
        else:
            mu = (HLPoly.monomial(-1, -2 * ab1) if t2 == -1
                  else HLPoly.monomial(1, 2 * (1 - ab1)))
        f = mu * f_prev2 + nu * q_integer(ab) * f_prev1
        f_prev2, f_prev1 = f_prev1, f
    return f_prev1


def jones_via_f(cf: EvenCF) -> JonesResult:
    """Normalization-times-generating-function engine."""
    j, delta = degree_and_sign(cf)
    return _assemble(j, delta, specialized_f_even(cf), "fpoly")


def oriented_even_cf(r: Rat) -> EvenCF:
    """Even continued fraction matching the orientation of the link of r.

    For p*q even this is the even expansion of p/q itself.  For p, q both
    odd the link carries the *negated* even expansion of p/(p - q); the
    positive-value expansion describes the mirror image.
    """
    r = Fraction(r)
    bs = even_cf_for_link(r)
    if (r.numerator * r.denominator) % 2:
        return bs.mirrored()
    return bs


def jones_direct(cf: PositiveCF) -> JonesResult:
    """Closed-formula engine on a positive continued fraction.

    The normalized polynomial is the continued-fraction numerator of
    :func:`specialized_f_positive`; degree and leading sign come from
    :func:`degree_and_sign` on the orientation-consistent even expansion of
    the value.
    """
    r = eval_cf(cf.entries)
    j, delta = degree_and_sign(oriented_even_cf(r))
    return _assemble(j, delta, specialized_f_positive(cf), "direct")


def mirror(res: JonesResult) -> JonesResult:
    """Mirror image: the bar involution on the polynomial."""
    return _result(res.poly.bar(), res.engine)


def boundary_coefficients(cf: PositiveCF):
    """First three and last three coefficients of the Jones polynomial.

    For [a_1, ..., a_n] with a_1, a_n >= 2, write the normalized polynomial
    as sum of (-1)^i v_i t^(-i) with v_i >= 0 and l = a_1 + ... + a_n.
    Returns (v_0, v_1, v_2, v_(l-2), v_(l-1), v_l).  With alpha counting the
    entries equal to 1 and n = 2k or 2k+1, the closed forms are polynomial
    in k with Kronecker corrections for a_1 = 2 and a_n = 2.  For even n the
    v_2 correction comes from the q^2 term of [a_n]_q, which is present only
    when a_n >= 3 (peel the last entry: the polynomial is [a_n]_q times the
    one-shorter value plus a high-order remainder, so v_2 = v_1' + v_2' +
    [a_n >= 3]; unrolling gives the stated form).  The six formulas describe
    six distinct positions, so they require l >= 5.
    """
    a = cf.entries
    if a[0] < 2 or a[-1] < 2:
        raise HypothesisViolated("first and last entries must be >= 2")
    n = cf.n
    k = n // 2
    alpha = sum(1 for x in a if x == 1)
    d1 = 1 if a[0] == 2 else 0
    dn = 1 if a[-1] == 2 else 0
    v0 = vl = 1
    v1 = k
    if n % 2:
        vl1 = k + 1
        v2 = (k + 1) * (k + 2) // 2 - alpha
        vl2 = (k * k + 5 * k + 2) // 2 - alpha - d1 - dn
    else:
        vl1 = k
        v2 = k * (k + 3) // 2 - alpha - dn
        vl2 = k * (k + 3) // 2 - alpha - d1
    return v0, v1, v2, vl2, vl1, vl


def volume_bounds(cf: PositiveCF):
    """Bounds on the hyperbolic volume of the link complement.

    Valid when every entry is >= 3: the volume lies strictly between
    0.35367 (n - 2) and 30 * v3 * (n - 1) with v3 ~ 1.0149 the volume of a
    regular ideal tetrahedron.  These are the only floating-point values in
    the package.
    """
    if any(x < 3 for x in cf.entries):
        raise HypothesisViolated("volume bounds require every entry >= 3")
    n = cf.n
    return VOLUME_LOWER_SLOPE * (n - 2), 30 * V3 * (n - 1)
