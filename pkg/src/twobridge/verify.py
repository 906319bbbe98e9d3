"""Exhaustive cross-check sweeps over bounded families of inputs.

These drive the `verify` CLI command and the heavier parts of the test
suite.  Each sweep raises :class:`CrossCheckMismatch` at the first
disagreement, so a clean run is a positive statement about every input in
range.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cfrac import (EvenCF, PositiveCF, eval_cf, even_cf, euler_minding,
                    numerator_rec, positive_cf)
from .errors import CrossCheckMismatch
from .jones import (_t_pow, degree_and_sign, f_recursive, jones_recursive,
                    jones_via_f, specialized_f_even)
from .laurent import specialize_y
from .snake import (count_matchings, f_polynomial, isomorphic,
                    snake_from_even, snake_from_positive)


def positive_lists(max_sum, max_entry=9):
    """All positive entry lists with sum <= max_sum (compositions)."""
    def rec(rem):
        yield ()
        for v in range(1, min(rem, max_entry) + 1):
            for tail in rec(rem - v):
                yield (v,) + tail
    for lst in rec(max_sum):
        if lst:
            yield lst


def even_lists(max_sum, max_abs=6):
    """All even nonzero entry lists with sum of |entries| <= max_sum."""
    def rec(rem):
        yield ()
        for v in range(2, min(rem, max_abs) + 1, 2):
            for sign in (1, -1):
                for tail in rec(rem - v):
                    yield (sign * v,) + tail
    for lst in rec(max_sum):
        if lst:
            yield lst


def coprime_fractions(max_p):
    """All reduced p/q with 1 <= q < p <= max_p."""
    for p in range(2, max_p + 1):
        for q in range(1, p):
            if gcd(p, q) == 1:
                yield Fraction(p, q)


def check_engines(cf: EvenCF):
    """Run every applicable engine on one even CF; return the shared value."""
    ref = jones_recursive(cf)
    via = jones_via_f(cf)
    if via.poly != ref.poly:
        raise CrossCheckMismatch(
            f"recursive vs fpoly disagree on {list(cf.entries)}: "
            f"{ref.poly} vs {via.poly}",
            engines=("recursive", "fpoly"), value=cf.entries)
    if cf.entries[0] > 0:
        j, delta = degree_and_sign(cf)
        lead = delta * _t_pow(j)
        assembled = lead * f_recursive(cf)
        if assembled != ref.poly:
            raise CrossCheckMismatch(
                f"two-term recursion disagrees on {list(cf.entries)}",
                engines=("recursive", "f_recursive"), value=cf.entries)
        g = snake_from_even(cf)
        matched = lead * specialize_y(f_polynomial(g), g.d)
        if matched != ref.poly:
            raise CrossCheckMismatch(
                f"matching enumeration disagrees on {list(cf.entries)}",
                engines=("recursive", "matchings"), value=cf.entries)
    return ref


def engine_sweep(max_sum, max_abs=6):
    """Cross-check all engines on every even CF with sum |b_i| <= max_sum."""
    checked = 0
    for entries in even_lists(max_sum, max_abs):
        check_engines(EvenCF(entries))
        checked += 1
    return checked


def matching_sweep(max_sum, max_entry=9):
    """Matching counts vs both numerator evaluations, positive CFs."""
    checked = 0
    for entries in positive_lists(max_sum, max_entry):
        cf = PositiveCF(entries)
        m = count_matchings(snake_from_positive(cf))
        n1 = numerator_rec(entries)
        n2 = euler_minding(entries)
        if not m == n1 == n2:
            raise CrossCheckMismatch(
                f"matchings {m} vs numerators {n1}, {n2} on {list(entries)}",
                engines=("matchings", "numerator", "euler_minding"),
                value=entries)
        checked += 1
    return checked


def even_graph_sweep(max_p):
    """Even vs positive snake graphs on all link fractions p/q, p <= max_p."""
    checked = 0
    for r in coprime_fractions(max_p):
        if (r.numerator * r.denominator) % 2:
            continue
        pos = snake_from_positive(positive_cf(r))
        ev = snake_from_even(even_cf(r))
        if pos.d != ev.d or not isomorphic(pos, ev):
            raise CrossCheckMismatch(f"snake graphs differ for {r}",
                                     engines=("positive", "even"), value=r)
        if count_matchings(ev) != r.numerator:
            raise CrossCheckMismatch(
                f"even graph of {r} has {count_matchings(ev)} matchings",
                engines=("matchings",), value=r)
        checked += 1
    return checked


def cfrac_sweep(max_p):
    """Round trips and expansion laws for all reduced p/q, p <= max_p."""
    checked = 0
    for r in coprime_fractions(max_p):
        pos = positive_cf(r)
        if eval_cf(pos.entries) != r:
            raise CrossCheckMismatch(f"positive round trip fails for {r}")
        if pos.n >= 2:
            if eval_cf(pos.long_form().entries) != r:
                raise CrossCheckMismatch(f"long form round trip fails for {r}")
        if (r.numerator * r.denominator) % 2 == 0:
            ev = even_cf(r)
            if eval_cf(ev.entries) != r:
                raise CrossCheckMismatch(f"even round trip fails for {r}")
            if even_cf(eval_cf(ev.entries)) != ev:
                raise CrossCheckMismatch(f"even expansion unstable for {r}")
            if (r.numerator % 2 == 1) != (ev.m % 2 == 0):
                raise CrossCheckMismatch(f"parity law fails for {r}")
            _check_tail_law(r, pos, ev)
        checked += 1
    return checked


def _check_tail_law(r, pos, ev):
    """Dropping b_1 matches the even expansion of the positive tail value."""
    if ev.m < 2 or pos.n < 2:
        return
    a1 = pos.entries[0]
    tail_value = eval_cf(pos.entries[1:])  # q/r' for p/q = a1 + r'/q
    if a1 % 2 == 0:
        want = tail_value
    else:
        q, rr = tail_value.numerator, tail_value.denominator
        want = Fraction(-q, q - rr)
    if EvenCF(ev.entries[1:]) != even_cf(want):
        raise CrossCheckMismatch(f"tail law fails for {r}")


def run_verify(max_sum=10, max_p=60):
    """Run every sweep; returns a dict of check names to counts."""
    return {
        "engine_agreement": engine_sweep(max_sum),
        "matchings_vs_numerators": matching_sweep(max_sum),
        "even_vs_positive_graphs": even_graph_sweep(max_p),
        "continued_fraction_laws": cfrac_sweep(max_p),
    }
