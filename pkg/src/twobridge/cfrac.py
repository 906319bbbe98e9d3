"""Exact continued-fraction arithmetic.

A continued fraction ``[c1, c2, ..., ck]`` stands for the nested expression
``c1 + 1/(c2 + 1/(... + 1/ck))``.  Two families matter for 2-bridge links:

* *positive* continued fractions: every entry >= 1 (the classical Euclidean
  expansion of a rational p/q > 1);
* *even* continued fractions: every entry a nonzero even integer, signs
  allowed.  A reduced fraction p/q admits one exactly when p*q is even, and
  then the expansion is unique; its entry signs carry the orientation data
  of the associated link.

Rationals are plain :class:`fractions.Fraction` values (arbitrary precision,
always reduced, positive denominator), aliased as :data:`Rat`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BothOdd, NoEvenQuotient, OutOfRange, ZeroTail

Rat = Fraction


def _sgn(x):
    return 1 if x > 0 else (-1 if x < 0 else 0)


@dataclass(frozen=True)
class PositiveCF:
    """Validated positive continued fraction [a_1, ..., a_n], all a_i >= 1."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(a) for a in self.entries)
        if not entries:
            raise ValueError("positive continued fraction needs >= 1 entry")
        if any(a < 1 for a in entries):
            raise ValueError(f"entries must all be >= 1, got {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def n(self):
        return len(self.entries)

    @property
    def d(self):
        """Tile count of the associated snake graph: a_1 + ... + a_n - 1."""
        return sum(self.entries) - 1

    def partial_sums(self):
        """Running sums (a_1, a_1+a_2, ..., a_1+...+a_n)."""
        out, acc = [], 0
        for a in self.entries:
            acc += a
            out.append(acc)
        return tuple(out)

    def value(self) -> Rat:
        return eval_cf(self.entries)

    def long_form(self) -> "PositiveCF":
        """The equivalent expansion [a_1, ..., a_n - 1, 1].

        Requires a_n >= 2; this is the only freedom in the positive
        expansion of a rational.
        """
        if self.entries[-1] < 2:
            raise OutOfRange("last entry must be >= 2 to split off a 1")
        return PositiveCF(self.entries[:-1] + (self.entries[-1] - 1, 1))


@dataclass(frozen=True)
class EvenCF:
    """Validated even continued fraction [b_1, ..., b_m], b_i even, nonzero."""

    entries: tuple

    def __post_init__(self):
        entries = tuple(int(b) for b in self.entries)
        if not entries:
            raise ValueError("even continued fraction needs >= 1 entry")
        if any(b == 0 or b % 2 for b in entries):
            raise ValueError(f"entries must all be even and nonzero, got {entries}")
        object.__setattr__(self, "entries", entries)

    @property
    def m(self):
        return len(self.entries)

    def value(self) -> Rat:
        return eval_cf(self.entries)

    def mirrored(self) -> "EvenCF":
        """Entrywise negation; evaluates to the negated rational."""
        return EvenCF(tuple(-b for b in self.entries))


@dataclass(frozen=True)
class SignSeq:
    """Crossing signs: |b_i| copies of (-1)^(i+1) sgn(b_i), concatenated.

    ``block_lengths`` records where the blocks of the source even continued
    fraction start, since adjacent blocks may carry the same sign.
    """

    signs: tuple
    block_lengths: tuple

    def __post_init__(self):
        object.__setattr__(self, "signs", tuple(self.signs))
        object.__setattr__(self, "block_lengths", tuple(self.block_lengths))
        if sum(self.block_lengths) != len(self.signs):
            raise ValueError("block lengths do not add up to the sign count")

    def __len__(self):
        return len(self.signs)


@dataclass(frozen=True)
class TypeSeq:
    """Braid signs ((-1)^(i+1) sgn(b_i)) for i = 1..m."""

    types: tuple

    def __post_init__(self):
        object.__setattr__(self, "types", tuple(self.types))
        if any(t not in (1, -1) for t in self.types):
            raise ValueError("type entries must be +1 or -1")

    def __len__(self):
        return len(self.types)


def eval_cf(entries) -> Rat:
    """Evaluate [c_1, ..., c_k] exactly, right to left.

    Raises :class:`ZeroTail` if the last entry is zero or some proper suffix
    evaluates to zero (the nesting would divide by it).  Valid
    PositiveCF/EvenCF entry lists never trigger this.
    """
    entries = [int(c) for c in entries]
    if not entries:
        raise ZeroTail("empty continued fraction has no value")
    if entries[-1] == 0:
        raise ZeroTail("last entry is zero")
    acc = Fraction(entries[-1])
    for c in reversed(entries[:-1]):
        if acc == 0:
            raise ZeroTail("suffix evaluates to zero")
        acc = c + 1 / acc
    return acc


def positive_cf(r: Rat) -> PositiveCF:
    """Euclidean expansion of a rational r >= 1 into a positive CF.

    Canonical form: the last entry is >= 2 whenever there are >= 2 entries
    (this is automatic for the Euclidean algorithm).
    """
    r = Fraction(r)
    if r < 1:
        raise OutOfRange(f"need a rational >= 1, got {r}")
    p, q = r.numerator, r.denominator
    entries = []
    while q:
        a, rem = divmod(p, q)
        entries.append(a)
        p, q = q, rem
    return PositiveCF(tuple(entries))


def even_division(p: int, q: int):
    """Split p = b*q + s with b even and nonzero and -|q| <= s < |q|.

    The half-open window of length 2|q| pins (b, s) uniquely; for
    p > q > 0 this is the classical even division step.  Raises
    :class:`NoEvenQuotient` when the unique candidate is b = 0 (possible
    only when |p| < |q|, which the expansion recursions never produce).
    """
    if q == 0:
        raise ZeroDivisionError("even division by zero")
    if q > 0:
        k = (p + q) // (2 * q)
    else:
        k = -((q - p) // (2 * q))
    b = 2 * k
    s = p - b * q
    if not -abs(q) <= s < abs(q):  # pragma: no cover - window arithmetic
        raise AssertionError(f"even division window broken for ({p}, {q})")
    if b == 0:
        raise NoEvenQuotient(f"no nonzero even quotient for ({p}, {q})")
    return b, s


def even_cf(r: Rat) -> EvenCF:
    """The unique even continued fraction of r = p/q, |r| > 1, p*q even.

    Raises :class:`BothOdd` when numerator and denominator are both odd
    (no even expansion exists), :class:`OutOfRange` for |r| <= 1.
    """
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    if p % 2 and q % 2:
        raise BothOdd(f"{r} has odd numerator and denominator")
    if abs(r) <= 1:
        raise OutOfRange(f"need |r| > 1, got {r}")
    entries = []
    while True:
        b, s = even_division(p, q)
        entries.append(b)
        if s == 0:
            break
        p, q = q, s
    return EvenCF(tuple(entries))


def even_cf_for_link(r: Rat) -> EvenCF:
    """Even continued fraction describing the link of r = p/q > 1.

    Uses p/q itself when p*q is even; otherwise exactly one of q, p-q is
    even and the isotopic partner p/(p-q) is expanded instead.
    """
    r = Fraction(r)
    p, q = r.numerator, r.denominator
    if not p > q >= 1:
        raise OutOfRange(f"need p > q >= 1, got {r}")
    if (p * q) % 2 == 0:
        return even_cf(r)
    return even_cf(Fraction(p, p - q))


def numerator_rec(entries):
    """Numerator of a continued fraction over any commutative ring with 1.

    N[] = 1, N[x1] = x1, and N[x1..xk] = xk * N[x1..x(k-1)] + N[x1..x(k-2)].
    For a positive continued fraction of integers this is the numerator of
    the reduced value.  Entries may be integers or ring elements such as
    Laurent polynomials.
    """
    prev2, prev1 = 0, 1
    for x in entries:
        prev2, prev1 = prev1, x * prev1 + prev2
    return prev1


def euler_minding(entries):
    """Numerator via the pair-deletion expansion.

    Sum, over all ways of deleting disjoint *adjacent* pairs from the entry
    list, of the product of the remaining entries.  Equals
    :func:`numerator_rec` on every input, by an entirely different route
    (no division, no two-term recurrence).
    """
    xs = list(entries)
    n = len(xs)
    leaves = []

    def walk(i, acc):
        if i >= n:
            leaves.append(acc)
            return
        walk(i + 1, acc * xs[i])
        if i + 1 < n:
            walk(i + 2, acc)

    walk(0, 1)
    total = leaves[0]
    for term in leaves[1:]:
        total = total + term
    return total


def sign_sequence(cf: EvenCF) -> SignSeq:
    """|b_1| copies of sgn(b_1), then |b_2| copies of -sgn(b_2), and so on."""
    signs = []
    lengths = []
    for i, b in enumerate(cf.entries, start=1):
        s = _sgn(b) * (-1) ** (i + 1)
        signs.extend([s] * abs(b))
        lengths.append(abs(b))
    return SignSeq(tuple(signs), tuple(lengths))


def type_sequence(cf: EvenCF) -> TypeSeq:
    """(sgn(b_1), -sgn(b_2), ..., (-1)^(m+1) sgn(b_m))."""
    return TypeSeq(tuple(_sgn(b) * (-1) ** (i + 1)
                         for i, b in enumerate(cf.entries, start=1)))


def tau(ts: TypeSeq) -> int:
    """Number of (+, +) pairs of consecutive entries, counted overlapping."""
    return sum(1 for a, b in zip(ts.types, ts.types[1:]) if a == 1 and b == 1)
