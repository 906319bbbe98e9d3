"""Sparse exact Laurent polynomials in t^(1/2), and multilinear y-polynomials.

:class:`HLPoly` holds integer coefficients on exponents in (1/2)Z.  Exponents
are stored internally as integer counts of t^(1/2) units, so knot polynomials
(integer exponents) and 2-component-link polynomials (exponents in 1/2 + Z)
share one type; the grid parity stays queryable.

:class:`YPoly` holds multilinear polynomials in tile variables y_1..y_d, the
shape taken by snake-graph matching generating functions.  Subsets of tiles
are stored as bitsets, so at most 63 tiles are supported.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import MixedGrid, TooManyTiles, ZeroPolynomial


def _units(exponent) -> int:
    """Exponent of t as an integer number of half units."""
    f = Fraction(exponent)
    if f.denominator == 1:
        return 2 * f.numerator
    if f.denominator == 2:
        return f.numerator
    raise ValueError(f"exponent {exponent} is not a half integer")


class HLPoly:
    """Laurent polynomial in t^(1/2) with integer coefficients.

    Immutable by convention; all arithmetic returns new values.  Integers
    coerce automatically, so expressions like ``1 - p`` or ``2 * p`` work.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for units, coeff in dict(terms).items():
                if coeff:
                    clean[int(units)] = int(coeff)
        self._terms = clean

    @classmethod
    def monomial(cls, coeff=1, half_units=0) -> "HLPoly":
        """coeff * t^(half_units / 2)."""
        return cls({half_units: coeff})

    @classmethod
    def zero(cls) -> "HLPoly":
        return cls()

    @classmethod
    def one(cls) -> "HLPoly":
        return cls({0: 1})

    # -- ring structure ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, HLPoly):
            return other
        if isinstance(other, int):
            return HLPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for u, c in other._terms.items():
            c = terms.get(u, 0) + c
            if c:
                terms[u] = c
            elif u in terms:
                del terms[u]
        out = HLPoly.__new__(HLPoly)
        out._terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = HLPoly.__new__(HLPoly)
        out._terms = {u: -c for u, c in self._terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for u1, c1 in self._terms.items():
            for u2, c2 in other._terms.items():
                u = u1 + u2
                c = terms.get(u, 0) + c1 * c2
                if c:
                    terms[u] = c
                elif u in terms:
                    del terms[u]
        out = HLPoly.__new__(HLPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        out = HLPoly.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- inspection --------------------------------------------------------

    def items(self):
        """(exponent in half units, coefficient) pairs, highest first."""
        return sorted(self._terms.items(), reverse=True)

    def coeff(self, exponent) -> int:
        return self._terms.get(_units(exponent), 0)

    def bar(self) -> "HLPoly":
        """The involution t^(1/2) -> t^(-1/2): negate every exponent."""
        out = HLPoly.__new__(HLPoly)
        out._terms = {-u: c for u, c in self._terms.items()}
        return out

    def leading_term(self):
        """(highest exponent, its coefficient); exponent as a Fraction."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        u = max(self._terms)
        return Fraction(u, 2), self._terms[u]

    def trailing_term(self):
        """(lowest exponent, its coefficient)."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no trailing term")
        u = min(self._terms)
        return Fraction(u, 2), self._terms[u]

    def degree(self) -> Fraction:
        return self.leading_term()[0]

    def width(self) -> Fraction:
        """Highest minus lowest exponent."""
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no width")
        return Fraction(max(self._terms) - min(self._terms), 2)

    def grid_is_integer(self) -> bool:
        """True when every exponent lies in Z (rather than 1/2 + Z)."""
        parities = {u & 1 for u in self._terms}
        if len(parities) > 1:
            raise MixedGrid("exponents mix integers and half integers")
        return parities != {1}

    def is_alternating(self) -> bool:
        """Whether the coefficients can be written as +-(-1)^i a_i with a_i >= 0.

        The polynomial is first shifted onto the integer grid; exponents
        mixing the two grids raise :class:`MixedGrid`.  Zero coefficients are
        allowed anywhere, and the zero polynomial counts as alternating.
        """
        parities = {u & 1 for u in self._terms}
        if len(parities) > 1:
            raise MixedGrid("exponents mix integers and half integers")
        offset = parities.pop() if parities else 0
        pattern = set()
        for u, c in self._terms.items():
            k = (u - offset) // 2
            pattern.add((1 if c > 0 else -1) * (-1) ** (k & 1))
        return len(pattern) <= 1

    # -- text grammar --------------------------------------------------

    _TERM_RE = re.compile(
        r"^(?:(?P<coeff>\d+)\*)?t\^\((?P<num>-?\d+)(?P<half>/2)?\)$|^(?P<const>\d+)$"
    )

    def to_text(self) -> str:
        """Render as ``c*t^(e)`` terms joined by signs, highest exponent first.

        Exponents print as plain integers or ``k/2``; unit coefficients are
        dropped; the zero polynomial prints as ``0``.  :meth:`parse` inverts
        this exactly.
        """
        if not self._terms:
            return "0"
        parts = []
        for u, c in self.items():
            mag = abs(c)
            if u == 0:
                body = str(mag)
            else:
                e = str(u // 2) if u % 2 == 0 else f"{u}/2"
                body = f"t^({e})" if mag == 1 else f"{mag}*t^({e})"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    @classmethod
    def parse(cls, text: str) -> "HLPoly":
        """Parse the :meth:`to_text` grammar back into a polynomial."""
        s = text.strip()
        if s == "0":
            return cls.zero()
        terms = {}
        sign = 1
        if s.startswith("-"):
            sign = -1
            s = s[1:]
        for chunk in re.split(r" ([+-]) ", s):
            if chunk == "+":
                sign = 1
                continue
            if chunk == "-":
                sign = -1
                continue
            m = cls._TERM_RE.match(chunk)
            if not m:
                raise ValueError(f"bad term {chunk!r}")
            if m.group("const") is not None:
                u, c = 0, int(m.group("const"))
            else:
                c = int(m.group("coeff") or 1)
                num = int(m.group("num"))
                u = num if m.group("half") else 2 * num
            terms[u] = terms.get(u, 0) + sign * c
        return cls(terms)

    def to_latex(self) -> str:
        """Compact LaTeX form, e.g. ``-t^{5/2}-t^{1/2}`` or ``t^{2}-t+1``."""
        if not self._terms:
            return "0"
        parts = []
        for u, c in self.items():
            mag = abs(c)
            if u == 0:
                body = str(mag)
            else:
                if u == 2:
                    power = "t"
                elif u % 2 == 0:
                    power = "t^{%d}" % (u // 2)
                else:
                    power = "t^{%d/2}" % u
                body = power if mag == 1 else f"{mag}{power}"
            parts.append(("-" if c < 0 else ("+" if parts else "")) + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"HLPoly({self.to_text()!r})"


def t_power(exponent) -> HLPoly:
    """t^exponent for a half-integer exponent."""
    return HLPoly.monomial(1, _units(exponent))


def q_power(k: int) -> HLPoly:
    """q^k with q = -t^(-1); k may be negative."""
    return HLPoly.monomial(-1 if k % 2 else 1, -2 * k)


def q_integer(b: int, barred: bool = False) -> HLPoly:
    """The q-analogue [b]_q = 1 + q + ... + q^(b-1) at q = -t^(-1).

    With ``barred`` the substitution is q = -t instead, giving
    1 - t + t^2 - ...
    """
    if b < 1:
        raise ValueError(f"need b >= 1, got {b}")
    step = 2 if barred else -2
    return HLPoly({k * step: -1 if k % 2 else 1 for k in range(b)})


class YPoly:
    """Multilinear integer polynomial in tile variables y_1, ..., y_d.

    Every variable occurs with exponent 0 or 1, so a monomial is a subset of
    tile indices, stored as a bitset (bit j-1 for y_j).  Supports sums,
    subset complementation, and the t-specialization used for link
    polynomials; general multiplication is out of scope.
    """

    __slots__ = ("_terms",)

    MAX_TILES = 63

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mask, coeff in dict(terms).items():
                mask = int(mask)
                if mask < 0 or mask.bit_length() > self.MAX_TILES:
                    raise TooManyTiles(f"bitset {mask:#x} exceeds {self.MAX_TILES} tiles")
                if coeff:
                    clean[mask] = int(coeff)
        self._terms = clean

    @classmethod
    def monomial(cls, tiles=(), coeff=1) -> "YPoly":
        """coeff * prod(y_j for j in tiles), tile indices 1-based."""
        mask = 0
        for j in tiles:
            if not 1 <= j <= cls.MAX_TILES:
                raise TooManyTiles(f"tile index {j} outside 1..{cls.MAX_TILES}")
            mask |= 1 << (j - 1)
        return cls({mask: coeff})

    @classmethod
    def one(cls) -> "YPoly":
        return cls({0: 1})

    def __add__(self, other):
        if not isinstance(other, YPoly):
            return NotImplemented
        terms = dict(self._terms)
        for mask, c in other._terms.items():
            c = terms.get(mask, 0) + c
            if c:
                terms[mask] = c
            elif mask in terms:
                del terms[mask]
        return YPoly(terms)

    def __eq__(self, other):
        return isinstance(other, YPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def subsets(self):
        """(frozenset of tile indices, coefficient) pairs, smallest first."""
        out = []
        for mask, c in self._terms.items():
            tiles = frozenset(j + 1 for j in range(mask.bit_length()) if mask >> j & 1)
            out.append((tiles, c))
        out.sort(key=lambda item: (len(item[0]), sorted(item[0])))
        return out

    def coeff(self, tiles) -> int:
        mask = 0
        for j in tiles:
            mask |= 1 << (j - 1)
        return self._terms.get(mask, 0)

    def complement(self, d: int) -> "YPoly":
        """Replace every tile subset S by {1..d} \\ S."""
        if d > self.MAX_TILES:
            raise TooManyTiles(f"{d} tiles exceed {self.MAX_TILES}")
        full = (1 << d) - 1
        if any(mask & ~full for mask in self._terms):
            raise ValueError(f"polynomial uses tiles beyond 1..{d}")
        return YPoly({full ^ mask: c for mask, c in self._terms.items()})

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for tiles, c in self.subsets():
            body = "*".join(f"y{j}" for j in sorted(tiles)) or "1"
            mag = abs(c)
            if mag != 1 or body == "1":
                body = f"{mag}*{body}" if body != "1" else str(mag)
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"YPoly({self.to_text()!r})"


def specialize_y(F: YPoly, d: int) -> HLPoly:
    """Substitute y_1 = t^(-2) and y_j = -t^(-1) for j >= 2.

    ``d`` is the tile count; every variable of ``F`` must lie in 1..d.
    """
    if d > YPoly.MAX_TILES:
        raise TooManyTiles(f"{d} tiles exceed {YPoly.MAX_TILES}")
    full = (1 << d) - 1 if d else 0
    terms = {}
    for mask, c in F._terms.items():
        if mask & ~full:
            raise ValueError(f"polynomial uses tiles beyond 1..{d}")
        k = bin(mask >> 1).count("1")
        units = -4 * (mask & 1) - 2 * k
        terms[units] = terms.get(units, 0) + c * (-1 if k % 2 else 1)
    return HLPoly(terms)
