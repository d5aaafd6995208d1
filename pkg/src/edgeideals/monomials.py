"""Exact monomial and monomial-ideal arithmetic.

Monomials are exponent maps over named variables, ideals are stored by
their unique minimal generating set, and all arithmetic is exact
(arbitrary-precision integer exponents).  Every value is immutable after
construction and may be shared freely between threads.

Textual syntax, used by the CLI and the tests:

    monomial   x1*x2^3          '*' separates variables, '^' exponents
    polarized  x1_2             base name, underscore, polarization index
    ideal      (x1*x2^3, x2)    comma-separated generators in parentheses
    zero ideal (0)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping


class IdealSyntaxError(ValueError):
    """Raised on malformed monomial/ideal text; carries the offending position."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


def _natural_key(name: str) -> tuple:
    """Sort key that orders x2 before x10 (digit runs compare numerically)."""
    parts = []
    for run in re.findall(r"\d+|\D+", name):
        if run.isdigit():
            parts.append((1, "", int(run)))
        else:
            parts.append((0, run, 0))
    return tuple(parts)


@total_ordering
@dataclass(frozen=True)
class Variable:
    """A polynomial-ring variable, optionally carrying a polarization index.

    Ordinary variables have ``polar=None``; polarization produces doubly
    indexed variables rendered ``base_j`` (j >= 1).
    """

    base: str
    polar: int | None = None

    def __post_init__(self):
        if not self.base or not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", self.base):
            raise ValueError(f"invalid variable name: {self.base!r}")
        if re.search(r"_\d+$", self.base):
            # would render identically to a polarized variable
            raise ValueError(
                f"variable name {self.base!r} ends in _<digits>, which is reserved "
                f"for polarization indices"
            )
        if self.polar is not None and self.polar < 1:
            raise ValueError(f"polarization index must be >= 1, got {self.polar}")

    def is_polarized(self) -> bool:
        return self.polar is not None

    def sort_key(self) -> tuple:
        return (_natural_key(self.base), self.polar or 0)

    def __lt__(self, other: "Variable") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return self.base if self.polar is None else f"{self.base}_{self.polar}"

    def __repr__(self) -> str:
        return f"Variable({str(self)!r})"


@total_ordering
class Monomial:
    """A monomial, stored as a map from Variable to positive exponent.

    The empty map is the unit monomial 1.  Monomials are immutable and
    hashable; ordering is by (degree, sorted exponent vector), which is a
    deterministic total order used for stable output.
    """

    __slots__ = ("_exp", "_key", "_hash")

    def __init__(self, exponents: Mapping[Variable, int] | Iterable[tuple[Variable, int]] = ()):
        exp = dict(exponents.items() if isinstance(exponents, Mapping) else exponents)
        for v, e in exp.items():
            if not isinstance(v, Variable):
                raise TypeError(f"monomial keys must be Variable, got {v!r}")
            if e < 0:
                raise ValueError(f"negative exponent {e} for {v}")
        exp = {v: e for v, e in exp.items() if e != 0}
        self._exp = exp
        self._key = tuple(sorted(((v, e) for v, e in exp.items()), key=lambda t: t[0].sort_key()))
        self._hash = hash(self._key)

    @property
    def exponents(self) -> dict[Variable, int]:
        return dict(self._exp)

    def exponent(self, v: Variable) -> int:
        return self._exp.get(v, 0)

    def degree(self) -> int:
        return sum(self._exp.values())

    def support(self) -> frozenset[Variable]:
        return frozenset(self._exp)

    def is_unit(self) -> bool:
        return not self._exp

    def divides(self, other: "Monomial") -> bool:
        return all(other._exp.get(v, 0) >= e for v, e in self._exp.items())

    def lcm(self, other: "Monomial") -> "Monomial":
        exp = dict(self._exp)
        for v, e in other._exp.items():
            if exp.get(v, 0) < e:
                exp[v] = e
        return Monomial(exp)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exp = dict(self._exp)
        for v, e in other._exp.items():
            exp[v] = exp.get(v, 0) + e
        return Monomial(exp)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact division; raises if ``other`` does not divide ``self``."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        exp = dict(self._exp)
        for v, e in other._exp.items():
            exp[v] -= e
        return Monomial(exp)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._key == other._key

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        a = (self.degree(), tuple((v.sort_key(), e) for v, e in self._key))
        b = (other.degree(), tuple((v.sort_key(), e) for v, e in other._key))
        return a < b

    def __str__(self) -> str:
        if not self._exp:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self._key)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


class MonomialIdeal:
    """A monomial ideal, held by its minimal generators over an ordered ambient.

    Construct through :func:`make_ideal`, which minimalizes; the direct
    constructor trusts its input.  ``generators == ()`` is the zero ideal.
    The unit ideal is not representable.
    """

    __slots__ = ("ambient", "generators")

    def __init__(self, ambient: tuple[Variable, ...], generators: tuple[Monomial, ...]):
        self.ambient = tuple(ambient)
        self.generators = tuple(generators)

    def is_zero(self) -> bool:
        return not self.generators

    def support(self) -> frozenset[Variable]:
        out: set[Variable] = set()
        for g in self.generators:
            out |= g.support()
        return frozenset(out)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ambient == other.ambient
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self.generators)))

    def __str__(self) -> str:
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self) -> str:
        return f"MonomialIdeal({str(self)})"

    def __contains__(self, m: Monomial) -> bool:
        """Ideal membership: some minimal generator divides ``m``."""
        return any(g.divides(m) for g in self.generators)


def make_ideal(raw_generators: Iterable[Monomial], ambient: Iterable[Variable]) -> MonomialIdeal:
    """Build the ideal generated by ``raw_generators``, minimalizing them.

    Rejects unit generators (the unit ideal is unsupported) and any
    generator using a variable outside ``ambient``.  Idempotent: feeding a
    minimal generating set back returns the same ideal.
    """
    amb = tuple(ambient)
    if len(set(amb)) != len(amb):
        raise ValueError("ambient contains repeated variables")
    amb_set = set(amb)
    gens: list[Monomial] = []
    for g in raw_generators:
        if g.is_unit():
            raise ValueError("unit monomial among generators: the unit ideal is unsupported")
        outside = g.support() - amb_set
        if outside:
            names = ", ".join(sorted(str(v) for v in outside))
            raise ValueError(f"generator {g} uses variables outside the ambient: {names}")
        if g not in gens:
            gens.append(g)
    minimal = [g for g in gens if not any(h is not g and h.divides(g) for h in gens)]
    minimal.sort()
    return MonomialIdeal(amb, tuple(minimal))


def lcm_of(a: Monomial, b: Monomial) -> Monomial:
    """Componentwise maximum of exponents."""
    return a.lcm(b)


def intersect(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    """Intersection of two monomial ideals over the same ambient.

    For monomial ideals the pairwise lcms of the generators generate the
    intersection; the zero ideal absorbs.
    """
    if J.ambient != K.ambient:
        raise ValueError("intersect requires identical ambients")
    if J.is_zero() or K.is_zero():
        return MonomialIdeal(J.ambient, ())
    return make_ideal((u.lcm(v) for u in J.generators for v in K.generators), J.ambient)


def ideal_sum(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The ideal I + J over the union ambient (I's order first, then J's new vars)."""
    extra = [v for v in J.ambient if v not in set(I.ambient)]
    return make_ideal(I.generators + J.generators, I.ambient + tuple(extra))


def multiply_external(u: Monomial, I: MonomialIdeal) -> MonomialIdeal:
    """The product (u)·I for a monomial u with support disjoint from I's.

    Overlapping support is rejected.  The result is already minimal, since
    multiplying by a fixed external factor preserves divisibility.
    """
    overlap = u.support() & I.support()
    if overlap:
        names = ", ".join(sorted(str(v) for v in overlap))
        raise ValueError(f"external factor shares support with the ideal: {names}")
    extra = sorted(u.support() - set(I.ambient))
    ambient = I.ambient + tuple(extra)
    return make_ideal((u * g for g in I.generators), ambient)


def polarize_monomial(u: Monomial) -> Monomial:
    """Replace each v^a by the product of the a distinct variables v_1..v_a."""
    exp: dict[Variable, int] = {}
    for v, a in u.exponents.items():
        for j in range(1, a + 1):
            exp[Variable(v.base, j)] = 1
    return Monomial(exp)


def polarize(I: MonomialIdeal) -> MonomialIdeal:
    """Polarization: a squarefree ideal in doubly indexed variables.

    Each generator v1^{a1}···vn^{an} maps to the product of v_i,1..v_i,ai;
    the ambient consists of v_j for 1 <= j <= (max exponent of v over all
    generators), ordered by (base variable order, polarization index).
    Degrees and the whole Betti table are preserved.
    """
    if I.is_zero():
        raise ValueError("cannot polarize the zero ideal")
    if any(v.is_polarized() for v in I.ambient):
        raise ValueError("input is already polarized; refusing to double-index")
    max_exp = {v: 0 for v in I.ambient}
    for g in I.generators:
        for v, e in g.exponents.items():
            if e > max_exp[v]:
                max_exp[v] = e
    ambient = tuple(
        Variable(v.base, j) for v in I.ambient for j in range(1, max_exp[v] + 1)
    )
    polarized = [polarize_monomial(g) for g in I.generators]
    out = make_ideal(polarized, ambient)
    if len(out.generators) != len(I.generators):
        raise AssertionError("polarization collapsed generators; input was not minimal")
    return out


_TOKEN = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*|\d+|[*^(),])")


def _split_polar(name: str, text: str, pos: int) -> Variable:
    m = re.fullmatch(r"(.+?)_(\d+)", name)
    if m:
        idx = int(m.group(2))
        if idx < 1:
            raise IdealSyntaxError(f"polarization index must be >= 1 in {name!r}", text, pos)
        return Variable(m.group(1), idx)
    return Variable(name)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str | None:
        m = _TOKEN.match(self.text, self.pos)
        return m.group(1) if m else None

    def next(self) -> tuple[str, int]:
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos :].strip()
            what = f"unexpected character {rest[0]!r}" if rest else "unexpected end of input"
            raise IdealSyntaxError(what, self.text, self.pos)
        self.pos = m.end()
        return m.group(1), m.start(1)

    def at_end(self) -> bool:
        return not self.text[self.pos :].strip()


def _parse_monomial_tokens(sc: _Scanner) -> Monomial:
    exp: dict[Variable, int] = {}
    while True:
        tok, tokpos = sc.next()
        if tok == "1" and not exp:
            pass  # unit monomial
        elif tok[0].isdigit() or tok in "*^(),":
            raise IdealSyntaxError(f"expected a variable, got {tok!r}", sc.text, tokpos)
        else:
            v = _split_polar(tok, sc.text, tokpos)
            e = 1
            if sc.peek() == "^":
                sc.next()
                etok, epos = sc.next()
                if not etok.isdigit() or int(etok) < 1:
                    raise IdealSyntaxError(f"expected a positive exponent, got {etok!r}", sc.text, epos)
                e = int(etok)
            exp[v] = exp.get(v, 0) + e
        if sc.peek() == "*":
            sc.next()
            continue
        return Monomial(exp)


def parse_monomial(text: str) -> Monomial:
    """Parse ``x1*x2^3`` syntax; ``1`` is the unit monomial."""
    sc = _Scanner(text)
    m = _parse_monomial_tokens(sc)
    if not sc.at_end():
        raise IdealSyntaxError("trailing input after monomial", text, sc.pos)
    return m


def parse_ideal(text: str, ambient: Iterable[Variable] | None = None) -> MonomialIdeal:
    """Parse ``(g1, g2, ...)``; ``(0)`` and ``()`` denote the zero ideal.

    When ``ambient`` is omitted it is the sorted set of variables appearing
    in the generators.
    """
    sc = _Scanner(text)
    tok, tokpos = sc.next()
    if tok != "(":
        raise IdealSyntaxError(f"expected '(', got {tok!r}", text, tokpos)
    gens: list[Monomial] = []
    if sc.peek() == ")":
        sc.next()
    elif sc.peek() == "0":
        sc.next()
        tok, tokpos = sc.next()
        if tok != ")":
            raise IdealSyntaxError(f"expected ')' after 0, got {tok!r}", text, tokpos)
    else:
        while True:
            gens.append(_parse_monomial_tokens(sc))
            tok, tokpos = sc.next()
            if tok == ")":
                break
            if tok != ",":
                raise IdealSyntaxError(f"expected ',' or ')', got {tok!r}", text, tokpos)
    if not sc.at_end():
        raise IdealSyntaxError("trailing input after ideal", text, sc.pos)
    if ambient is None:
        seen: set[Variable] = set()
        for g in gens:
            seen |= g.support()
        ambient = sorted(seen)
    return make_ideal(gens, ambient)
