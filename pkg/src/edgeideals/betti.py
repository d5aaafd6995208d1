"""Graded Betti tables of monomial ideals, computed exactly.

The engine walks the lcm lattice of the minimal generators: every
multigraded Betti number lives at the lcm of a subset of generators, and
the Betti number at multidegree b is the reduced homology rank, one
dimension down, of the strand complex on supp(b) whose faces are the
squarefree σ with x^{b-σ} still in the ideal.

Strand complexes are unions of full simplices (one per generator
dividing x^b, on the complement of that generator's tight variables).
Small strands are enumerated literally and run through integer boundary
matrices; large strands are exchanged for the nerve of the simplex
cover, which has the same homotopy type and stays small.  Everything is
exact; a per-table Euler-characteristic identity is asserted as a
self-check.

Strand computations are pure functions of immutable values and safe to
fan out in parallel; the table merge walks candidate degrees in sorted
order, so the result never depends on completion order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Mapping

from .monomials import Monomial, MonomialIdeal, Variable
from .simplicial import (
    SimplicialComplexOnSupport,
    _popcount,
    homology_ranks_of_masks,
    maximalize,
    nerve_face_masks,
)

DEFAULT_GENERATOR_GUARD = 20
MAX_STRAND_GROUND = 24
DIRECT_FACE_LIMIT = 256
EULER_CHECK_LIMIT = 16  # 2^m subset sweep; beyond this the self-check is skipped

GUARD_ENV_VAR = "EIL_GUARD_GENS"


class GuardError(RuntimeError):
    """A desk-scale sizing guard tripped; the computation was refused."""


def generator_guard() -> int:
    """Maximum generator count the engine will accept (env-overridable)."""
    raw = os.environ.get(GUARD_ENV_VAR)
    if raw is None:
        return DEFAULT_GENERATOR_GUARD
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"{GUARD_ENV_VAR} must be an integer, got {raw!r}") from exc
    if value < 1:
        raise ValueError(f"{GUARD_ENV_VAR} must be >= 1, got {value}")
    return value


def _check_generator_guard(I: MonomialIdeal) -> None:
    limit = generator_guard()
    if len(I.generators) > limit:
        raise GuardError(
            f"ideal has {len(I.generators)} generators; the guard allows {limit} "
            f"(override with {GUARD_ENV_VAR})"
        )


class BettiTable:
    """Sparse graded Betti table: (homological index i, degree j) -> count.

    ``convention`` is ``of_ideal`` or ``of_quotient``; the two are related
    by the usual shift (quotient row 0 is a single 1 at degree 0, and
    quotient entry (i+1, j) is ideal entry (i, j)).
    """

    __slots__ = ("convention", "entries")

    def __init__(self, convention: str, entries: Mapping[tuple[int, int], int]):
        if convention not in ("of_ideal", "of_quotient"):
            raise ValueError(f"unknown convention {convention!r}")
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in entries.items():
            if c < 0:
                raise ValueError(f"negative Betti number at ({i}, {j})")
            if i < 0 or j < 0:
                raise ValueError(f"negative index at ({i}, {j})")
            if c:
                clean[(int(i), int(j))] = int(c)
        self.convention = convention
        self.entries = clean

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def is_empty(self) -> bool:
        return not self.entries

    def reg(self) -> int:
        if self.is_empty():
            raise ValueError("the empty table has no regularity")
        return max(j - i for i, j in self.entries)

    def pd(self) -> int:
        if self.is_empty():
            raise ValueError("the empty table has no projective dimension")
        return max(i for i, _ in self.entries)

    def to_quotient(self) -> "BettiTable":
        if self.convention == "of_quotient":
            return self
        shifted = {(i + 1, j): c for (i, j), c in self.entries.items()}
        shifted[(0, 0)] = 1
        return BettiTable("of_quotient", shifted)

    def to_ideal(self) -> "BettiTable":
        if self.convention == "of_ideal":
            return self
        if self[(0, 0)] != 1 or any(i == 0 and (i, j) != (0, 0) for i, j in self.entries):
            raise ValueError("quotient table has a malformed row 0")
        return BettiTable(
            "of_ideal", {(i - 1, j): c for (i, j), c in self.entries.items() if i > 0}
        )

    def to_json_map(self) -> dict[str, int]:
        return {f"{i},{j}": self.entries[(i, j)] for (i, j) in sorted(self.entries)}

    def render_grid(self) -> str:
        """Macaulay-style grid: columns are i, rows are j - i."""
        if self.is_empty():
            return "(empty Betti table)"
        cols = range(0, self.pd() + 1)
        rows = range(min(j - i for i, j in self.entries), self.reg() + 1)
        totals = [sum(c for (i, _), c in self.entries.items() if i == col) for col in cols]
        cells = [["."] * len(cols) for _ in rows]
        for (i, j), c in self.entries.items():
            cells[j - i - rows.start][i] = str(c)
        width = [max(len(str(col)), len(str(totals[col])), *(len(r[col]) for r in cells)) for col in cols]
        head = max(len("total:"), *(len(f"{r}:") for r in rows))
        lines = [" " * head + " " + " ".join(str(c).rjust(width[c]) for c in cols)]
        lines.append("total:".rjust(head) + " " + " ".join(str(totals[c]).rjust(width[c]) for c in cols))
        for r in rows:
            row = cells[r - rows.start]
            lines.append(f"{r}:".rjust(head) + " " + " ".join(row[c].rjust(width[c]) for c in cols))
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BettiTable)
            and self.convention == other.convention
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.convention, frozenset(self.entries.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i},{j}): {c}" for (i, j), c in sorted(self.entries.items()))
        return f"BettiTable[{self.convention}]{{{body}}}"


@dataclass(frozen=True)
class InvariantSummary:
    """Regularity, projective dimension and depth read off a Betti table."""

    reg: int
    pd: int
    depth_of_quotient: int
    ambient_variable_count: int


def _support_order(I: MonomialIdeal) -> tuple[Variable, ...]:
    sup = I.support()
    return tuple(v for v in I.ambient if v in sup)


def _vectorize(I: MonomialIdeal) -> tuple[tuple[Variable, ...], list[tuple[int, ...]]]:
    sup = _support_order(I)
    return sup, [tuple(g.exponent(v) for v in sup) for g in I.generators]


def _lcm_vec(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _candidate_vectors(gen_vecs: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    # lcms of nonempty generator subsets = closure of the generators under
    # pairwise lcm, which dedups while it builds.
    cands: set[tuple[int, ...]] = set(gen_vecs)
    frontier = list(cands)
    while frontier:
        fresh = []
        for b in frontier:
            for g in gen_vecs:
                l = _lcm_vec(b, g)
                if l not in cands:
                    cands.add(l)
                    fresh.append(l)
        frontier = fresh
    return cands


def candidate_degrees(I: MonomialIdeal) -> set[Monomial]:
    """lcms of the nonempty subsets of G(I): the only degrees that can
    carry a Betti number."""
    if I.is_zero():
        raise ValueError("the zero ideal has no candidate degrees")
    _check_generator_guard(I)
    sup, gen_vecs = _vectorize(I)
    return {
        Monomial({v: e for v, e in zip(sup, b) if e}) for b in _candidate_vectors(gen_vecs)
    }


def _strand_facets(
    gen_vecs: list[tuple[int, ...]], b: tuple[int, ...]
) -> tuple[tuple[int, ...], list[int]]:
    """Ground positions of supp(b) and the facet masks of the strand complex.

    Faces of the strand at b are the σ ⊆ supp(b) avoiding the tight set
    of some generator dividing x^b, so the facets are the complements of
    those tight sets.
    """
    ground = tuple(i for i, e in enumerate(b) if e)
    if len(ground) > MAX_STRAND_GROUND:
        raise GuardError(
            f"strand ground set has {len(ground)} variables; the guard allows {MAX_STRAND_GROUND}"
        )
    facets = []
    for g in gen_vecs:
        if all(ge <= be for ge, be in zip(g, b)):
            mask = 0
            for k, i in enumerate(ground):
                if g[i] < b[i]:
                    mask |= 1 << k
            facets.append(mask)
    return ground, list(maximalize(facets))


def strand_complex(I: MonomialIdeal, b: Monomial) -> SimplicialComplexOnSupport:
    """The strand complex at candidate degree b.

    Faces are the squarefree σ ⊆ supp(b) with x^{b-σ} ∈ I (membership
    meaning divisibility by some minimal generator); this set is downward
    closed by construction.  b must be a candidate degree.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has no strands")
    _check_generator_guard(I)
    sup, gen_vecs = _vectorize(I)
    bvec = tuple(b.exponent(v) for v in sup)
    if b.support() - set(sup) or bvec not in _candidate_vectors(gen_vecs):
        raise ValueError(f"{b} is not a candidate degree of {I}")
    ground_pos, facets = _strand_facets(gen_vecs, bvec)
    ground = tuple(sup[i] for i in ground_pos)
    return SimplicialComplexOnSupport(ground, facets)


def _strand_homology(facets: list[int]) -> dict[int, int]:
    """Nonzero reduced homology ranks of a union of full simplices.

    Small unions are enumerated literally (the boundary-matrix path);
    large ones are swapped for the nerve of the cover, which is homotopy
    equivalent because all intersections of simplices are simplices.
    """
    if not facets:
        return {}
    if facets == [0]:
        return {-1: 1}
    estimate = sum(1 << _popcount(f) for f in facets)
    if estimate <= DIRECT_FACE_LIMIT:
        faces: set[int] = set()
        for f in facets:
            sub = f
            while True:
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        ranks = homology_ranks_of_masks(faces)
    else:
        ranks = homology_ranks_of_masks(nerve_face_masks(facets))
    return {d: r for d, r in ranks if r}


def betti_table(I: MonomialIdeal, *, check_euler: bool = True) -> BettiTable:
    """The graded Betti table of I (``of_ideal`` convention).

    β_{i,j}(I) is the sum over candidate degrees b of total degree j of
    the strand homology rank in dimension i-1.  Row 0 is asserted to
    match the generator degree counts, and (within desk scale) the
    Euler-characteristic identity against the generator subsets is
    asserted for every degree.
    """
    if I.is_zero():
        return BettiTable("of_ideal", {})
    _check_generator_guard(I)
    sup, gen_vecs = _vectorize(I)
    entries: dict[tuple[int, int], int] = {}
    for b in sorted(_candidate_vectors(gen_vecs)):
        _, facets = _strand_facets(gen_vecs, b)
        j = sum(b)
        for d, r in _strand_homology(facets).items():
            key = (d + 1, j)
            entries[key] = entries.get(key, 0) + r
    table = BettiTable("of_ideal", entries)

    by_degree: dict[int, int] = {}
    for g in I.generators:
        by_degree[g.degree()] = by_degree.get(g.degree(), 0) + 1
    row0 = {j: c for (i, j), c in table.entries.items() if i == 0}
    if row0 != by_degree:
        raise AssertionError(f"row 0 {row0} does not match generator degrees {by_degree}")

    if check_euler and len(gen_vecs) <= EULER_CHECK_LIMIT:
        from .taylor import euler_characteristic_check

        check = euler_characteristic_check(I, table)
        if not check.ok:
            raise AssertionError(f"Euler-characteristic self-check failed: {check.mismatches()}")
    return table


def invariants(I: MonomialIdeal) -> InvariantSummary:
    """reg, pd and depth of S/I (Auslander-Buchsbaum) from the Betti table."""
    if I.is_zero():
        raise ValueError("the zero ideal has no invariant summary")
    table = betti_table(I)
    n = len(I.ambient)
    pd_ideal = table.pd()
    return InvariantSummary(
        reg=table.reg(),
        pd=pd_ideal,
        depth_of_quotient=n - (pd_ideal + 1),
        ambient_variable_count=n,
    )
