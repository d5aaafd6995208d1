"""Closed-form invariant predictions, hypothesis gating, and Betti splittings.

For rooted forests, oriented cycles and unicyclic graphs whose non-source
vertices of degree != 1 have weight >= 2, the edge ideal satisfies

    reg I(D) = Σ_{x ∈ V(D)} w(x) - |E(D)| + 1,
    pd  I(D) = |E(D)| - 1,

with isolated vertices excluded from the weight sum (they contribute no
generator).  This module evaluates those predictions, compares them with
the exact engine, and builds the cycle-edge Betti splitting of the
polarized edge ideal together with its identity check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import BettiTable, GuardError, InvariantSummary, betti_table, invariants
from .digraphs import (
    GraphClass,
    GraphClassTag,
    HypothesisReport,
    WeightedDigraph,
    check_hypotheses,
    classify,
    components,
    delete_edge,
    edge_ideal,
    normalize_source_weights,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    Variable,
    intersect,
    make_ideal,
    polarize,
    polarize_monomial,
)


@dataclass(frozen=True)
class FormulaPrediction:
    """Formula values plus the gate that says whether they are promised.

    The numbers are always filled in (counterexample reports need them);
    ``applicable`` is true only when the class is supported and no vertex
    violates the weight hypothesis.  ``depth_pred`` is the component
    count, reported with a caveat and never folded into pass/fail.
    """

    reg_pred: int
    pd_pred: int
    depth_pred: int | None
    applicable: bool
    class_used: GraphClass
    violations: tuple[str, ...]
    sum_weights: int
    edge_count: int
    component_count: int


def predict(D: WeightedDigraph) -> FormulaPrediction:
    """Evaluate the closed-form reg/pd predictions for a graph.

    The graph is normalized first (sources get weight 1); isolated
    vertices are excluded from the weight sum and the component count.
    """
    if not D.edges:
        raise ValueError("the formulas need at least one edge")
    Dn = normalize_source_weights(D)
    cls = classify(Dn)
    hyp = check_hypotheses(Dn, cls)
    sum_w = sum(w for n, w in Dn.vertices if Dn.degree(n) > 0)
    n_edges = len(Dn.edges)
    comps_with_edges = sum(1 for c in components(Dn) if c.edges)
    applicable = cls.tag is not GraphClassTag.OTHER and hyp.satisfied
    return FormulaPrediction(
        reg_pred=sum_w - n_edges + 1,
        pd_pred=n_edges - 1,
        depth_pred=comps_with_edges if applicable else None,
        applicable=applicable,
        class_used=cls,
        violations=hyp.violations,
        sum_weights=sum_w,
        edge_count=n_edges,
        component_count=comps_with_edges,
    )


VERDICT_PASS = "pass"
VERDICT_FAIL = "FAIL"
VERDICT_INAPPLICABLE_AGREE = "inapplicable-agree"
VERDICT_INAPPLICABLE_MISMATCH = "inapplicable-mismatch"
VERDICT_ENGINE_SKIPPED = "engine-skipped"


@dataclass(frozen=True)
class InvariantReport:
    """Engine-computed invariants next to the formula predictions.

    When the hypotheses hold, disagreement is a FAILURE (it would
    contradict a theorem, so it means an implementation bug); when they
    do not, disagreement is expected and reported descriptively.
    """

    graph: WeightedDigraph
    graph_class: GraphClass
    hypotheses: HypothesisReport
    prediction: FormulaPrediction
    computed: InvariantSummary | None
    verdict: str
    engine_skipped: bool = False

    def matches(self) -> bool | None:
        if self.computed is None:
            return None
        return (
            self.computed.reg == self.prediction.reg_pred
            and self.computed.pd == self.prediction.pd_pred
        )

    def to_json_dict(self) -> dict:
        computed = None
        if self.computed is not None:
            computed = {
                "reg": self.computed.reg,
                "pd": self.computed.pd,
                "depth": self.computed.depth_of_quotient,
            }
        return {
            "graph": self.graph.to_json_dict(),
            "class": self.graph_class.tag.value,
            "hypotheses": {
                "satisfied": self.hypotheses.satisfied,
                "violations": list(self.hypotheses.violations),
            },
            "computed": computed,
            "predicted": {
                "reg": self.prediction.reg_pred,
                "pd": self.prediction.pd_pred,
                "depth": self.prediction.depth_pred,
                "applicable": self.prediction.applicable,
            },
            "verdict": self.verdict,
        }

    def to_markdown(self) -> str:
        p, c = self.prediction, self.computed
        lines = [
            f"## Invariant report — class {self.graph_class.tag.value}",
            "",
            f"- hypotheses satisfied: {self.hypotheses.satisfied}"
            + (f" (violations: {', '.join(self.hypotheses.violations)})" if self.hypotheses.violations else ""),
            f"- predicted: reg = {p.reg_pred}, pd = {p.pd_pred}"
            + (f", depth = {p.depth_pred} (component count; caveated)" if p.depth_pred is not None else ""),
        ]
        if c is None:
            lines.append("- computed: skipped (sizing guard)")
        else:
            lines.append(f"- computed: reg = {c.reg}, pd = {c.pd}, depth(S/I) = {c.depth_of_quotient}")
        lines.append(f"- verdict: **{self.verdict}**")
        return "\n".join(lines)


def verify_formula(D: WeightedDigraph) -> InvariantReport:
    """Run the engine against the predictions and produce the verdict."""
    prediction = predict(D)
    Dn = normalize_source_weights(D)
    try:
        summary = invariants(edge_ideal(Dn))
    except GuardError:
        return InvariantReport(
            graph=D,
            graph_class=prediction.class_used,
            hypotheses=check_hypotheses(Dn, prediction.class_used),
            prediction=prediction,
            computed=None,
            verdict=VERDICT_ENGINE_SKIPPED,
            engine_skipped=True,
        )
    match = (
        summary.reg == prediction.reg_pred and summary.pd == prediction.pd_pred
    )
    if prediction.applicable:
        verdict = VERDICT_PASS if match else VERDICT_FAIL
    else:
        verdict = VERDICT_INAPPLICABLE_AGREE if match else VERDICT_INAPPLICABLE_MISMATCH
    return InvariantReport(
        graph=D,
        graph_class=prediction.class_used,
        hypotheses=check_hypotheses(Dn, prediction.class_used),
        prediction=prediction,
        computed=summary,
        verdict=verdict,
    )


@dataclass(frozen=True)
class SplitPair:
    """Partition I(D)^P = J + K along one cycle edge, over the polarized ambient.

    K is the (principal) polarized generator of the chosen cycle edge; J
    is the polarization of the edge ideal of D minus that edge.
    """

    J: MonomialIdeal
    K: MonomialIdeal
    split_edge: tuple[str, str]


def build_split(D: WeightedDigraph, e: tuple[str, str] | None = None) -> SplitPair:
    """Split the polarized edge ideal along a cycle edge.

    Defaults to the cycle edge entering the lowest-indexed cycle vertex.
    Only directed-cycle classes are accepted, and the edge must lie on
    the cycle.
    """
    Dn = normalize_source_weights(D)
    cls = classify(Dn)
    if cls.tag not in (GraphClassTag.ORIENTED_CYCLE, GraphClassTag.UNICYCLIC_ATTACHED):
        raise ValueError(f"build_split needs a single directed cycle; graph is {cls.tag.value}")
    cycle = cls.witness
    cycle_edges = {(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))}
    if e is None:
        e = (cycle[-1], cycle[0])
    else:
        e = (str(e[0]), str(e[1]))
        if e not in cycle_edges:
            raise ValueError(f"edge {e} is not on the cycle {'->'.join(cycle)}")
    ideal = edge_ideal(Dn)
    polarized = polarize(ideal)
    t, h = e
    k_gen = polarize_monomial(_edge_generator(Dn, t, h))
    remaining = [g for g in polarized.generators if g != k_gen]
    if len(remaining) != len(polarized.generators) - 1:
        raise AssertionError("split generator did not match exactly one polarized generator")
    J = make_ideal(remaining, polarized.ambient)
    K = make_ideal([k_gen], polarized.ambient)
    expected = {polarize_monomial(g) for g in edge_ideal(delete_edge(Dn, e)).generators}
    if set(J.generators) != expected:
        raise AssertionError("J is not the polarization of the edge ideal without the split edge")
    return SplitPair(J=J, K=K, split_edge=e)


def _edge_generator(D: WeightedDigraph, t: str, h: str) -> Monomial:
    return Monomial({Variable(t): 1}) * Monomial({Variable(h): D.weight(h)})


@dataclass(frozen=True)
class SplittingVerdict:
    """Outcome of checking the Betti-splitting identity for I = J + K."""

    is_splitting: bool
    failures: tuple[tuple[tuple[int, int], int, int], ...]  # ((i,j), lhs, rhs)
    reg_formula_holds: bool
    pd_formula_holds: bool
    table_I: BettiTable
    table_J: BettiTable
    table_K: BettiTable
    table_JK: BettiTable


def check_betti_splitting(I: MonomialIdeal, J: MonomialIdeal, K: MonomialIdeal) -> SplittingVerdict:
    """Check β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J∩K) at every (i,j).

    Also reports the consequences reg(I) = max{reg J, reg K, reg(J∩K)-1}
    and pd(I) = max{pd J, pd K, pd(J∩K)+1}.  G(I) must be the disjoint
    union of G(J) and G(K).
    """
    gen_I, gen_J, gen_K = set(I.generators), set(J.generators), set(K.generators)
    if gen_J & gen_K or gen_J | gen_K != gen_I:
        raise ValueError("G(I) must be the disjoint union of G(J) and G(K)")
    JK = intersect(J, K)
    t_I, t_J, t_K, t_JK = betti_table(I), betti_table(J), betti_table(K), betti_table(JK)
    keys = set(t_I.entries) | set(t_J.entries) | set(t_K.entries)
    keys |= {(i + 1, j) for (i, j) in t_JK.entries}
    failures = []
    for key in sorted(keys):
        i, j = key
        lhs = t_I[key]
        rhs = t_J[key] + t_K[key] + (t_JK[(i - 1, j)] if i >= 1 else 0)
        if lhs != rhs:
            failures.append((key, lhs, rhs))
    reg_ok = t_I.reg() == max(t_J.reg(), t_K.reg(), t_JK.reg() - 1)
    pd_ok = t_I.pd() == max(t_J.pd(), t_K.pd(), t_JK.pd() + 1)
    return SplittingVerdict(
        is_splitting=not failures,
        failures=tuple(failures),
        reg_formula_holds=reg_ok,
        pd_formula_holds=pd_ok,
        table_I=t_I,
        table_J=t_J,
        table_K=t_K,
        table_JK=t_JK,
    )


def has_linear_resolution(J: MonomialIdeal) -> bool:
    """True when all generators share one degree d and reg(J) = d."""
    if J.is_zero():
        raise ValueError("the zero ideal has no resolution")
    degrees = {g.degree() for g in J.generators}
    if len(degrees) != 1:
        return False
    return betti_table(J).reg() == next(iter(degrees))


def split_and_check(D: WeightedDigraph, e: tuple[str, str] | None = None):
    """build_split + identity check + the closed-form J∩K comparison.

    Returns (SplitPair, SplittingVerdict, extras) where extras records the
    linear-resolution status of K and how reg/pd of J∩K compare with the
    values Σw - |E| + 2 and |E| - 2 that the splitting argument predicts.
    """
    pair = build_split(D, e)
    Dn = normalize_source_weights(D)
    full = polarize(edge_ideal(Dn))
    verdict = check_betti_splitting(full, pair.J, pair.K)
    prediction = predict(Dn)
    jk_reg = verdict.table_JK.reg()
    jk_pd = verdict.table_JK.pd()
    extras = {
        "K_has_linear_resolution": has_linear_resolution(pair.K),
        "JK_reg": jk_reg,
        "JK_pd": jk_pd,
        "JK_reg_expected": prediction.sum_weights - prediction.edge_count + 2,
        "JK_pd_expected": prediction.edge_count - 2,
        "hypotheses_satisfied": prediction.applicable,
    }
    return pair, verdict, extras
