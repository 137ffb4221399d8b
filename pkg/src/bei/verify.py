"""Cross-validation suites: every closed form and ideal identity the
package claims, checked against the Groebner oracle at desk scale.

Each suite returns a SuiteReport with one timed case per checked
instance.  Budget blowups become failed cases (with a note), never
silent truncation.  A report with no cases at all counts as failed, so
nothing can pass vacuously; individual cases may be flagged informative
(non-gating) - used for the degenerate n=3 colon identities, which are
validated empirically rather than assumed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .cutsets import dimension, minimal_primes, prime_generators
from .graphs import Graph, graph_from_spec, is_complete, is_cycle_graph, is_path, is_tree, leaves
from .groebner import BudgetExceededError
from .ideals import (
    Ideal,
    binomial_edge_generators,
    binomial_edge_ideal,
    edge_binomial,
    hilbert_series_ideal,
    ideal_colon_ideal,
    ideal_equal,
    ideal_intersection,
    ideal_quotient,
    is_zero_dimensional,
    universe_for_graph,
)
from .poly import Polynomial, VariableUniverse
from .series import (
    HilbertSeries,
    attach_pendant,
    h_vector,
    is_palindrome,
    series_aux,
    series_complete,
    series_cycle,
    series_line,
    series_tree,
)


@dataclass
class CaseResult:
    instance: str
    expected: str
    actual: str
    passed: bool
    ms: float
    gating: bool = True
    note: str = ""

    def to_json_dict(self) -> dict:
        out = {"instance": self.instance, "pass": self.passed,
               "expected": self.expected, "actual": self.actual,
               "ms": round(self.ms, 3)}
        if not self.gating:
            out["informative"] = True
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class SuiteReport:
    suite: str
    cases: list[CaseResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        """All gating cases pass and there is at least one case."""
        return bool(self.cases) and all(c.passed for c in self.cases if c.gating)

    def to_json_dict(self) -> dict:
        return {"suite": self.suite,
                "cases": [c.to_json_dict() for c in self.cases],
                "pass": self.passed}


def _run_case(report: SuiteReport, instance: str, expected, compute, gating: bool = True) -> None:
    start = time.perf_counter()
    note = ""
    try:
        actual = compute()
        passed = actual == expected
    except BudgetExceededError as exc:
        actual = None
        passed = False
        note = f"budget-exceeded: {exc}"
    ms = (time.perf_counter() - start) * 1000.0
    report.cases.append(CaseResult(instance, str(expected), str(actual),
                                   passed, ms, gating, note))


def _as_graph(g) -> tuple[str, Graph]:
    if isinstance(g, Graph):
        return f"graph(n={g.n},m={len(g.edges)})", g
    return str(g), graph_from_spec(str(g))


# ---------------------------------------------------------------------------
# Closed-form dispatch by graph shape

def closed_form_series(g: Graph) -> HilbertSeries:
    """The family closed form a graph falls under, by shape.

    Any tree with a single degree-3 vertex (and no higher degree) shares
    the three-arm-spider series, and any tree with exactly two adjacent
    degree-3 vertices shares the double-spider series: the pendant
    construction makes the series depend only on the vertex count.
    """
    if is_complete(g):
        return series_complete(g.n)
    if is_path(g):
        return series_line(g.n)
    if is_cycle_graph(g):
        return series_cycle(g.n)
    if is_tree(g):
        degs = [g.degree(v) for v in g.vertices()]
        if max(degs) <= 3:
            deg3 = [v for v in g.vertices() if g.degree(v) == 3]
            if len(deg3) == 1:
                return series_tree(1, g.n)
            if len(deg3) == 2 and deg3[1] in g.adjacency[deg3[0]]:
                return series_tree(2, g.n)
    raise ValueError("graph has no known closed-form series")


# ---------------------------------------------------------------------------
# Ideals used by the cycle-side identities

def closing_binomial(universe: VariableUniverse, n: int) -> Polynomial:
    """The chord binomial x_1 y_n - x_n y_1 closing the line into a cycle."""
    return edge_binomial(universe, n, 1, n)


def staircase_monomials(universe: VariableUniverse, n: int) -> list[Polynomial]:
    """The n-1 monomials x_2..x_i * y_(i+1)..y_(n-1), i = n-1 down to 1.

    These generate the ideal presenting the canonical module of the
    complete-graph quotient.
    """
    out = []
    for i in range(n - 1, 0, -1):
        exps = [0] * universe.size
        for j in range(2, i + 1):
            exps[j - 1] = 1
        for j in range(i + 1, n):
            exps[n + j - 1] = 1
        out.append(Polynomial(universe, {tuple(exps): Fraction(1)}))
    return out


def parameter_forms(universe: VariableUniverse, n: int) -> list[Polynomial]:
    """The n+1 linear forms x_1, y_1-x_2, ..., y_(n-1)-x_n, y_n."""
    forms = [Polynomial.variable(universe, "x1")]
    for i in range(1, n):
        forms.append(Polynomial.variable(universe, f"y{i}")
                     - Polynomial.variable(universe, f"x{i + 1}"))
    forms.append(Polynomial.variable(universe, f"y{n}"))
    return forms


def _line_ideal(universe: VariableUniverse, n: int) -> Ideal:
    gens = [edge_binomial(universe, n, i, i + 1) for i in range(1, n)]
    return Ideal.of(universe, gens)


def _complete_ideal(universe: VariableUniverse, n: int) -> Ideal:
    gens = [edge_binomial(universe, n, i, j)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Ideal.of(universe, gens)


# ---------------------------------------------------------------------------
# Suites

def verify_series(*graphs, budget: int | None = None) -> SuiteReport:
    """Closed form == Groebner-oracle Hilbert series, per graph."""
    report = SuiteReport("series")
    for item in graphs:
        label, g = _as_graph(item)
        closed = closed_form_series(g)
        _run_case(report, f"{label} series", closed,
                  lambda g=g: hilbert_series_ideal(binomial_edge_ideal(g), budget=budget))
    return report


def verify_decomposition(*graphs, budget: int | None = None) -> SuiteReport:
    """The edge ideal is contained in, and equals the intersection of,
    its combinatorial minimal primes."""
    report = SuiteReport("decomposition")
    for item in graphs:
        label, g = _as_graph(item)
        universe = universe_for_graph(g)
        edge_gens = binomial_edge_generators(g, universe)
        primes = minimal_primes(g)

        def check_containment(g=g, universe=universe, edge_gens=edge_gens, primes=primes):
            for pc in primes:
                prime = Ideal.of(universe, prime_generators(g, pc, universe))
                for f in edge_gens:
                    if not prime.contains(f, budget=budget):
                        return False
            return True

        _run_case(report, f"{label} ideal inside each minimal prime", True, check_containment)

        def check_intersection(g=g, universe=universe, edge_gens=edge_gens, primes=primes):
            acc = Ideal.of(universe, prime_generators(g, primes[0], universe))
            for pc in primes[1:]:
                nxt = Ideal.of(universe, prime_generators(g, pc, universe))
                acc = ideal_intersection(acc, nxt, budget=budget)
            return ideal_equal(acc, Ideal.of(universe, edge_gens), budget=budget)

        _run_case(report, f"{label} intersection of minimal primes equals ideal",
                  True, check_intersection)
    return report


def verify_colon_identities(ns=(3, 4, 5, 6), budget: int | None = None) -> SuiteReport:
    """The quotient-by-chord identities for the line ideal; n=3 runs as an
    informative case (the staircase ideal degenerates there)."""
    report = SuiteReport("colon")
    for n in ns:
        gating = n >= 4
        universe = VariableUniverse.xy(n)
        line = _line_ideal(universe, n)
        complete = _complete_ideal(universe, n)
        chord = closing_binomial(universe, n)
        try:
            quotient = ideal_quotient(line, chord, budget=budget)
        except BudgetExceededError as exc:
            report.cases.append(CaseResult(f"n={n} compute line:chord", "computed", "aborted",
                                           False, 0.0, gating, f"budget-exceeded: {exc}"))
            continue

        _run_case(report, f"n={n} line == (line:chord) ∩ complete", True,
                  lambda line=line, quotient=quotient, complete=complete:
                  ideal_equal(line, ideal_intersection(quotient, complete, budget=budget),
                              budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} line : (line:chord) == complete", True,
                  lambda line=line, quotient=quotient, complete=complete:
                  ideal_equal(ideal_colon_ideal(line, quotient, budget=budget), complete,
                              budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} line:chord == line:complete", True,
                  lambda line=line, quotient=quotient, complete=complete:
                  ideal_equal(quotient, ideal_colon_ideal(line, complete, budget=budget),
                              budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} line:chord == line + staircase", True,
                  lambda universe=universe, n=n, line=line, quotient=quotient:
                  ideal_equal(quotient,
                              Ideal.of(universe, list(line.generators)
                                       + staircase_monomials(universe, n)),
                              budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} line:chord + complete == staircase + complete", True,
                  lambda universe=universe, n=n, quotient=quotient, complete=complete:
                  ideal_equal(Ideal.of(universe, list(quotient.generators)
                                       + list(complete.generators)),
                              Ideal.of(universe, staircase_monomials(universe, n)
                                       + list(complete.generators)),
                              budget=budget),
                  gating=gating)
    return report


def verify_sop_cycle(ns=(3, 4, 5, 6), budget: int | None = None) -> SuiteReport:
    """The n+1 staggered linear forms cut the cycle quotient down to
    dimension zero, and n+1 is exactly the ring dimension."""
    report = SuiteReport("sop")
    for n in ns:
        universe = VariableUniverse.xy(n)
        cycle = graph_from_spec(f"cycle:{n}")

        def cuts_to_zero(universe=universe, n=n, cycle=cycle):
            gens = binomial_edge_generators(cycle, universe) + parameter_forms(universe, n)
            return is_zero_dimensional(Ideal.of(universe, gens), budget=budget)

        _run_case(report, f"n={n} parameter forms reach dimension zero", True, cuts_to_zero)
        _run_case(report, f"n={n} parameter count equals ring dimension", n + 1,
                  lambda cycle=cycle: dimension(cycle))
    return report


def verify_aux_series(ns=(4, 5, 6), budget: int | None = None) -> SuiteReport:
    """Oracle series of the chord-quotient constructions match the closed
    forms, including the gluing identity between them."""
    report = SuiteReport("aux")
    for n in ns:
        gating = n >= 4
        universe = VariableUniverse.xy(n)
        line = _line_ideal(universe, n)
        complete = _complete_ideal(universe, n)
        chord = closing_binomial(universe, n)
        try:
            quotient = ideal_quotient(line, chord, budget=budget)
        except BudgetExceededError as exc:
            report.cases.append(CaseResult(f"n={n} compute line:chord", "computed", "aborted",
                                           False, 0.0, gating, f"budget-exceeded: {exc}"))
            continue
        joined = Ideal.of(universe, list(quotient.generators) + list(complete.generators))

        _run_case(report, f"n={n} series of line:chord", series_aux("link_ideal", n),
                  lambda quotient=quotient: hilbert_series_ideal(quotient, budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} series of (line:chord) + complete",
                  series_aux("colon_quotient", n),
                  lambda joined=joined: hilbert_series_ideal(joined, budget=budget),
                  gating=gating)
        _run_case(report, f"n={n} series of complete + staircase",
                  series_aux("gorenstein_quotient", n),
                  lambda universe=universe, n=n, complete=complete:
                  hilbert_series_ideal(
                      Ideal.of(universe, list(complete.generators)
                               + staircase_monomials(universe, n)),
                      budget=budget),
                  gating=gating)

        def gluing(universe=universe, n=n, line=line, complete=complete,
                   quotient=quotient, joined=joined):
            h_line = hilbert_series_ideal(line, budget=budget)
            h_quot = hilbert_series_ideal(quotient, budget=budget)
            h_comp = hilbert_series_ideal(complete, budget=budget)
            h_join = hilbert_series_ideal(joined, budget=budget)
            return h_line == h_quot + h_comp - h_join

        _run_case(report, f"n={n} additivity across the gluing sequence", True,
                  gluing, gating=gating)
    return report


def verify_pendant_invariance(base, n_max: int | None = None,
                              budget: int | None = None) -> SuiteReport:
    """Extending any degree-1 vertex by a pendant edge multiplies the
    series by (1+t)/(1-t), independent of which leaf was extended."""
    label, g = _as_graph(base)
    report = SuiteReport("pendant")
    if n_max is not None and g.n + 1 > n_max:
        return report
    try:
        base_series = hilbert_series_ideal(binomial_edge_ideal(g), budget=budget)
    except BudgetExceededError as exc:
        report.cases.append(CaseResult(f"{label} base series", "computed", "aborted",
                                       False, 0.0, True, f"budget-exceeded: {exc}"))
        return report
    expected = attach_pendant(base_series)
    for v in leaves(g):
        extended = Graph(g.n + 1, g.edges | {(v, g.n + 1)})
        _run_case(report, f"{label} extended at leaf {v}", expected,
                  lambda extended=extended:
                  hilbert_series_ideal(binomial_edge_ideal(extended), budget=budget))
    return report


def verify_h_vector_symmetry(ns=range(4, 17)) -> SuiteReport:
    """Numerator of the staircase-quotient series over (1-t)^n is a
    palindrome; closed-form only, consistent with that quotient being
    Gorenstein."""
    report = SuiteReport("hvector")
    for n in ns:
        _run_case(report, f"n={n} h-vector palindromic", True,
                  lambda n=n: is_palindrome(h_vector(series_aux("gorenstein_quotient", n), n)))
    return report


# ---------------------------------------------------------------------------
# Aggregation

@dataclass(frozen=True)
class VerifyConfig:
    """Instance sizes per suite; shrink with clamp() for quick runs."""

    series_instances: tuple[str, ...] = (
        "line:2", "line:3", "line:4", "line:5",
        "complete:2", "complete:3", "complete:4", "complete:5",
        "cycle:3", "cycle:4", "cycle:5", "cycle:6",
        "tree1:4", "tree1:5", "tree1:6", "tree2:6", "tree2:7",
    )
    decomposition_instances: tuple[str, ...] = (
        "line:3", "line:4", "line:5", "cycle:4", "cycle:5",
        "complete:3", "complete:4", "star:3", "star:4", "tree1:4", "tree1:5",
    )
    colon_ns: tuple[int, ...] = (3, 4, 5, 6)
    sop_ns: tuple[int, ...] = (3, 4, 5, 6)
    aux_ns: tuple[int, ...] = (4, 5, 6)
    pendant_bases: tuple[str, ...] = ("line:3", "tree1:4", "tree2:6")
    hvector_ns: tuple[int, ...] = tuple(range(4, 17))
    budget: int | None = None

    def clamp(self, nmax: int) -> "VerifyConfig":
        def keep(spec: str) -> bool:
            return graph_from_spec(spec).n <= nmax

        return replace(
            self,
            series_instances=tuple(s for s in self.series_instances if keep(s)),
            decomposition_instances=tuple(s for s in self.decomposition_instances if keep(s)),
            colon_ns=tuple(n for n in self.colon_ns if n <= nmax),
            sop_ns=tuple(n for n in self.sop_ns if n <= nmax),
            aux_ns=tuple(n for n in self.aux_ns if n <= nmax),
            pendant_bases=tuple(s for s in self.pendant_bases if keep(s)),
            hvector_ns=tuple(n for n in self.hvector_ns if n <= nmax),
        )


SUITE_NAMES = ("series", "decomposition", "colon", "sop", "aux", "pendant", "hvector")


def run_suite(name: str, config: VerifyConfig) -> list[SuiteReport]:
    budget = config.budget
    if name == "series":
        return [verify_series(*config.series_instances, budget=budget)] \
            if config.series_instances else []
    if name == "decomposition":
        return [verify_decomposition(*config.decomposition_instances, budget=budget)] \
            if config.decomposition_instances else []
    if name == "colon":
        return [verify_colon_identities(config.colon_ns, budget=budget)] \
            if config.colon_ns else []
    if name == "sop":
        return [verify_sop_cycle(config.sop_ns, budget=budget)] if config.sop_ns else []
    if name == "aux":
        return [verify_aux_series(config.aux_ns, budget=budget)] if config.aux_ns else []
    if name == "pendant":
        reports = [verify_pendant_invariance(base, budget=budget)
                   for base in config.pendant_bases]
        return [r for r in reports if r.cases]
    if name == "hvector":
        return [verify_h_vector_symmetry(config.hvector_ns)] if config.hvector_ns else []
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")


def run_all(config: VerifyConfig | None = None,
            suites=SUITE_NAMES) -> tuple[list[SuiteReport], bool]:
    """Run the selected suites; aggregate passes iff every report does."""
    config = config or VerifyConfig()
    reports: list[SuiteReport] = []
    for name in suites:
        reports.extend(run_suite(name, config))
    return reports, bool(reports) and all(r.passed for r in reports)


def reports_to_json_dict(reports: list[SuiteReport], passed: bool) -> dict:
    return {"suites": [r.to_json_dict() for r in reports], "pass": passed}


def any_budget_failure(reports: list[SuiteReport]) -> bool:
    return any(c.note.startswith("budget-exceeded") for r in reports for c in r.cases)
