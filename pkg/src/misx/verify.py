"""Bound and extremal-characterization verdicts, single graphs and catalog sweeps."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Iterable, Iterator

from .cameron_walker import is_cw_bipartite
from .generators import enumerate_labeled_graphs, expand_family
from .graph import Graph, bits, component_masks, subgraph_from_mask
from .graph6 import iter_graph6_lines, to_graph6
from .invariants import InvariantBundle, full_bundle
from .mis import count_mis_by_enumeration, mis_count

COUNTEREXAMPLE_CAP = 16
CENSUS_CAP = 100


class Theorem(str, enum.Enum):
    COVER_BOUND = "COVER_BOUND"
    MATCHING_BOUND = "MATCHING_BOUND"
    INDUCED_LOWER = "INDUCED_LOWER"
    KE_COROLLARY = "KE_COROLLARY"
    BRANCH_RECURRENCE = "BRANCH_RECURRENCE"

    def __str__(self) -> str:
        return self.value


ALL_THEOREMS = tuple(Theorem)


def parse_theorems(text: str) -> tuple[Theorem, ...]:
    if text.strip().lower() == "all":
        return ALL_THEOREMS
    out = []
    for part in text.split(","):
        part = part.strip().upper()
        if not part:
            continue
        try:
            out.append(Theorem(part))
        except ValueError:
            raise ValueError(f"unknown theorem tag {part!r}; known: {', '.join(t.value for t in Theorem)}") from None
    return tuple(dict.fromkeys(out))


@dataclass(frozen=True)
class BoundVerdict:
    """One theorem instance on one graph.

    ``characterization_expected`` is ``None`` where no equality
    characterization is claimed; ``consistent`` is then vacuously true.
    """

    theorem: Theorem
    inputs: dict
    bound: int
    holds: bool
    extremal: bool
    characterization_expected: bool | None = None
    detail: dict = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        if self.characterization_expected is None:
            return True
        return self.extremal == self.characterization_expected

    @property
    def ok(self) -> bool:
        return self.holds and self.consistent

    def as_dict(self) -> dict:
        d = {
            "theorem": self.theorem.value,
            "inputs": self.inputs,
            "bound": self.bound,
            "holds": self.holds,
            "extremal": self.extremal,
            "characterization_expected": self.characterization_expected,
            "consistent": self.consistent,
        }
        if self.detail:
            d["detail"] = self.detail
        return d


def is_triangles_plus_isolated(g: Graph) -> bool:
    """True iff every component is a triangle or a single vertex."""
    for comp in component_masks(g):
        size = comp.bit_count()
        if size == 1:
            continue
        if size != 3 or any((g.adj[v] & comp).bit_count() != 2 for v in bits(comp)):
            return False
    return True


def triangle_count(g: Graph) -> int:
    return sum(1 for c in component_masks(g) if c.bit_count() == 3)


def _bundle(g: Graph, bundle: InvariantBundle | None) -> InvariantBundle:
    return full_bundle(g) if bundle is None else bundle


def check_cover_bound(g: Graph, bundle: InvariantBundle | None = None, cw_bipartite: bool | None = None) -> BoundVerdict:
    b = _bundle(g, bundle)
    if cw_bipartite is None:
        cw_bipartite = is_cw_bipartite(g, b).value
    bound = 2**b.beta
    return BoundVerdict(
        Theorem.COVER_BOUND,
        {"n": b.n, "m": b.m, "beta": b.beta},
        bound,
        holds=b.m <= bound,
        extremal=b.m == bound,
        characterization_expected=cw_bipartite,
    )


def check_matching_bound(g: Graph, bundle: InvariantBundle | None = None) -> BoundVerdict:
    b = _bundle(g, bundle)
    bound = 3**b.nu
    shape = is_triangles_plus_isolated(g) and triangle_count(g) == b.nu
    return BoundVerdict(
        Theorem.MATCHING_BOUND,
        {"n": b.n, "m": b.m, "nu": b.nu},
        bound,
        holds=b.m <= bound,
        extremal=b.m == bound,
        characterization_expected=shape,
    )


def check_induced_lower(g: Graph, bundle: InvariantBundle | None = None) -> BoundVerdict:
    b = _bundle(g, bundle)
    bound = 2**b.nu0
    return BoundVerdict(
        Theorem.INDUCED_LOWER,
        {"n": b.n, "m": b.m, "nu0": b.nu0},
        bound,
        holds=b.m >= bound,
        extremal=b.m == bound,
    )


def check_ke_corollary(
    g: Graph, bundle: InvariantBundle | None = None, cw_bipartite: bool | None = None
) -> BoundVerdict | None:
    """``None`` when ``g`` is not Koenig-Egervary (``beta != nu``)."""
    b = _bundle(g, bundle)
    if b.beta != b.nu:
        return None
    if cw_bipartite is None:
        cw_bipartite = is_cw_bipartite(g, b).value
    bound = 2**b.nu
    return BoundVerdict(
        Theorem.KE_COROLLARY,
        {"n": b.n, "m": b.m, "beta": b.beta, "nu": b.nu},
        bound,
        holds=b.m <= bound,
        extremal=b.m == bound,
        characterization_expected=cw_bipartite,
    )


def check_recurrences(g: Graph, m: int | None = None) -> list[BoundVerdict]:
    """Branch inequality at every vertex, leaf equality at every leaf, product rule.

    The pieces are counted by plain enumeration, independently of the
    reduction counter that produced ``m``, so a leaf-rule bug in one engine
    cannot confirm itself.
    """
    full = g.all_mask
    m = mis_count(g) if m is None else m
    piece = lambda mask: count_mis_by_enumeration_within(g, mask)  # noqa: E731
    closed = [nb | 1 << v for v, nb in enumerate(g.adj)]
    out = []
    for x in range(g.n):
        loc = piece(full & ~closed[x])
        rem = piece(full & ~(1 << x))
        out.append(BoundVerdict(
            Theorem.BRANCH_RECURRENCE, {"n": g.n, "m": m}, loc + rem,
            holds=m <= loc + rem, extremal=m == loc + rem,
            detail={"kind": "branch", "vertex": x, "m_localized": loc, "m_removed": rem},
        ))
    for x in range(g.n):
        if g.adj[x].bit_count() != 1:
            continue
        y = g.adj[x].bit_length() - 1
        mx = piece(full & ~closed[x])
        my = piece(full & ~closed[y])
        out.append(BoundVerdict(
            Theorem.BRANCH_RECURRENCE, {"n": g.n, "m": m}, mx + my,
            holds=m == mx + my, extremal=m == mx + my,
            detail={"kind": "leaf", "leaf": x, "neighbor": y, "m_leaf_side": mx, "m_neighbor_side": my},
        ))
    comps = component_masks(g)
    counts = [piece(c) for c in comps]
    prod = 1
    for c in counts:
        prod *= c
    out.append(BoundVerdict(
        Theorem.BRANCH_RECURRENCE, {"n": g.n, "m": m}, prod,
        holds=m == prod, extremal=m == prod,
        detail={"kind": "product", "component_counts": counts},
    ))
    return out


def count_mis_by_enumeration_within(g: Graph, mask: int) -> int:
    return count_mis_by_enumeration(subgraph_from_mask(g, mask)[0])


@dataclass
class GraphOutcome:
    index: int
    label: str
    graph6: str
    verdicts: dict[Theorem, list[BoundVerdict]]
    engine_mismatch: tuple[int, int] | None = None


def evaluate(g: Graph, theorems: Iterable[Theorem] = ALL_THEOREMS, cross_check: bool = True) -> tuple[dict, tuple[int, int] | None]:
    """All requested verdicts for one graph, sharing a single invariant bundle."""
    theorems = tuple(theorems)
    b = full_bundle(g)
    cwb = None
    if Theorem.COVER_BOUND in theorems or (Theorem.KE_COROLLARY in theorems and b.beta == b.nu):
        cwb = is_cw_bipartite(g, b).value
    out: dict[Theorem, list[BoundVerdict]] = {}
    for t in theorems:
        if t is Theorem.COVER_BOUND:
            out[t] = [check_cover_bound(g, b, cwb)]
        elif t is Theorem.MATCHING_BOUND:
            out[t] = [check_matching_bound(g, b)]
        elif t is Theorem.INDUCED_LOWER:
            out[t] = [check_induced_lower(g, b)]
        elif t is Theorem.KE_COROLLARY:
            v = check_ke_corollary(g, b, cwb)
            out[t] = [] if v is None else [v]
        elif t is Theorem.BRANCH_RECURRENCE:
            out[t] = check_recurrences(g, b.m)
    mismatch = None
    if cross_check:
        raw = count_mis_by_enumeration(g)
        if raw != b.m:
            mismatch = (b.m, raw)
    return out, mismatch


def _work(args) -> GraphOutcome:
    index, label, g, theorems, cross_check = args
    verdicts, mismatch = evaluate(g, theorems, cross_check)
    return GraphOutcome(index, label, to_graph6(g).decode(), verdicts, mismatch)


# --- catalog sources: each yields (label, Graph | error) ---------------------------------


def labeled_source(n: int) -> Iterator[tuple[str, Graph | Exception]]:
    for i, g in enumerate(enumerate_labeled_graphs(n)):
        yield f"n={n}#{i}", g


def graph6_source(path: str | Path) -> Iterator[tuple[str, Graph | Exception]]:
    with open(path, "rb") as fh:
        for lineno, item in iter_graph6_lines(fh):
            yield f"line {lineno}", item


def family_source(spec: str) -> Iterator[tuple[str, Graph | Exception]]:
    yield from expand_family(spec)


@dataclass
class TagTally:
    graphs: int = 0
    applicable: int = 0
    verdicts: int = 0
    holds: int = 0
    extremal: int = 0
    consistent: int = 0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SweepReport:
    catalog: str
    theorems: tuple[Theorem, ...]
    processed: int = 0
    tallies: dict[Theorem, TagTally] = field(default_factory=dict)
    census: dict[Theorem, dict] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)
    aborted: bool = False
    wall_time: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def as_dict(self, include_timing: bool = False) -> dict:
        d = {
            "schema": 1,
            "kind": "sweep",
            "catalog": self.catalog,
            "theorems": [t.value for t in self.theorems],
            "processed": self.processed,
            "tallies": {t.value: self.tallies[t].as_dict() for t in self.theorems},
            "census": {t.value: self.census[t] for t in self.theorems if t in self.census},
            "counterexamples": self.counterexamples,
            "parse_errors": self.parse_errors,
            "aborted": self.aborted,
        }
        if include_timing:
            d["wall_time_s"] = round(self.wall_time, 3)
        return d

    def summary_lines(self) -> list[str]:
        lines = [f"catalog: {self.catalog}", f"graphs processed: {self.processed}"]
        for t in self.theorems:
            tl = self.tallies[t]
            line = (f"{t.value}: applicable {tl.applicable}/{tl.graphs}, verdicts {tl.verdicts}, "
                    f"holds {tl.holds}, extremal {tl.extremal}, consistent {tl.consistent}")
            lines.append(line)
        for t, c in self.census.items():
            lines.append(f"extremal census {t.value}: {c['count']}")
        if self.parse_errors:
            lines.append(f"parse errors: {len(self.parse_errors)}")
            for e in self.parse_errors:
                lines.append(f"  {e['where']}: {e['error']}")
        lines.append(f"counterexamples: {len(self.counterexamples)}" + (" (aborted at cap)" if self.aborted else ""))
        for c in self.counterexamples:
            lines.append(f"  {c['graph6']} {c['theorem']} {c['detail']}")
        return lines


_CENSUS_TAGS = (Theorem.COVER_BOUND, Theorem.MATCHING_BOUND, Theorem.INDUCED_LOWER, Theorem.KE_COROLLARY)


def sweep(
    source: Iterable[tuple[str, Graph | Exception]],
    theorems: Iterable[Theorem] = ALL_THEOREMS,
    *,
    catalog: str = "",
    jobs: int = 1,
    cross_check: bool = True,
    counterexample_cap: int = COUNTEREXAMPLE_CAP,
    census_cap: int = CENSUS_CAP,
    chunksize: int = 64,
) -> SweepReport:
    """Check every graph of ``source`` against every requested theorem.

    Outcomes are merged in catalog order, so the report does not depend on
    ``jobs``. Collection stops once ``counterexample_cap`` counterexamples
    are found.
    """
    theorems = tuple(theorems)
    report = SweepReport(catalog, theorems, tallies={t: TagTally() for t in theorems})
    for t in theorems:
        if t in _CENSUS_TAGS:
            report.census[t] = {"count": 0, "graph6": []}
    started = time.perf_counter()

    def tasks():
        for index, (label, item) in enumerate(source):
            if isinstance(item, Exception):
                report.parse_errors.append({"where": label, "error": str(item)})
                continue
            yield index, label, item, theorems, cross_check

    if jobs > 1:
        pool = Pool(jobs)
        outcomes = pool.imap(_work, tasks(), chunksize=chunksize)
    else:
        pool = None
        outcomes = map(_work, tasks())
    try:
        for outcome in outcomes:
            _absorb(report, outcome, census_cap)
            if len(report.counterexamples) >= counterexample_cap:
                report.aborted = True
                break
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()
    report.wall_time = time.perf_counter() - started
    return report


def _absorb(report: SweepReport, outcome: GraphOutcome, census_cap: int) -> None:
    report.processed += 1
    for t in report.theorems:
        tl = report.tallies[t]
        vs = outcome.verdicts.get(t, [])
        tl.graphs += 1
        if vs:
            tl.applicable += 1
        tl.verdicts += len(vs)
        for v in vs:
            tl.holds += v.holds
            tl.extremal += v.extremal
            tl.consistent += v.consistent
            if not v.ok:
                report.counterexamples.append({
                    "index": outcome.index,
                    "label": outcome.label,
                    "graph6": outcome.graph6,
                    "theorem": t.value,
                    "detail": v.as_dict(),
                })
        if t in report.census and len(vs) == 1 and vs[0].extremal:
            c = report.census[t]
            c["count"] += 1
            if len(c["graph6"]) < census_cap:
                c["graph6"].append(outcome.graph6)
    if outcome.engine_mismatch is not None:
        reduced, raw = outcome.engine_mismatch
        report.counterexamples.append({
            "index": outcome.index,
            "label": outcome.label,
            "graph6": outcome.graph6,
            "theorem": "ENGINE_AGREEMENT",
            "detail": {"count_mis": reduced, "enumeration": raw},
        })
