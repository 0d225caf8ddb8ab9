"""Sufficient numerical criteria for equiclassical families V(d, g, c).

The catalog is fixed.  Each entry tests a class triple and answers with
``None`` (does not apply) or the mode in which it certifies its property:
``direct`` when the inequality is about the family itself, ``via_dual``
when it is an inequality about the dual family transported back by the
duality isomorphism V(d,g,c) = V(c,g,d).

:func:`evaluate` runs the whole catalog on a triple and on its dual and
merges the results.  The nodal-cuspidal property is not transported
through duality.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .errors import NotAdmissible
from .invariants import (
    ClassTriple,
    DeltaKappa,
    NodalCuspidal,
    arithmetic_genus,
    dual_triple,
    expected_dim,
    from_nodal_cuspidal,
    raw_delta_kappa,
    to_class_triple,
    triple_admissible,
    virtual_counts,
)


class Property(str, Enum):
    NONEMPTY = "NONEMPTY"
    LOCALLY_REGULAR = "LOCALLY_REGULAR"
    NODAL_CUSPIDAL_GENERIC = "NODAL_CUSPIDAL_GENERIC"
    IRREDUCIBLE = "IRREDUCIBLE"


class Mode(str, Enum):
    DIRECT = "direct"
    VIA_DUAL = "via_dual"


class VerdictKind(str, Enum):
    EMPTY = "EMPTY"
    YES = "YES"
    UNKNOWN = "UNKNOWN"


class EdgeType(str, Enum):
    CUSP_TO_NODE = "CUSP_TO_NODE"
    NODE_SMOOTHED = "NODE_SMOOTHED"


DUALITY_CLOSED = frozenset({Property.NONEMPTY, Property.LOCALLY_REGULAR, Property.IRREDUCIBLE})


@dataclass(frozen=True)
class EngineConfig:
    # exponent in the quadratic local-regularity bound 5k - 6d <= (d+3)^e
    lrq_exponent: int = 2

    def __post_init__(self):
        if self.lrq_exponent not in (2, 3):
            raise ValueError("lrq_exponent must be 2 or 3")


# --------------------------------------------------------------------------
# catalog

Test = Callable[[ClassTriple, EngineConfig], Optional[Mode]]


@dataclass(frozen=True)
class Criterion:
    id: str
    property: Property
    statement: str
    conditional_on_nonempty: bool
    source: str
    test: Test = field(repr=False, compare=False)
    externally_sourced: bool = False


def _dk(t: ClassTriple) -> Tuple[int, int]:
    return raw_delta_kappa(t)


def _ne_linear(t, cfg):
    d, g, c = t.d, t.g, t.c
    if d >= 2 and c >= 2 and c >= 2 * g + (d + 1) // 2 + 1:
        return Mode.DIRECT
    return None


def _ne_quadratic(t, cfg):
    delta, kappa = _dk(t)
    if t.d < 3 or delta <= 0 or kappa <= 0:
        return None
    if not (2 * delta <= kappa <= 3 * delta and delta <= arithmetic_genus(t.d)):
        return None
    if t.d <= 4 or 2 * (kappa - delta) <= t.d * t.d - 4 * t.d + 6:
        return Mode.DIRECT
    return None


def _ne_quadratic_dual(t, cfg):
    d, g, c = t.d, t.g, t.c
    if g > arithmetic_genus(d):
        return None
    if 2 * c >= 2 * g + 5 * d - 8:
        return Mode.DIRECT
    if 2 * d >= 2 * g + 5 * c - 8:
        return Mode.VIA_DUAL
    return None


def _lr_severi(t, cfg):
    return Mode.DIRECT if t.c == 2 * t.d - 2 + 2 * t.g else None


def _lr_linear(t, cfg):
    if t.d >= 2 and t.c >= 2 and t.c - 2 * t.g + t.d >= -1:
        return Mode.DIRECT
    return None


def _lr_quadratic(t, cfg):
    delta, kappa = _dk(t)
    if t.d < 3 or delta < 0 or kappa < 0:
        return None
    if 5 * kappa - 6 * delta <= (t.d + 3) ** cfg.lrq_exponent:
        return Mode.DIRECT
    return None


def _lr_quadratic_dual(t, cfg):
    d, g, c = t.d, t.g, t.c
    if 5 * c >= 6 * g + d * d - 2 * d - 15:
        return Mode.DIRECT
    if 5 * d >= 6 * g + c * c - 2 * c - 15:
        return Mode.VIA_DUAL
    return None


def _nc_diaz_harris(t, cfg):
    return Mode.DIRECT if t.c >= 2 * t.g - 1 else None


def _nc_shustin(t, cfg):
    return Mode.DIRECT if t.c >= 2 * t.g - t.d + 2 else None


def _nc_quadratic(t, cfg):
    delta, kappa = _dk(t)
    if t.d < 3 or delta < 0 or kappa < 0:
        return None
    return Mode.DIRECT if 5 * kappa - 6 * delta <= t.d * t.d + 6 * t.d - 3 else None


def _nc_low_degree(t, cfg):
    return Mode.DIRECT if t.d <= 10 else None


def irr_linear_disjuncts(d: int, g: int, c: int) -> Tuple[bool, bool, bool]:
    """The three linear irreducibility inequalities in (d, g, c) form."""
    return (
        c >= 2 * g + 2 * d - 5,
        2 * c >= 6 * g + 3 * d - 5,
        2 * c >= 2 * g + d * d - 2 * d - 1,
    )


def _irr_linear(t, cfg):
    if t.d >= 2 and t.c >= 2 and any(irr_linear_disjuncts(t.d, t.g, t.c)):
        return Mode.DIRECT
    return None


def _irr_dual_linear(t, cfg):
    if t.d >= 2 and t.c >= 2 and any(irr_linear_disjuncts(t.c, t.g, t.d)):
        return Mode.VIA_DUAL
    return None


def _irr_quadratic(t, cfg):
    delta, kappa = _dk(t)
    if t.d < 3 or delta < 0 or kappa < 0:
        return None
    return Mode.DIRECT if 11 * kappa + 3 * delta < 2 * t.d * t.d else None


def _irr_quadratic_dual(t, cfg):
    d, g, c = t.d, t.g, t.c
    if 2 * (11 * c + 3 * g) > 21 * d * d - 31 * d + 6:
        return Mode.DIRECT
    if 2 * (11 * d + 3 * g) > 21 * c * c - 31 * c + 6:
        return Mode.VIA_DUAL
    return None


CATALOG: Tuple[Criterion, ...] = (
    Criterion("NE-L", Property.NONEMPTY, "c >= 2g + [(d+1)/2] + 1, d,c >= 2", False,
              "linear non-emptiness bound", _ne_linear),
    Criterion("NE-Q", Property.NONEMPTY,
              "2delta <= kappa <= 3delta, delta <= (d-1)(d-2)/2, and for d >= 5 kappa - delta <= (d^2-4d+6)/2",
              False, "quadratic non-emptiness bound", _ne_quadratic),
    Criterion("NE-QD2", Property.NONEMPTY,
              "g <= (d-1)(d-2)/2 and (c >= g + (5d-8)/2 or d >= g + (5c-8)/2)", False,
              "quadratic non-emptiness bound and its dual", _ne_quadratic_dual),
    Criterion("LR-SEV", Property.LOCALLY_REGULAR, "c = 2d - 2 + 2g", False,
              "Severi varieties are locally regular", _lr_severi, externally_sourced=True),
    Criterion("LR-L", Property.LOCALLY_REGULAR, "c - 2g + d >= -1, d,c >= 2", True,
              "linear local-regularity bound", _lr_linear),
    Criterion("LR-Q", Property.LOCALLY_REGULAR, "5kappa - 6delta <= (d+3)^2", True,
              "quadratic local-regularity bound", _lr_quadratic),
    Criterion("LR-QD", Property.LOCALLY_REGULAR,
              "5c >= 6g + d^2 - 2d - 15 or 5d >= 6g + c^2 - 2c - 15", True,
              "quadratic local-regularity bound and its dual", _lr_quadratic_dual),
    Criterion("NC-DH", Property.NODAL_CUSPIDAL_GENERIC, "c >= 2g - 1", True,
              "Diaz-Harris nodal-cuspidal criterion", _nc_diaz_harris, externally_sourced=True),
    Criterion("NC-SH", Property.NODAL_CUSPIDAL_GENERIC, "c >= 2g - d + 2", True,
              "Shustin nodal-cuspidal criterion", _nc_shustin, externally_sourced=True),
    Criterion("NC-Q", Property.NODAL_CUSPIDAL_GENERIC, "5kappa - 6delta <= d^2 + 6d - 3", True,
              "quadratic nodal-cuspidal bound", _nc_quadratic),
    Criterion("NC-D10", Property.NODAL_CUSPIDAL_GENERIC, "d <= 10", True,
              "low-degree nodal-cuspidal genericity (Shustin)", _nc_low_degree, externally_sourced=True),
    Criterion("IRR-L", Property.IRREDUCIBLE,
              "c >= 2g + 2d - 5 or c >= 3g + (3d-5)/2 or c >= g + (d^2-2d-1)/2", True,
              "linear irreducibility bounds", _irr_linear),
    Criterion("IRR-DL", Property.IRREDUCIBLE,
              "d >= 2g + 2c - 5 or d >= 3g + (3c-5)/2 or d >= g + (c^2-2c-1)/2", True,
              "linear irreducibility bounds applied to the dual family", _irr_dual_linear),
    Criterion("IRR-Q", Property.IRREDUCIBLE, "(11/2)kappa + (3/2)delta < d^2", True,
              "quadratic irreducibility bound", _irr_quadratic),
    Criterion("IRR-QD", Property.IRREDUCIBLE,
              "11c + 3g > (21d^2-31d+6)/2 or 11d + 3g > (21c^2-31c+6)/2", True,
              "quadratic irreducibility bound and its dual", _irr_quadratic_dual),
)

CRITERIA: Dict[str, Criterion] = {c.id: c for c in CATALOG}
_ORDER = {c.id: i for i, c in enumerate(CATALOG)}


# --------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Certificate:
    criterion: Criterion
    mode: Mode

    @property
    def property(self) -> Property:
        return self.criterion.property


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    certificates: Tuple[Certificate, ...] = ()
    conditional: bool = False

    @property
    def is_yes(self) -> bool:
        return self.kind is VerdictKind.YES

    def modes(self) -> set:
        return {c.mode for c in self.certificates}

    def ids(self, mode: Mode | None = None) -> List[str]:
        return [c.criterion.id for c in self.certificates if mode is None or c.mode is mode]


@dataclass(frozen=True)
class Edge:
    type: EdgeType
    source: ClassTriple
    target: ClassTriple

    @property
    def label(self) -> str:
        return "c+1" if self.type is EdgeType.CUSP_TO_NODE else "g+1,c+2"


@dataclass(frozen=True)
class CriteriaReport:
    triple: ClassTriple
    delta: int
    kappa: int
    nodes: Optional[int]
    cusps: Optional[int]
    smooth: bool
    empty_reason: Optional[str]
    verdicts: Dict[Property, Verdict]
    edges: Tuple[Edge, ...]
    notes: Tuple[str, ...] = ()

    @property
    def is_empty(self) -> bool:
        return self.empty_reason is not None

    @property
    def expected_dim(self) -> int:
        return expected_dim(self.triple)

    @property
    def dimension(self) -> Optional[int]:
        """Certified dimension; only known for locally regular families."""
        if self.verdicts[Property.LOCALLY_REGULAR].is_yes:
            return self.expected_dim
        return None

    def verdict(self, prop: Property | str) -> Verdict:
        return self.verdicts[Property(prop)]

    def certificates(self) -> List[Certificate]:
        return [c for v in self.verdicts.values() for c in v.certificates]

    def to_dict(self) -> dict:
        t = self.triple
        return {
            "d": jint(t.d),
            "g": jint(t.g),
            "c": jint(t.c),
            "delta": jint(self.delta),
            "kappa": jint(self.kappa),
            "nodes": None if self.nodes is None else jint(self.nodes),
            "cusps": None if self.cusps is None else jint(self.cusps),
            "smooth": self.smooth,
            "empty_reason": self.empty_reason,
            "expected_dim": jint(self.expected_dim),
            "dimension": None if self.dimension is None else jint(self.dimension),
            "verdicts": [
                {
                    "property": p.value,
                    "verdict": v.kind.value,
                    "conditional": v.conditional,
                }
                for p, v in self.verdicts.items()
            ],
            "certificates": [
                {
                    "property": c.property.value,
                    "criterion": c.criterion.id,
                    "mode": c.mode.value,
                    "statement": c.criterion.statement,
                    "source": c.criterion.source,
                    "conditional_on_nonempty": c.criterion.conditional_on_nonempty,
                    "externally_sourced": c.criterion.externally_sourced,
                }
                for c in self.certificates()
            ],
            "edges": [
                {"type": e.type.value, "label": e.label, "target": triple_dict(e.target)}
                for e in self.edges
            ],
            "notes": list(self.notes),
        }


_INT64 = 2 ** 63


def jint(x: int):
    """JSON integer; values outside signed 64-bit range become strings."""
    return x if -_INT64 <= x < _INT64 else str(x)


def triple_dict(t: ClassTriple) -> dict:
    return {"d": jint(t.d), "g": jint(t.g), "c": jint(t.c)}


def emptiness_reason(t: ClassTriple) -> Optional[str]:
    """Why V(d,g,c) is certainly empty, or None."""
    if not triple_admissible(t):
        return "inadmissible"
    if t.d >= 2:
        if t.c < 2:
            return "class below 2"
        if not triple_admissible(dual_triple(t)):
            return "dual inadmissible"
    return None


def _certificates(t: ClassTriple, cfg: EngineConfig, close: bool) -> List[Certificate]:
    found: List[Certificate] = []
    dual = dual_triple(t) if close else None
    for crit in CATALOG:
        mode = crit.test(t, cfg)
        if mode is not None:
            found.append(Certificate(crit, mode))
        if dual is not None and crit.property in DUALITY_CLOSED:
            # only direct hits on the dual are new; its dual disjuncts are
            # inequalities on t itself and were already tested above
            if crit.test(dual, cfg) is Mode.DIRECT:
                cert = Certificate(crit, Mode.VIA_DUAL)
                if cert not in found:
                    found.append(cert)
    found.sort(key=lambda c: (_ORDER[c.criterion.id], c.mode is Mode.VIA_DUAL))
    return found


def evaluate(t: ClassTriple, config: EngineConfig | None = None) -> CriteriaReport:
    cfg = config or EngineConfig()
    delta, kappa = raw_delta_kappa(t)
    reason = emptiness_reason(t)
    nodes = cusps = None
    if delta >= 0 and 2 * delta <= kappa <= 3 * delta:
        nc = virtual_counts(DeltaKappa(t.d, delta, kappa))
        nodes, cusps = nc.nodes, nc.cusps
    smooth = delta == 0 and kappa == 0

    if reason is not None:
        verdicts = {p: Verdict(VerdictKind.EMPTY) for p in Property}
        return CriteriaReport(t, delta, kappa, nodes, cusps, smooth, reason, verdicts, ())

    close = t.d >= 2 and t.c >= 2
    certs = _certificates(t, cfg, close)
    notes: List[str] = []
    ne_certs = tuple(c for c in certs if c.property is Property.NONEMPTY)
    nonempty = bool(ne_certs) or smooth
    if smooth and not ne_certs:
        notes.append("smooth family: non-empty without a catalog certificate")

    verdicts: Dict[Property, Verdict] = {}
    for prop in Property:
        mine = tuple(c for c in certs if c.property is prop)
        if prop is Property.NONEMPTY:
            verdicts[prop] = Verdict(VerdictKind.YES if nonempty else VerdictKind.UNKNOWN, mine)
            continue
        if not mine:
            verdicts[prop] = Verdict(VerdictKind.UNKNOWN)
            continue
        conditional = not nonempty and all(c.criterion.conditional_on_nonempty for c in mine)
        verdicts[prop] = Verdict(VerdictKind.YES, mine, conditional)
        if conditional:
            notes.append(f"{prop.value} holds provided the family is non-empty")

    edges: Tuple[Edge, ...] = ()
    if verdicts[Property.LOCALLY_REGULAR].is_yes:
        edges = tuple(_incidences(t, delta, kappa))
    return CriteriaReport(t, delta, kappa, nodes, cusps, smooth, None, verdicts, edges, tuple(notes))


def _incidences(t: ClassTriple, delta: int, kappa: int):
    if kappa - 2 * delta > 0:
        yield Edge(EdgeType.CUSP_TO_NODE, t, ClassTriple(t.d, t.g, t.c + 1))
    if 3 * delta - kappa > 0:
        yield Edge(EdgeType.NODE_SMOOTHED, t, ClassTriple(t.d, t.g + 1, t.c + 2))


def incidence_edges(t: ClassTriple, config: EngineConfig | None = None) -> List[Tuple[EdgeType, ClassTriple]]:
    """Incidences V(d,g,c) in the closure of a neighbouring stratum; only
    for families certified locally regular."""
    if not triple_admissible(t):
        raise NotAdmissible(f"{t} is not admissible")
    return [(e.type, e.target) for e in evaluate(t, config).edges]


# --------------------------------------------------------------------------
# stratification graph


DEFAULT_MAX_DEGREE = 12


def max_degree_from_env() -> int:
    raw = os.environ.get("CURVECLASS_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"CURVECLASS_MAX_DEGREE must be an integer, got {raw!r}") from None


def admissible_triples(d: int) -> List[ClassTriple]:
    """All admissible triples of degree d, ordered by (g, c)."""
    out = []
    for delta in range(arithmetic_genus(d) + 1):
        for kappa in range(2 * delta, 3 * delta + 1):
            out.append(to_class_triple(DeltaKappa(d, delta, kappa)))
    return sorted(out, key=lambda t: (t.g, t.c))


@dataclass(frozen=True)
class StrataGraph:
    d: int
    nodes: Tuple[CriteriaReport, ...]
    edges: Tuple[Edge, ...]

    def node_triples(self) -> List[ClassTriple]:
        return [r.triple for r in self.nodes]

    def edge_set(self) -> set:
        return {(e.source, e.type, e.target) for e in self.edges}

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "nodes": [r.to_dict() for r in self.nodes],
            "edges": [
                {"type": e.type.value, "label": e.label,
                 "source": triple_dict(e.source), "target": triple_dict(e.target)}
                for e in self.edges
            ],
        }

    def to_dot(self) -> str:
        lines = [f"digraph strata_d{self.d} {{"]
        for r in self.nodes:
            t = r.triple
            nk = f"{r.nodes},{r.cusps}"
            lines.append(f'  "{t.d},{t.g},{t.c}" [label="{t.d},{t.g},{t.c} | {nk}"];')
        for e in self.edges:
            s, t = e.source, e.target
            lines.append(f'  "{s.d},{s.g},{s.c}" -> "{t.d},{t.g},{t.c}" [label="{e.label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def strata_graph(d: int, max_degree: int | None = None, config: EngineConfig | None = None) -> StrataGraph:
    bound = max_degree_from_env() if max_degree is None else max_degree
    if not 1 <= d <= bound:
        raise ValueError(f"degree {d} outside 1..{bound}")
    reports = tuple(evaluate(t, config) for t in admissible_triples(d))
    edges = tuple(e for r in reports for e in r.edges)
    return StrataGraph(d, reports, edges)


# --------------------------------------------------------------------------
# asymptotics of the dual of the maximal-cusp stratum


@dataclass(frozen=True)
class SweepRow:
    d: int
    k: int
    d_dual: int
    g: int
    n_dual: int
    k_dual: int
    lrq_primal: bool
    dual_cusp_bound: bool       # k_dual < 3 d_dual
    dual_quadratic_bound: bool  # 4 n_dual + 9 k_dual < (d_dual + 3)^2
    admissible: bool = True

    @property
    def ratios(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        d2 = self.d * self.d
        return (
            Fraction(self.d_dual, d2),
            Fraction(self.g, d2),
            Fraction(self.n_dual, d2 * d2),
            Fraction(self.k_dual, d2),
        )

    def to_dict(self) -> dict:
        r = self.ratios
        return {
            "d": str(self.d),
            "k": str(self.k),
            "d_dual": str(self.d_dual),
            "g": str(self.g),
            "n_dual": str(self.n_dual),
            "k_dual": str(self.k_dual),
            "ratio_d_dual": str(r[0]),
            "ratio_g": str(r[1]),
            "ratio_n_dual": str(r[2]),
            "ratio_k_dual": str(r[3]),
            "lrq_primal": self.lrq_primal,
            "dual_cusp_bound": self.dual_cusp_bound,
            "dual_quadratic_bound": self.dual_quadratic_bound,
            "admissible": self.admissible,
        }


SWEEP_LIMITS = (Fraction(2, 3), Fraction(7, 18), Fraction(2, 9), Fraction(19, 9))


def sweep_row(d: int) -> SweepRow:
    """Cuspidal stratum with floor((d+3)^2/9) cusps, its dual, and the
    quadratic bounds on both sides.

    The arithmetic is carried out on raw integers: for small d the
    stratum is not admissible (d = 5 has more cusps than its genus allows)
    and the row is still reported, flagged by ``admissible``.
    """
    if d < 5:
        raise ValueError("sweep starts at degree 5")
    k = (d + 3) ** 2 // 9
    g = arithmetic_genus(d) - k
    c = d * (d - 1) - 3 * k
    dual_delta = arithmetic_genus(c) - g
    dual_kappa = c * (c - 1) - d
    n_dual = 3 * dual_delta - dual_kappa
    k_dual = dual_kappa - 2 * dual_delta
    return SweepRow(
        d=d, k=k, d_dual=c, g=g, n_dual=n_dual, k_dual=k_dual,
        lrq_primal=5 * 3 * k - 6 * k <= (d + 3) ** 2,
        dual_cusp_bound=k_dual < 3 * c,
        dual_quadratic_bound=4 * n_dual + 9 * k_dual < (c + 3) ** 2,
        admissible=c >= 2 and triple_admissible(ClassTriple(d, g, c)),
    )


def dual_sweep(d_min: int, d_max: int, step: int = 1) -> List[SweepRow]:
    if d_min < 5:
        raise ValueError("sweep starts at degree 5")
    return [sweep_row(d) for d in range(d_min, d_max + 1, step)]


def report_json(report: CriteriaReport) -> str:
    return json.dumps(report.to_dict(), indent=2)
