"""Integer invariants of equiclassical families of plane curves.

A family is pinned down by any of three equivalent integer triples:
(degree, genus, class), (degree, delta, kappa) or (degree, nodes, cusps),
the last one counting virtual nodes and cusps.  All conversions are
exact; inequalities are compared with denominators cleared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAdmissible


@dataclass(frozen=True, order=True)
class ClassTriple:
    d: int
    g: int
    c: int

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"degree must be >= 1, got {self.d}")

    def __str__(self) -> str:
        return f"({self.d},{self.g},{self.c})"


@dataclass(frozen=True)
class DeltaKappa:
    d: int
    delta: int
    kappa: int


@dataclass(frozen=True)
class NodalCuspidal:
    d: int
    nodes: int
    cusps: int


def arithmetic_genus(d: int) -> int:
    return (d - 1) * (d - 2) // 2


def raw_delta_kappa(t: ClassTriple) -> tuple[int, int]:
    """(delta, kappa) without range checks; either may be negative."""
    return arithmetic_genus(t.d) - t.g, t.d * (t.d - 1) - t.c


def to_delta_kappa(t: ClassTriple) -> DeltaKappa:
    delta, kappa = raw_delta_kappa(t)
    if delta < 0 or kappa < 0:
        raise NotAdmissible(f"{t}: delta={delta}, kappa={kappa} must be non-negative")
    return DeltaKappa(t.d, delta, kappa)


def to_class_triple(dk: DeltaKappa) -> ClassTriple:
    return ClassTriple(dk.d, arithmetic_genus(dk.d) - dk.delta, dk.d * (dk.d - 1) - dk.kappa)


def from_nodal_cuspidal(nc: NodalCuspidal) -> DeltaKappa:
    return DeltaKappa(nc.d, nc.nodes + nc.cusps, 2 * nc.nodes + 3 * nc.cusps)


def virtual_counts(dk: DeltaKappa) -> NodalCuspidal:
    """Virtual nodes 3*delta - kappa and cusps kappa - 2*delta."""
    if not 2 * dk.delta <= dk.kappa <= 3 * dk.delta:
        raise NotAdmissible(f"need 2*delta <= kappa <= 3*delta, got delta={dk.delta}, kappa={dk.kappa}")
    return NodalCuspidal(dk.d, 3 * dk.delta - dk.kappa, dk.kappa - 2 * dk.delta)


def dual_triple(t: ClassTriple) -> ClassTriple:
    return ClassTriple(t.c, t.g, t.d)


def is_admissible(dk: DeltaKappa) -> bool:
    """Necessary numerical condition for a non-empty family; delta = kappa = 0
    is the smooth case."""
    return 0 <= 2 * dk.delta <= dk.kappa <= 3 * dk.delta and dk.delta <= arithmetic_genus(dk.d)


def triple_admissible(t: ClassTriple) -> bool:
    delta, kappa = raw_delta_kappa(t)
    return delta >= 0 and kappa >= 0 and is_admissible(DeltaKappa(t.d, delta, kappa))


def expected_dim(t: ClassTriple) -> int:
    return t.d - t.g + t.c + 1


def cusp_excess(t: ClassTriple) -> int:
    """2d - 2 - c + 2g, which equals kappa - 2*delta."""
    return 2 * t.d - 2 - t.c + 2 * t.g


def node_excess(t: ClassTriple) -> int:
    """c - 3g + (d^2 - 7d + 6)/2, which equals 3*delta - kappa."""
    return t.c - 3 * t.g + (t.d * t.d - 7 * t.d + 6) // 2


def gamma_point(kappa_z: int, delta_z: int) -> Fraction:
    """kappa^2/delta for one singular point with local invariants (kappa, delta)."""
    if delta_z < 1 or not 2 * delta_z <= kappa_z <= 3 * delta_z:
        raise NotAdmissible(f"local invariants (kappa={kappa_z}, delta={delta_z}) out of range")
    return Fraction(kappa_z * kappa_z, delta_z)
