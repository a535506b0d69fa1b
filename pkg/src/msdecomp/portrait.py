"""Discrete data of a Morse-Smale system on a closed n-manifold.

An :class:`OrbitPortrait` records the periodic orbits (with unstable
dimension and period) and the saddle-to-saddle heteroclinic intersections.
All counts exposed here are *point* counts: an orbit of period k stands for
k periodic points.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Optional


class SystemKind(str, Enum):
    DIFFEOMORPHISM = "diffeomorphism"
    GRADIENT_LIKE_FLOW = "gradient_like_flow"


class OrbitKind(str, Enum):
    SINK = "sink"
    SOURCE = "source"
    SADDLE = "saddle"


class EdgeKind(str, Enum):
    POINTS = "points"
    SUBMANIFOLD = "submanifold"


@dataclass(frozen=True)
class PeriodicOrbit:
    id: str
    kind: OrbitKind
    unstable_dim: int
    period: int = 1

    def stable_dim(self, n: int) -> int:
        return n - self.unstable_dim

    def is_node(self) -> bool:
        return self.kind in (OrbitKind.SINK, OrbitKind.SOURCE)

    def is_codim_one(self, n: int) -> bool:
        return self.kind is OrbitKind.SADDLE and self.unstable_dim in (1, n - 1)


@dataclass(frozen=True)
class HeteroclinicEdge:
    """Nonempty intersection of W^u(to_id) with W^s(from_id).

    ``dim`` is the dimension of the intersection components; it is 0 for
    ``EdgeKind.POINTS`` and equals m >= 1 for ``EdgeKind.SUBMANIFOLD``.
    """

    from_id: str
    to_id: str
    kind: EdgeKind = EdgeKind.POINTS
    dim: int = 0

    @classmethod
    def submanifold(cls, from_id, to_id, m):
        return cls(from_id, to_id, EdgeKind.SUBMANIFOLD, m)


def intersection_dim(n: int, u_from: int, u_to: int) -> int:
    """Dimension of a transversal W^u(to) ∩ W^s(from) in an n-manifold."""
    return u_to + (n - u_from) - n


def edge_kind_for(d: int) -> tuple[EdgeKind, int]:
    if d < 0:
        raise ValueError(f"negative intersection dimension {d}")
    return (EdgeKind.POINTS, 0) if d == 0 else (EdgeKind.SUBMANIFOLD, d)


@dataclass(frozen=True)
class OrbitPortrait:
    dimension: int
    system_kind: SystemKind
    orbits: tuple[PeriodicOrbit, ...]
    edges: tuple[HeteroclinicEdge, ...] = ()
    orientable: Optional[bool] = None
    betti: Optional[tuple[int, ...]] = None
    pi1_free_rank: Optional[int] = None

    def __post_init__(self):
        # accept lists from callers, store tuples so the value stays hashable
        object.__setattr__(self, "orbits", tuple(self.orbits))
        object.__setattr__(self, "edges", tuple(self.edges))
        if self.betti is not None:
            object.__setattr__(self, "betti", tuple(self.betti))

    @property
    def n(self) -> int:
        return self.dimension

    @property
    def is_flow(self) -> bool:
        return self.system_kind is SystemKind.GRADIENT_LIKE_FLOW

    def orbit(self, orbit_id: str) -> PeriodicOrbit:
        for o in self.orbits:
            if o.id == orbit_id:
                return o
        raise KeyError(orbit_id)

    def orbit_map(self) -> dict[str, PeriodicOrbit]:
        return {o.id: o for o in self.orbits}

    def saddles(self) -> list[PeriodicOrbit]:
        return [o for o in self.orbits if o.kind is OrbitKind.SADDLE]

    def codim_one_saddles(self) -> list[PeriodicOrbit]:
        return [o for o in self.orbits if o.is_codim_one(self.n)]

    def other_saddles(self) -> list[PeriodicOrbit]:
        return [o for o in self.saddles() if not o.is_codim_one(self.n)]

    def total_points(self) -> int:
        return sum(o.period for o in self.orbits)

    def inverse(self) -> OrbitPortrait:
        """Portrait of the time-reversed system (f^-1, or -v for flows)."""
        n = self.n
        flip = {OrbitKind.SINK: OrbitKind.SOURCE, OrbitKind.SOURCE: OrbitKind.SINK,
                OrbitKind.SADDLE: OrbitKind.SADDLE}
        orbits = tuple(replace(o, kind=flip[o.kind], unstable_dim=n - o.unstable_dim)
                       for o in self.orbits)
        # W^u(q) ∩ W^s(p) becomes W^s(q) ∩ W^u(p): endpoints swap, dimension is kept
        edges = tuple(replace(e, from_id=e.to_id, to_id=e.from_id) for e in self.edges)
        return replace(self, orbits=orbits, edges=edges)


def touched_separatrix_owners(p: OrbitPortrait, e: HeteroclinicEdge) -> list[str]:
    """Saddles whose codimension-one separatrix contains the intersection ``e``.

    ``e`` lies in W^u(to) and in W^s(from). The unstable manifold of ``to`` is
    the codimension-one one iff its dimension is n-1; the stable manifold of
    ``from`` is iff its unstable dimension is 1.
    """
    om = p.orbit_map()
    n = p.n
    owners = []
    q = om.get(e.to_id)
    if q is not None and q.kind is OrbitKind.SADDLE and q.unstable_dim == n - 1:
        owners.append(q.id)
    s = om.get(e.from_id)
    if s is not None and s.kind is OrbitKind.SADDLE and s.unstable_dim == 1:
        owners.append(s.id)
    return owners


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: Optional[str] = None
    # True for breaches of the "no heteroclinic submanifolds on codimension-one
    # separatrices" hypothesis, False for plain data inconsistencies
    hypothesis: bool = False

    def to_dict(self):
        d = {"code": self.code, "message": self.message, "hypothesis": self.hypothesis}
        if self.where is not None:
            d["where"] = self.where
        return d


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def admissible(self) -> bool:
        return not self.violations

    @property
    def structural_ok(self) -> bool:
        return not any(not v.hypothesis for v in self.violations)

    def codes(self) -> set[str]:
        return {v.code for v in self.violations}

    def to_dict(self):
        return {"admissible": self.admissible,
                "violations": [v.to_dict() for v in self.violations]}


def _orbit_violations(p: OrbitPortrait) -> Iterable[Violation]:
    n = p.n
    seen = Counter(o.id for o in p.orbits)
    for oid, c in seen.items():
        if c > 1:
            yield Violation("duplicate_id", f"orbit id {oid!r} used {c} times", oid)
    for i, o in enumerate(p.orbits):
        where = f"orbits[{i}]"
        if not 0 <= o.unstable_dim <= n:
            yield Violation("dimension_arithmetic",
                            f"orbit {o.id!r}: unstable_dim {o.unstable_dim} outside [0, {n}]", where)
            continue
        if o.period < 1:
            yield Violation("dimension_arithmetic", f"orbit {o.id!r}: period must be >= 1", where)
        elif p.is_flow and o.period != 1:
            yield Violation("flow_period",
                            f"orbit {o.id!r}: equilibria of a flow have period 1, got {o.period}", where)
        expected = {OrbitKind.SINK: o.unstable_dim == 0,
                    OrbitKind.SOURCE: o.unstable_dim == n,
                    OrbitKind.SADDLE: 1 <= o.unstable_dim <= n - 1}[o.kind]
        if not expected:
            yield Violation("kind_dimension_mismatch",
                            f"orbit {o.id!r}: kind {o.kind.value} incompatible with "
                            f"unstable_dim {o.unstable_dim} (n={n})", where)


def _edge_violations(p: OrbitPortrait) -> Iterable[Violation]:
    n = p.n
    om = p.orbit_map()
    for i, e in enumerate(p.edges):
        where = f"edges[{i}]"
        missing = [x for x in (e.from_id, e.to_id) if x not in om]
        if missing:
            yield Violation("unknown_orbit", f"edge refers to unknown orbit(s) {missing}", where)
            continue
        a, b = om[e.from_id], om[e.to_id]
        if a.kind is not OrbitKind.SADDLE or b.kind is not OrbitKind.SADDLE:
            yield Violation("edge_to_non_saddle",
                            f"edge {e.from_id!r}<-{e.to_id!r} has a non-saddle endpoint", where)
            continue
        if a.id == b.id:
            yield Violation("self_edge", f"edge joins saddle {a.id!r} to itself", where)
            continue
        d = intersection_dim(n, a.unstable_dim, b.unstable_dim)
        if d < 0:
            yield Violation("dimension_arithmetic",
                            f"W^u({b.id}) ∩ W^s({a.id}) would have dimension {d}; "
                            "a transversal intersection must be empty", where)
            continue
        declared = e.dim if e.kind is EdgeKind.SUBMANIFOLD else 0
        if (e.kind is EdgeKind.POINTS) != (d == 0) or declared != d:
            yield Violation("kind_dimension_mismatch",
                            f"edge {a.id!r}<-{b.id!r}: declared {e.kind.value}"
                            f"{'' if e.kind is EdgeKind.POINTS else f'({e.dim})'} but "
                            f"dimension count gives {d}", where)
        if p.is_flow and d == 0:
            yield Violation("flow_points_edge",
                            "a nonempty intersection for a flow contains a whole trajectory", where)
        owners = touched_separatrix_owners(p, e)
        if owners and (p.is_flow or d >= 1):
            what = "intersects" if p.is_flow else f"carries a {d}-dimensional heteroclinic submanifold on"
            yield Violation("codim_one_separatrix",
                            f"edge {a.id!r}<-{b.id!r} {what} the codimension-one "
                            f"separatrix of {', '.join(owners)}", where, hypothesis=True)


def validate_portrait(p: OrbitPortrait) -> ValidationReport:
    out: list[Violation] = []
    if p.n < 3:
        out.append(Violation("dimension_arithmetic", f"dimension must be >= 3, got {p.n}", "dimension"))
    out.extend(_orbit_violations(p))
    out.extend(_edge_violations(p))
    if p.betti is not None:
        if len(p.betti) != p.n + 1:
            out.append(Violation("betti_length",
                                 f"expected {p.n + 1} Betti numbers, got {len(p.betti)}", "betti"))
        if any(b < 0 for b in p.betti):
            out.append(Violation("betti_negative", "Betti numbers must be non-negative", "betti"))
    if p.pi1_free_rank is not None and p.pi1_free_rank < 0:
        out.append(Violation("pi1_rank", "pi1_free_rank must be non-negative", "pi1_free_rank"))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class OrbitCounts:
    mu: int
    nu: int
    other_saddles: int

    def __iter__(self):
        return iter((self.mu, self.nu, self.other_saddles))


def orbit_counts(p: OrbitPortrait) -> OrbitCounts:
    """Period-weighted counts (nodes, codimension-one saddles, other saddles)."""
    mu = nu = other = 0
    for o in p.orbits:
        if o.is_node():
            mu += o.period
        elif o.is_codim_one(p.n):
            nu += o.period
        else:
            other += o.period
    return OrbitCounts(mu, nu, other)
