"""Counting identities and obstructions: genus, Morse inequalities, corollaries."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .errors import HypothesisViolation, ParityError, PreconditionError, SchemaError
from .portrait import OrbitKind, OrbitPortrait, orbit_counts


@dataclass(frozen=True)
class GenusResult:
    """Number of twisted-product summands ``g`` and of polar pieces ``k``.

    Only constructed when the parity check passes, so ``parity_ok`` is
    always true on returned values; it is kept for the machine report.
    """

    g: int
    k: int
    parity_ok: bool = True

    def to_dict(self):
        return {"g": self.g, "k": self.k, "parity_ok": self.parity_ok}


def genus(mu: int, nu: int) -> GenusResult:
    if mu < 2:
        raise PreconditionError(f"need at least two nodes (mu >= 2), got mu={mu}")
    if nu < 0:
        raise PreconditionError(f"nu must be non-negative, got {nu}")
    if (mu + nu) % 2:
        raise ParityError(f"mu + nu = {mu + nu} is odd; after cutting every codimension-one "
                          "separatrix the pieces pair one sink with one source")
    g = (nu - mu + 2) // 2
    if g < 0:
        raise HypothesisViolation(f"g = (nu - mu + 2)/2 = {g} < 0: need nu >= mu - 2 "
                                  f"(mu={mu}, nu={nu})")
    return GenusResult(g=g, k=(mu + nu) // 2)


def morse_counts(p: OrbitPortrait) -> list[int]:
    """M_j = number of periodic points with stable dimension j, j = 0..n."""
    counts = [0] * (p.n + 1)
    for o in p.orbits:
        counts[p.n - o.unstable_dim] += o.period
    return counts


def alternating_partial_sums(xs: Sequence[int]) -> list[int]:
    """S_j = x_j - x_{j-1} + ... ± x_0 for every j."""
    out, acc = [], 0
    for x in xs:
        acc = x - acc
        out.append(acc)
    return out


def euler_sum(xs: Sequence[int]) -> int:
    return sum(x if i % 2 == 0 else -x for i, x in enumerate(xs))


@dataclass(frozen=True)
class MorseReport:
    counts: tuple[int, ...]
    betti: tuple[int, ...]
    inequality_verdicts: tuple[bool, ...]
    euler_ok: bool

    @property
    def ok(self) -> bool:
        return self.euler_ok and all(self.inequality_verdicts)

    def first_failure(self) -> Optional[int]:
        for j, v in enumerate(self.inequality_verdicts):
            if not v:
                return j
        return None

    def to_dict(self):
        return {
            "counts": list(self.counts),
            "betti": list(self.betti),
            "inequality_verdicts": list(self.inequality_verdicts),
            "euler_ok": self.euler_ok,
            "ok": self.ok,
        }


def check_morse_inequalities(counts: Sequence[int], betti: Sequence[int]) -> MorseReport:
    if len(counts) != len(betti):
        raise SchemaError(f"counts has length {len(counts)} but betti has {len(betti)}",
                          field="betti")
    lhs = alternating_partial_sums(counts)
    rhs = alternating_partial_sums(betti)
    verdicts = tuple(a >= b for a, b in zip(lhs, rhs))
    return MorseReport(tuple(counts), tuple(betti), verdicts,
                       euler_sum(counts) == euler_sum(betti))


class Conclusion(str, Enum):
    MUST_EXIST = "MUST_EXIST"
    MUST_HAVE_PERIODIC_TRAJECTORY = "MUST_HAVE_PERIODIC_TRAJECTORY"
    INCONCLUSIVE = "INCONCLUSIVE"


def _free_product_excluded(g: int, pi1_free_rank: Optional[int]) -> bool:
    # pi1 avoids Z*...*Z (g factors). A free group of rank >= 2 contains free
    # subgroups of every finite rank, so a rank >= 2 assertion never excludes one.
    if pi1_free_rank is None:
        return False
    return pi1_free_rank < g and pi1_free_rank < 2


def corollary_heteroclinic(g: int, pi1_free_rank: Optional[int] = None) -> Conclusion:
    """Forced heteroclinic intersection between index-1 and index-(n-1) saddles."""
    if g < 1:
        raise PreconditionError(f"needs g >= 1, got g={g}")
    if _free_product_excluded(g, pi1_free_rank):
        return Conclusion.MUST_EXIST
    return Conclusion.INCONCLUSIVE


def corollary_periodic_trajectory(g: int, pi1_free_rank: Optional[int] = None) -> Conclusion:
    """Forced closed trajectory for a flow with no heteroclinic intersections."""
    if g < 1:
        raise PreconditionError(f"needs g >= 1, got g={g}")
    if _free_product_excluded(g, pi1_free_rank):
        return Conclusion.MUST_HAVE_PERIODIC_TRAJECTORY
    return Conclusion.INCONCLUSIVE


@dataclass(frozen=True)
class CorollaryOutcome:
    """Corollary verdict applied to a concrete portrait.

    ``consistent`` is False when a forced object is absent from the portrait,
    i.e. the portrait cannot live on a manifold with the asserted pi1.
    """

    conclusion: Conclusion
    g: int
    consistent: bool
    note: str = ""

    def to_dict(self):
        return {"conclusion": self.conclusion.value, "g": self.g,
                "consistent": self.consistent, "note": self.note}


def corollary_for_portrait(p: OrbitPortrait) -> CorollaryOutcome:
    mu, nu, _ = orbit_counts(p)
    g = genus(mu, nu).g
    if p.is_flow:
        if p.edges:
            raise PreconditionError("the periodic-trajectory criterion needs a flow "
                                    "without heteroclinic intersections")
        if p.orientable is not True:
            raise PreconditionError("the periodic-trajectory criterion needs an orientable manifold")
        c = corollary_periodic_trajectory(g, p.pi1_free_rank)
        if c is Conclusion.MUST_HAVE_PERIODIC_TRAJECTORY:
            return CorollaryOutcome(c, g, False,
                                    "a gradient-like flow has no closed trajectory, so no such "
                                    "flow exists on a manifold with this fundamental group")
        return CorollaryOutcome(c, g, True)

    if p.orientable is not True:
        raise PreconditionError("the heteroclinic criterion needs an orientable manifold")
    c = corollary_heteroclinic(g, p.pi1_free_rank)
    if c is Conclusion.MUST_EXIST:
        om = p.orbit_map()
        # Morse index here is dim W^u: W^s(p) ∩ W^u(q) with u(p) = 1, u(q) = n - 1
        witnessed = any(
            om[e.from_id].kind is OrbitKind.SADDLE and om[e.to_id].kind is OrbitKind.SADDLE
            and om[e.from_id].unstable_dim == 1 and om[e.to_id].unstable_dim == p.n - 1
            for e in p.edges if e.from_id in om and e.to_id in om)
        if not witnessed:
            return CorollaryOutcome(c, g, False,
                                    "the forced intersection between an index-1 and an "
                                    "index-(n-1) saddle is missing from the portrait")
    return CorollaryOutcome(c, g, True)
