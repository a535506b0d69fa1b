"""Portraits with exactly one saddle that is not codimension one.

Such a saddle σ with unstable dimension k lives in a polar piece N made of
an open n-ball and a k-sphere. The Morse relations force n = 2k, and the
boundary of a tubular neighbourhood of the sphere is then a sphere bundle
S^{n-1} -> S^k, which exists only for the Hopf fibrations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import claims as C
from .claims import Claim
from .cutting import (BundleType, ConnectedSumExpr, PolarPiece, PortraitGraph,
                      check_graph, decompose)
from .errors import HypothesisViolation
from .morse import genus
from .portrait import OrbitPortrait, orbit_counts, validate_portrait

_HOPF_PAIRS = frozenset({(4, 2), (8, 4), (16, 8)})


def hopf_pairs() -> frozenset:
    """(n, k) such that a sphere bundle S^{n-1} -> S^k with fibre S^{k-1} exists."""
    return _HOPF_PAIRS


@dataclass(frozen=True)
class ProjectiveReport:
    admissible: bool
    n: int
    k: Optional[int]
    decomposition: Optional[ConnectedSumExpr] = None
    structure_claims: tuple[Claim, ...] = ()
    reasons: tuple[Claim, ...] = field(default=())

    def to_dict(self):
        return {
            "admissible": self.admissible,
            "n": self.n,
            "k": self.k,
            "decomposition": self.decomposition.to_dict() if self.decomposition else None,
            "structure_claims": [c.to_dict() for c in self.structure_claims],
            "reasons": [c.to_dict() for c in self.reasons],
        }


def _reject(n, k, text, citation):
    return ProjectiveReport(False, n, k, reasons=(Claim(text, citation),))


def analyze_single_saddle(p: OrbitPortrait,
                          graph: Optional[PortraitGraph] = None) -> ProjectiveReport:
    """Check the single-saddle constraints and describe the resulting manifold.

    Rejections come back as a report with ``admissible=False``; only an
    inconsistent ``graph`` raises.
    """
    n = p.n
    thm = C.SINGLE_SADDLE_FLOW if p.is_flow else C.SINGLE_SADDLE
    report = validate_portrait(p)
    if not report.admissible:
        return _reject(n, None, "portrait is not admissible: "
                       + "; ".join(v.message for v in report.violations), thm)
    if n == 3:
        return _reject(n, None, "n = 3: a polar piece would need exactly three periodic points",
                       C.THREE_MANIFOLDS)
    others = p.other_saddles()
    if len(others) != 1:
        return _reject(n, None, f"expected exactly one saddle that is not codimension one, "
                                f"found {len(others)}", thm)
    sigma = others[0]
    k = sigma.unstable_dim
    if sigma.period != 1:
        return _reject(n, k, f"saddle {sigma.id!r} must be fixed, has period {sigma.period}", thm)
    if n % 2:
        return _reject(n, k, f"n = {n} is odd; (-1)^k = (-1)^(n-k) forces n even", thm)
    if 2 * k != n:
        return _reject(n, k, f"unstable dimension {k} != n/2 = {n // 2}; the Morse "
                             "inequalities and duality force k = n/2", thm)
    if (n, k) not in hopf_pairs():
        return _reject(n, k, f"no sphere bundle S^{n - 1} -> S^{k} with fibre S^{k - 1}",
                       C.HOPF_TABLE)
    mu, nu, _ = orbit_counts(p)
    try:
        gen = genus(mu, nu)
    except HypothesisViolation as exc:
        return _reject(n, k, str(exc), thm)

    if graph is not None:
        check_graph(p, graph)
        expr, _ = decompose(p, graph)
    else:
        pieces = [PolarPiece("N", (k,))] + [PolarPiece(f"S{i}") for i in range(1, gen.k)]
        expr = ConnectedSumExpr(n, gen.g, (BundleType.UNKNOWN,) * gen.g, tuple(pieces),
                                flow=p.is_flow)

    m = n // 2
    structure = [
        Claim(f"N = B^{n} ⊔ S^{m} (open ball and a locally flat {m}-sphere)", thm),
        Claim(("pi_1(N) = 0" if m == 2 else f"pi_1(N) = ... = pi_{m - 1}(N) = 0")
              + "; N is simply connected and orientable", thm),
    ]
    if p.is_flow or n in (8, 16):
        structure.append(Claim("N is projective-like", thm))
    if gen.g == 0:
        structure.append(Claim("nu = mu - 2, so M = N", thm))
    else:
        structure.append(Claim(f"M = {gen.g} x (S^{n - 1} ⊗ S^1) ♯ N", thm))
    return ProjectiveReport(True, n, k, expr, tuple(structure))
