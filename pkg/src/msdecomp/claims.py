"""Claim strings emitted in reports, each tagged with the result it rests on."""

from __future__ import annotations

from dataclasses import dataclass

# Citations name the result by content so reports stay readable on their own.
DECOMPOSITION = "decomposition theorem"
DECOMPOSITION_FLOW = "decomposition theorem, flow version"
BETTI_OF_PIECES = "decomposition theorem, orientable case (Morse inequalities on polar pieces)"
SINGLE_SADDLE = "single-saddle theorem for diffeomorphisms"
SINGLE_SADDLE_FLOW = "single-saddle theorem for flows"
HOPF_TABLE = "classification of sphere bundles S^{n-1} -> S^k (Hopf fibrations)"
THREE_MANIFOLDS = "three-dimensional case: periodic-point counts of polar pieces"
REALIZATION = "realization theorem"
HETEROCLINIC_COROLLARY = "free-product criterion for heteroclinic intersections"
PERIODIC_COROLLARY = "free-product criterion for periodic trajectories"


@dataclass(frozen=True)
class Claim:
    text: str
    citation: str

    def to_dict(self):
        return {"text": self.text, "citation": self.citation}

    def __str__(self):
        return f"{self.text}  [{self.citation}]"
