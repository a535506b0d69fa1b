"""Connected-sum decompositions and realization plans for Morse-Smale orbit portraits."""

from .cutting import (BundleType, ConnectedSumExpr, CutEdge, CutRecord, PolarPiece,
                      PortraitGraph, brute_force_decompose, cut, decompose, generic_graph)
from .errors import (GraphError, HypothesisViolation, LimitError, OrderCycleError, ParityError,
                     PlanError, PreconditionError, SchemaError)
from .morse import (Conclusion, GenusResult, MorseReport, check_morse_inequalities,
                    corollary_heteroclinic, corollary_periodic_trajectory, genus, morse_counts)
from .order import find_cuttable_saddle, smale_order
from .portrait import (EdgeKind, HeteroclinicEdge, OrbitKind, OrbitPortrait, PeriodicOrbit,
                       SystemKind, ValidationReport, orbit_counts, validate_portrait)
from .projective import ProjectiveReport, analyze_single_saddle, hopf_pairs
from .realization import (RealizationPlan, plan_realization, simulate_plan, verify_round_trip)
from .scenario import Scenario, parse_scenario, render_scenario

__version__ = "0.1.0"
