"""Exact symbolic engine for the quantum symmetry group of the noncommutative n-torus."""

from .config import SessionConfig, load_config, parse_config
from .induction import Corep, Induction, classify
from .model import Model, ModelSpace, SparseOp, build_U, evaluate, verify_model_relations
from .multitorus import QuantumMultitorus, coinverse, counit, delta
from .parser import parse_element
from .perms import Perm
from .report import Report
from .scalar import Cyclo
from .suites import SUITES, run_suite
from .torus import NCTorus, ThetaMatrix

__all__ = [
    "Corep", "Cyclo", "Induction", "Model", "ModelSpace", "NCTorus", "Perm", "QuantumMultitorus", "Report",
    "SUITES", "SessionConfig", "SparseOp", "ThetaMatrix", "build_U", "classify", "coinverse", "counit", "delta",
    "evaluate", "load_config", "parse_config", "parse_element", "run_suite", "verify_model_relations",
]
