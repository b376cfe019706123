"""Exact two-particle models of Z2xZ2-graded parastatistics.

Modules, bottom up: ``grading`` (sign forms), ``gmatrix`` (graded matrices
over Q[l]), ``algebra`` (oscillators and spectrum-generating algebras),
``multiparticle`` (braided coproduct, two-particle spaces), ``chirality``
(discriminating projectors) and ``gedanken`` (blind identification runs).
"""

from .algebra import LABELS, catalog, closure_check, graded_bracket, jacobi_check
from .chirality import PAIRS, discriminate, embed_observable, measure, sign_pair
from .gedanken import TrialConfig, emit_report, identify_pair, run_blind_test
from .gmatrix import GradedMatrix, collision_set, evaluate, graded_kron
from .grading import GradeWord, classify, make_form, preset
from .multiparticle import fingerprint, hilbert_space, space
from .poly import LAMBDA, PolyScalar, parse_poly

__version__ = "0.1.0"

__all__ = [
    "LABELS",
    "catalog",
    "closure_check",
    "graded_bracket",
    "jacobi_check",
    "PAIRS",
    "discriminate",
    "embed_observable",
    "measure",
    "sign_pair",
    "TrialConfig",
    "emit_report",
    "identify_pair",
    "run_blind_test",
    "GradedMatrix",
    "collision_set",
    "evaluate",
    "graded_kron",
    "GradeWord",
    "classify",
    "make_form",
    "preset",
    "fingerprint",
    "hilbert_space",
    "space",
    "LAMBDA",
    "PolyScalar",
    "parse_poly",
]
