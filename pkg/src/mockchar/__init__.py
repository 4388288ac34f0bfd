"""Mock-modular building blocks and N=3 superconformal characters.

Layers, bottom up: q-series primitives (``qseries``), higher-level Appell
sums (``appell``), their non-holomorphic completions (``zwegers``), the
characters built from them (``characters``, ``closed_forms``,
``asymptotics``, ``modular``) and a numerical identity harness
(``harness``, ``corpus``) driven by the ``mockchar`` command.
"""
from .base import (
    DEFAULT_PARAMS,
    CaseAborted,
    EvalParams,
    HalfInt,
    MockCharError,
    NonFiniteValue,
    PoleError,
    TauPoint,
    TruncationExceeded,
    UnknownAsymptotic,
    half,
)
from .qseries import dedekind_eta, jacobi_theta, mumford_theta, nome, theta
from .appell import denominator_product, phi, phi1, phi2
from .zwegers import phi_add, phi_tilde, r_function
from .characters import (
    CharacterId,
    Sector,
    WeightParams,
    a_ring,
    a_tilde,
    character,
    g_function,
    n3_denominator,
    p_function,
    q_function,
    sector_numerator,
)
from .closed_forms import closed_form_character, has_closed_form
from .asymptotics import asymptotic_ladder, asymptotic_prediction, tabulated_characters
from .harness import EvalPoint, IdentityCase, IdentityReport, SampleBox, run_case, run_suite
from .corpus import builtin_corpus

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
