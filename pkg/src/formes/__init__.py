"""Exact-integer reduction theory of binary quadratic forms.

Enumerates the divisor forms of t^2 +- a*u^2, reduces forms, decides
equivalence of indefinite forms through their cycles, and regenerates the
classical divisor-form tables with brute-force verification.
"""

from .core import (
    FLIP,
    IDENTITY,
    SWAP,
    DivisorWitness,
    FormClassification,
    FormesError,
    FormKind,
    NotReducibleError,
    QuadraticForm,
    UnimodularTransform,
    apply_transform,
    classify,
    compose,
    divisor_witness,
    isqrt,
    reduce_form,
)
from .enumeration import (
    DegenerateFormError,
    DivisorTableEntry,
    Sign,
    SplitFormError,
    enumerate_divisor_forms,
    enumerate_general,
    q_bound,
    squarefree_kernel,
)
from .indefinite import (
    Cycle,
    CycleState,
    DivisorClass,
    cycle,
    divisor_classes,
    equivalent_indefinite,
    reduced_members,
)
from .oracle import (
    CoverageReport,
    CoverageRow,
    bruteforce_equivalence,
    coprime_values,
    coverage_report,
    odd_divisors,
    represents,
)

__version__ = "0.1.0"

__all__ = [
    "FLIP",
    "IDENTITY",
    "SWAP",
    "Cycle",
    "CycleState",
    "CoverageReport",
    "CoverageRow",
    "DegenerateFormError",
    "DivisorClass",
    "DivisorTableEntry",
    "DivisorWitness",
    "FormClassification",
    "FormesError",
    "FormKind",
    "NotReducibleError",
    "QuadraticForm",
    "Sign",
    "SplitFormError",
    "UnimodularTransform",
    "apply_transform",
    "bruteforce_equivalence",
    "classify",
    "compose",
    "coprime_values",
    "coverage_report",
    "cycle",
    "divisor_classes",
    "divisor_witness",
    "enumerate_divisor_forms",
    "enumerate_general",
    "equivalent_indefinite",
    "isqrt",
    "odd_divisors",
    "q_bound",
    "reduce_form",
    "reduced_members",
    "represents",
    "squarefree_kernel",
]
