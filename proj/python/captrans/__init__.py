"""Optimal transport for non-additive measures (capacities) on finite sets."""

from ._captrans import (
    CaptransError,
    Capacity,
    CostMatrix,
    GroundCost,
    LPStatus,
    Method,
    PlanValidation,
    SetVector,
    TransportPlan,
    Universe,
    VectorKind,
    discrepancy,
    ground_absdiff,
    is_additive,
    is_belief,
    lift_equalized,
    lift_kappa,
    lift_tiered,
    maxplus,
    maxplus_inverse,
    measure_from_json,
    measure_to_json,
    mobius,
    mobius_inverse,
    plan_from_json,
    plan_to_json,
    refines,
    solve_bpa,
    solve_classical,
    solve_maxplus,
    solve_mobius,
    validate_capacity,
    validate_plan,
)

__all__ = [
    "CaptransError",
    "Capacity",
    "CostMatrix",
    "GroundCost",
    "LPStatus",
    "Method",
    "PlanValidation",
    "SetVector",
    "TransportPlan",
    "Universe",
    "VectorKind",
    "discrepancy",
    "ground_absdiff",
    "is_additive",
    "is_belief",
    "lift_equalized",
    "lift_kappa",
    "lift_tiered",
    "maxplus",
    "maxplus_inverse",
    "measure_from_json",
    "measure_to_json",
    "mobius",
    "mobius_inverse",
    "plan_from_json",
    "plan_to_json",
    "refines",
    "solve_bpa",
    "solve_classical",
    "solve_maxplus",
    "solve_mobius",
    "validate_capacity",
    "validate_plan",
]

__version__ = "0.1.0"
