from ._lamplab import (
    HaltingSet,
    Progression,
    Registry,
    closed_ball,
    depth_table,
    dist,
    eval_factor,
    is_trivial,
    norm,
    normal_form,
    open_ball,
    progression_covered_by,
    quotient_kill_shifts,
    t_seq,
    theta,
    theta_schedule,
)

__all__ = [
    "HaltingSet",
    "Progression",
    "Registry",
    "closed_ball",
    "depth_table",
    "dist",
    "eval_factor",
    "is_trivial",
    "norm",
    "normal_form",
    "open_ball",
    "progression_covered_by",
    "quotient_kill_shifts",
    "t_seq",
    "theta",
    "theta_schedule",
]
