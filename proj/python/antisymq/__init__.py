"""Python surface of the antisymmetrization circuit toolkit."""

from _antisymq import (
    circuit_metrics,
    circuit_qasm,
    dicke_amplitudes,
    dicke_circuit_qasm,
    n_perm_binomial,
    n_perm_sum,
    run_determinants,
    run_random,
    schedule_is_valid,
    shared_schedule,
)

__all__ = [
    "circuit_metrics",
    "circuit_qasm",
    "dicke_amplitudes",
    "dicke_circuit_qasm",
    "n_perm_binomial",
    "n_perm_sum",
    "run_determinants",
    "run_random",
    "schedule_is_valid",
    "shared_schedule",
]
