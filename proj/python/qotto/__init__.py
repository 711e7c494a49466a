"""Quantum Otto machine with a q-deformed Poschl-Teller working substance."""

from ._qotto import (  # noqa: F401
    CellOutcome,
    CycleConfig,
    CycleResult,
    Method,
    Metric,
    Optimum,
    OverflowError,
    PotentialParams,
    ReducedVariables,
    Regime,
    Spectrum,
    SweepCell,
    SweepFailure,
    SweepGrid,
    SweepMethod,
    SweepSpec,
    ThermalState,
    TruncationError,
    classify_regime,
    cop,
    cosh_q,
    dawson,
    efficiency,
    eigenvalue,
    erf,
    erfc,
    erfi,
    erfi_scaled,
    evaluate_cycle,
    find_optimum,
    hyp2f1_poly,
    log_partition_closed,
    log_partition_sum,
    n_max,
    normalization_constant,
    partition_closed,
    partition_sum,
    potential,
    potential_minimum_location,
    q_cold_closed,
    q_cold_sum,
    q_hot_closed,
    q_hot_sum,
    reduced_variables,
    run_sweep,
    schrodinger_residual,
    sinh_q,
    spectrum,
    tanh_q,
    thermal_state,
    to_csv,
    to_json_string,
    wavefunction,
    work,
    write_csv_file,
    write_json_file,
)

__version__ = "0.1.0"
