"""Exact and finite-volume Riemann solutions of the isentropic Euler
equations with p = kappa rho^gamma, and their zero-pressure limit."""

from ._core import (
    AdmissibilityError,
    ConfigError,
    CriticalKappa,
    DeltaShock,
    DomainError,
    Error,
    ExactSolution,
    FieldState,
    Grid1D,
    IoError,
    NumericalError,
    PolytropicEos,
    PressurelessSolution,
    RegimeError,
    SchemeConfig,
    StepError,
    SweepRecord,
    Wave,
    classify,
    critical_kappa,
    delta_diagnostic,
    geometric_schedule,
    kappa_rs,
    kappa_sr,
    l1_error,
    left_curve_v,
    pressure,
    regime,
    right_curve_v,
    run,
    sample,
    sample_field,
    sample_pressureless,
    solve,
    solve_pressureless,
    sound_speed,
    sweep,
    vacuum_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
