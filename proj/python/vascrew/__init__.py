"""Variable-angle screw locomotion toolkit.

Thin Python face over the C++ core: kinematics, trial-log processing,
per-media interaction model fitting, and angle-of-attack planning.
"""

from vascrew._core import (  # noqa: F401
    ActuatorCommand,
    AngleOfAttack,
    AnglePlan,
    BaselinePair,
    DataError,
    DomainError,
    Error,
    FitDiagnostics,
    FitResult,
    LoadEnvelope,
    MediaParams,
    Objective,
    Observation,
    ParetoPoint,
    ParseError,
    ScrewGeometry,
    TrialLog,
    TrialMetrics,
    angle_from_length,
    angle_to_actuator_length,
    baseline_drift,
    butterworth_filtfilt,
    choose_angle,
    clip_steady_state,
    fit_media,
    gravity_augment,
    lead_per_revolution,
    length_from_angle,
    load_envelope,
    locomotive_efficiency,
    lowpass,
    no_slip_velocity,
    pareto_front,
    peak_forces,
    predict_efficiency,
    predict_thrust,
    predict_torque,
    predict_velocity,
    read_baseline_csv,
    read_geometry_json,
    read_media_library_json,
    read_trial_csv,
    steady_state_range,
    tare,
    trial_metrics,
    write_media_library_json,
    write_trial_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
