"""Python bindings for the solar panel cleaning robot simulator."""

from ._core import (
    BatteryModel,
    ChargePhase,
    ChargerConfig,
    ChargerState,
    ChargeStepResult,
    Event,
    MissionState,
    PidGains,
    PidResult,
    PidState,
    RunResult,
    RunSummary,
    Scenario,
    TraceRow,
    battery_dot_level,
    buck_inductance,
    charge_step,
    detect_cliff,
    discharge_step,
    filter_capacitance,
    lc_corner_frequency,
    mission_state_name,
    pid_step,
    run,
    ultra_distance,
)

__all__ = [
    "BatteryModel",
    "ChargePhase",
    "ChargerConfig",
    "ChargerState",
    "ChargeStepResult",
    "Event",
    "MissionState",
    "PidGains",
    "PidResult",
    "PidState",
    "RunResult",
    "RunSummary",
    "Scenario",
    "TraceRow",
    "battery_dot_level",
    "buck_inductance",
    "charge_step",
    "detect_cliff",
    "discharge_step",
    "filter_capacitance",
    "lc_corner_frequency",
    "mission_state_name",
    "pid_step",
    "run",
    "ultra_distance",
]
