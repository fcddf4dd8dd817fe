"""Trace- and Bures-distance geometric discord of two qubits in Lorentzian reservoirs."""

from .discord import (
    BellDiagonalParams,
    FmaxResult,
    XStateParams,
    bures_discord,
    classify_state,
    db_from_fmax,
    db_pure,
    dt_bell_diagonal,
    dt_measurement_oracle,
    dt_xstate,
    fmax_2xn,
    fmax_bell_diagonal,
    trace_discord,
)
from .quantum import (
    InvalidStateError,
    UnitVector,
    check_density_matrix,
    herm_eig,
    kron,
    matrix_sqrt_psd,
    partial_trace,
    trace_norm,
    uhlmann_fidelity,
)
from .reservoir import (
    InitialPhi,
    ReservoirParams,
    TimeSeries,
    Topology,
    amplitude_common,
    amplitude_independent,
    critical_times,
    discord_trace,
    evolve_common,
    evolve_independent,
    ode_oracle_common,
    steady_common,
)
from .sphere import MeasurementGrid

__version__ = "0.1.0"
