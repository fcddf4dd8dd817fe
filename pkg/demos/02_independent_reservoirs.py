"""Two qubits, each in its own zero-temperature Lorentzian reservoir.

For a broad reservoir (lambda = 10 gamma0) the discord of |Phi> decays
monotonically. For a narrow one (lambda = 0.1 gamma0) memory effects make
it revive, and it vanishes exactly whenever the damping amplitude q(t)
crosses zero.

    python3 demos/02_independent_reservoirs.py
"""

import numpy as np

from geodiscord.reservoir import InitialPhi, ReservoirParams, critical_times, discord_trace

init = InitialPhi(0.5)
times = np.linspace(0, 40, 9)

for lam in (10.0, 0.1):
    params = ReservoirParams(lam=lam)
    trace = discord_trace(init, params, times, "trace")
    print(f"lambda = {lam:g} gamma0 ({params.regime})")
    print("  gamma0 t " + " ".join(f"{t:7.1f}" for t in times))
    print("  D_T      " + " ".join(f"{v:7.4f}" for v in trace.values))

params = ReservoirParams(lam=0.1)
tn = critical_times(3, params)
print("\ncritical times gamma0 t_n:", ", ".join(f"{t:.6f}" for t in tn))
at_zero = discord_trace(init, params, tn, "trace").values
print("D_T at those instants:    ", ", ".join(f"{v:.1e}" for v in at_zero))
