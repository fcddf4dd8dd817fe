"""Detuning the qubits from the reservoir peak protects discord.

Independent narrow reservoirs, alpha2 = 0.5. With zero detuning the trace
discord dips to zero at the critical times; moving the qubit frequency
away from the Lorentzian centre weakens the coupling and the discord
only wobbles around its initial value.

    python3 demos/04_detuning_preservation.py
"""

import numpy as np

from geodiscord.reservoir import InitialPhi, ReservoirParams, discord_trace

init = InitialPhi(0.5)
times = np.linspace(0, 30, 601)

print(f"{'delta/gamma0':>12} {'min D_T':>9} {'min D_B':>9}")
for delta in (0.0, 0.5, 1.0, 2.0, 4.0):
    params = ReservoirParams(lam=0.1, delta=delta)
    dt = discord_trace(init, params, times, "trace").values
    db = discord_trace(init, params, times, "bures").values
    print(f"{delta:12.1f} {dt.min():9.4f} {db.min():9.4f}")
