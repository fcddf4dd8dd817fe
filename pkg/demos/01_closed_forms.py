"""Geometric discord of a few textbook two-qubit states.

Walks through the closed forms and the sphere searches that back them up:
a Bell state, a Werner-like Bell-diagonal mixture, an X state with
complex coherences and a classical-quantum state.

    python3 demos/01_closed_forms.py
"""

import numpy as np

from geodiscord import bures_discord, trace_discord
from geodiscord.discord import BellDiagonalParams, XStateParams, dt_measurement_oracle
from geodiscord.quantum import ket, projector

bell = projector((ket("00") + ket("11")) / np.sqrt(2))
werner = BellDiagonalParams(0.6, -0.6, 0.6).to_matrix()
xstate = XStateParams(0.35, 0.15, 0.2, 0.3, 0.2 + 0.1j, 0.05j).to_matrix()
# a classical-quantum state: A is classical in the sigma_x basis
plus, minus = (ket("0") + ket("1")) / np.sqrt(2), (ket("0") - ket("1")) / np.sqrt(2)
cq = 0.7 * np.kron(projector(plus), projector(ket("0"))) + 0.3 * np.kron(projector(minus), projector(ket("1")))

print(f"{'state':<10} {'D_T':>10} {'route':<14} {'D_B':>10} {'route':<14}")
for name, rho in [("bell", bell), ("werner", werner), ("x-state", xstate), ("cq", cq)]:
    dt, dt_route = trace_discord(rho)
    db, db_route = bures_discord(rho)
    print(f"{name:<10} {dt:10.6f} {dt_route:<14} {db:10.6f} {db_route:<14}")

# the X-state formula against a brute-force search over projective measurements
closed, _ = trace_discord(xstate, method="closed")
print(f"\nX state: closed form {closed:.8f}, measurement search {dt_measurement_oracle(xstate):.8f}")
