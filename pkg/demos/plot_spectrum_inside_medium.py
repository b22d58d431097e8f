"""
Noise spectra deep inside the medium
====================================

Pump and probe spectra at a fixed position, as functions of the sideband
frequency. Close to the carrier the input state is preserved; around the
absorption maximum both beams have reached their shared asymptote.
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eitnoise as en

params = en.MediumParams()
drive = en.drive_from_rabi(params, 1.0, 1.0, xi2=-3.0)
ctx = en.ClosedFormContext(drive, params)

omegas = np.linspace(0.01, 3.0, 300)
position = 100.0
s1, s2 = en.closed_form_spectra(position, omegas, ctx, theta=0.0)
numeric = en.sweep(drive, params, omegas[::15], [position])

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(omegas, s1, "--", label="pump")
ax.plot(omegas, s2, label="probe")
ax.plot(omegas[::15], [m.s2[0] for m in numeric], "o", mfc="none", color="tab:orange")
ax.axhline(en.asymptotic_spectra(ctx, 0.0)[1], color="0.6", lw=0.8)
ax.set_xlabel(r"$\omega/\gamma$")
ax.set_ylabel(r"$S_j$")
ax.legend()

out = Path(__file__).parent / "figures"
out.mkdir(exist_ok=True)
fig.savefig(out / "spectrum_inside_medium.png", dpi=120, bbox_inches="tight")
