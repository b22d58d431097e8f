"""
Absorption and oscillation lengths
==================================

The fluctuations obey two length scales. ``z_abs`` sets how fast the field
relaxes to the asymptotic noise, ``z_osc`` how fast squeezing swaps between
the beams. Close to the carrier the oscillation is much faster than the
absorption, which is where the transfer is visible.
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eitnoise as en

params = en.MediumParams()
drive = en.drive_from_rabi(params, 1.0, 1.0)
ctx = en.ClosedFormContext(drive, params)

omegas = np.linspace(0.02, 3.0, 400)
scales = np.array([en.length_scales(w, ctx)[:2] for w in omegas])

for w in (0.1, 0.25):
    zs = en.length_scales(w, ctx)
    print(f"omega = {w}: z_abs = {zs.z_abs:.2f}, z_osc = {zs.z_osc:.2f}, "
          f"ratio = {zs.z_abs / zs.z_osc:.2f}")

mean_peak, fluct_peak = en.peak_positions(ctx)

fig, (top, bottom) = plt.subplots(2, 1, figsize=(7, 6), sharex=True)
top.semilogy(omegas, scales[:, 0], label=r"$z_{abs}$")
top.semilogy(omegas, scales[:, 1], label=r"$z_{osc}$")
top.set_ylabel(r"length $\times C/\gamma$")
top.legend()

# %%
# The resonance curve peaks at the total Rabi frequency; the mean-value
# absorption peak sits slightly higher.
unit = params.gamma / ctx.c_prefactor
bottom.plot(omegas, params.gamma * en.resonance_p(omegas, 0.0, ctx) * unit)
bottom.axvline(fluct_peak, ls="--", color="0.5", label="fluctuation peak")
bottom.axvline(mean_peak, ls=":", color="0.5", label="mean-value peak")
bottom.set_xlabel(r"$\omega/\gamma$")
bottom.set_ylabel(r"$\gamma P(\omega, 0)\,\gamma/C$")
bottom.legend()

out = Path(__file__).parent / "figures"
out.mkdir(exist_ok=True)
fig.savefig(out / "length_scales.png", dpi=120, bbox_inches="tight")
