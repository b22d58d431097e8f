"""
Squeezing transfer between probe and pump
=========================================

At a fixed sideband frequency the squeezing of the probe is handed over to
the pump and back while both decay towards a common level. The closed-form
curves and the numerical propagation lie on top of each other.
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
omega = 0.25

z = np.linspace(0.0, 200.0, 801)
numeric = en.simulate(drive, params, omega, z)
s1, s2 = en.closed_form_spectra(z, omega, ctx, theta=0.0)

scales = en.length_scales(omega, ctx)
print(f"first maximal transfer at zC/gamma = {scales.z_max_transfer:.2f}")
print(f"absorption length zC/gamma = {scales.z_abs:.2f}")

# %%
# Markers show the numerical result on a thinned grid.
fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(z, s1, "--", color="tab:blue", label="pump")
ax.plot(z, s2, color="tab:red", label="probe")
ax.plot(z[::20], numeric.s1[::20], "o", mfc="none", color="tab:blue")
ax.plot(z[::20], numeric.s2[::20], "o", mfc="none", color="tab:red")
ax.axvline(scales.z_max_transfer, color="0.6", lw=0.8)
ax.set_xlabel(r"$z\,C/\gamma$")
ax.set_ylabel(r"$S_j$")
ax.legend()

out = Path(__file__).parent / "figures"
out.mkdir(exist_ok=True)
fig.savefig(out / "transfer_along_medium.png", dpi=120, bbox_inches="tight")
