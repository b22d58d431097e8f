"""
Damping of the ground-state coherence
=====================================

With a finite lifetime of the ground-state coherence the atoms are no
longer perfectly dark. They absorb a little, pick up excited-state
population and feed extra noise into the fields. This script compares the
probe noise for a few dephasing rates with the ideal curve.
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

import eitnoise as en

base = en.MediumParams()
drive = en.drive_from_rabi(base, 1.0, 1.0, xi2=-3.0)
z = np.linspace(0.0, 100.0, 501)
omega = 0.25

ideal = en.simulate(drive, base, omega, z).s2

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(z, ideal, color="k", label="ideal")
for rate in (1 / 1000, 1 / 500, 1 / 100):
    params = en.MediumParams(gamma12=rate)
    s2 = en.simulate_decoherence(drive, params, omega, z).s2
    print(f"gamma12 = {rate:g}: largest deviation {np.abs(s2 - ideal).max():.3f}")
    ax.plot(z, s2, ":", label=rf"$\Gamma_{{12}} = {rate:g}\,\gamma$")

# %%
# A noise-free variant isolates the effect of the modified mean values: drop
# the injected noise and keep only the generator.
params = en.MediumParams(gamma12=1 / 500)
block = en.fluctuation_block(drive, params)
gen = en.field_generator(block, drive, params, omega)
quiet = en.FieldGenerator(gen.omega, gen.a_mat, None, gen.eigen, gen.length_unit)
s2_quiet = en.propagate_covariance(en.input_covariance(drive), quiet, z).s2
ax.plot(z, s2_quiet, "--", color="0.5", label="1/500, without injected noise")

ax.set_xlabel(r"$z\,C/\gamma$")
ax.set_ylabel(r"$S_2$")
ax.legend(fontsize=8)

out = Path(__file__).parent / "figures"
out.mkdir(exist_ok=True)
fig.savefig(out / "decoherence.png", dpi=120, bbox_inches="tight")
