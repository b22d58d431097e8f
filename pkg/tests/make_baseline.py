"""Regenerate tests/data/baseline.json from the current pipeline.

Run only after a deliberate change of the numerics; the regression tests
compare against the frozen file.
"""

import json
from pathlib import Path

import numpy as np

import eitnoise as en

Z_GRID = [0.0, 10.0, 24.45, 50.0, 100.0]
OMEGA = 0.25


def _cplx(arr):
    arr = np.asarray(arr, dtype=complex)
    return {"re": arr.real.tolist(), "im": arr.imag.tolist()}


def case(gamma12):
    params = en.MediumParams(gamma12=gamma12)
    drive = en.drive_from_rabi(params, 1.0, 1.0, xi2=-3.0)
    mean = en.steady_state_numeric(drive, params)
    block = en.fluctuation_block(drive, params, mean)
    cmap = en.simulate_decoherence(drive, params, OMEGA, Z_GRID)
    return {
        "gamma12": gamma12,
        "mean": {"pop1": mean.pop1, "pop2": mean.pop2, "pope": mean.pope,
                 "coh12": [mean.coh12.real, mean.coh12.imag],
                 "pol1e": [mean.pol1e.real, mean.pol1e.imag],
                 "pol2e": [mean.pol2e.real, mean.pol2e.imag]},
        "diff": _cplx(block.diff),
        "n_mat": _cplx(en.noise_injection(block, params, OMEGA)),
        "z_grid": Z_GRID,
        "s1": cmap.s1.tolist(),
        "s2": cmap.s2.tolist(),
    }


if __name__ == "__main__":
    out = {"omega": OMEGA, "cases": [case(1 / 500), case(10.0)]}
    path = Path(__file__).parent / "data" / "baseline.json"
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {path}")
