"""Acceptance criteria, each at its stated tolerance.

Every test prints one ``criterion N: PASS|FAIL`` line (visible with ``-v`` or
``-s``) before asserting, so a run gives a complete scorecard even when some
criteria fail.
"""

import math
import time

import numpy as np
import pytest
from scipy.signal import argrelextrema

import eitnoise as en

XI = -3.0
F0 = 1 - math.exp(2 * XI)
OMEGAS = np.linspace(0.05, 1.0, 20)
Z = np.linspace(0.0, 200.0, 100)
RABI_PAIRS = [(1.0, 1.0), (1.0, 2.0), (0.5, 1.5)]


def report(capsys, label, ok, detail):
    with capsys.disabled():
        print(f"\n{label}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, detail


def _fig3(gamma12=0.0, om1=1.0, om2=1.0, xi=XI):
    p = en.MediumParams(gamma12=gamma12)
    return en.drive_from_rabi(p, om1, om2, xi2=xi), p


def _grid_deviation(drive, params, omegas, z, pipeline=en.simulate, theta=0.0):
    ctx = en.ClosedFormContext(drive, params)
    worst = 0.0
    for w in omegas:
        cmap = pipeline(drive, params, w, z, theta)
        s1, s2 = en.closed_form_spectra(z, w, ctx, theta)
        worst = max(worst, np.abs(cmap.s1 - s1).max(), np.abs(cmap.s2 - s2).max())
    return worst


def test_criterion_01_boundary_values(capsys):
    d, p = _fig3()
    ctx = en.ClosedFormContext(d, p)
    dev = 0.0
    for w in OMEGAS:
        a1, a2 = en.closed_form_spectra(0.0, w, ctx, 0.0)
        cmap = en.simulate(d, p, w, [0.0], 0.0)
        dev = max(dev, abs(a1 - 1), abs(a2 - math.exp(2 * XI)),
                  abs(cmap.s1[0] - 1), abs(cmap.s2[0] - math.exp(2 * XI)))
    report(capsys, "criterion 1", dev <= 1e-9, f"max boundary deviation {dev:.2e} <= 1e-9")


def test_criterion_02_analytic_numeric_equivalence(capsys):
    d, p = _fig3()
    start = time.perf_counter()
    dev = _grid_deviation(d, p, OMEGAS, Z)
    elapsed = time.perf_counter() - start
    ok = dev <= 1e-3 and elapsed < 60
    report(capsys, "criterion 2", ok,
           f"max |S_num - S_an| = {dev:.2e} <= 1e-3 over 20 x 100 grid in {elapsed:.2f} s")


def test_criterion_03_eigenvalue_identity(capsys):
    worst = 0.0
    for om1, om2 in RABI_PAIRS:
        d, p = _fig3(om1=om1, om2=om2)
        block = en.fluctuation_block(d, p, en.dark_state(d))
        ctx = en.ClosedFormContext(d, p)
        for w in OMEGAS:
            gen = en.field_generator(block, d, p, w)
            rate = p.gamma * en.resonance_p(w, 0.0, ctx)
            osc = en.resonance_p(w, d.omega_total, ctx) * w
            rep = en.eigen_report(gen)
            target = -rate / 2 + 1j * np.sign(w ** 2 - d.omega_total ** 2) * osc
            worst = max(worst, np.abs(rep.bright - target).max() / abs(target))
    report(capsys, "criterion 3", worst <= 1e-6,
           f"max relative eigenvalue deviation {worst:.2e} <= 1e-6")


def test_criterion_04_transfer_positions(capsys):
    d, p = _fig3()
    ctx = en.ClosedFormContext(d, p)
    zs = en.length_scales(0.25, ctx)
    z = np.linspace(0, 60, 1201)
    s2 = en.simulate(d, p, 0.25, z).s2
    first_max = z[argrelextrema(s2, np.greater)[0][0]]
    gap = (64 - zs.z_abs) / zs.z_abs
    ok = (abs(zs.z_max_transfer - 24.45) <= 1 and abs(first_max - 24.45) <= 1
          and abs(zs.z_abs - 60.3) <= 0.5)
    report(capsys, "criterion 4", ok,
           f"z_max_transfer = {zs.z_max_transfer:.3f}, numeric first maximum at {first_max:.2f}, "
           f"z_abs = {zs.z_abs:.3f}; FLAG: reference estimate 64 differs by {100 * gap:.1f}%")


def test_criterion_05_length_scale_ratio(capsys):
    d, p = _fig3()
    zs = en.length_scales(0.1, en.ClosedFormContext(d, p))
    ratio = zs.z_abs / zs.z_osc
    report(capsys, "criterion 5", abs(ratio - 9.95) <= 0.05,
           f"z_abs / z_osc = {zs.z_abs:.2f} / {zs.z_osc:.2f} = {ratio:.4f}")


def test_criterion_06_sum_conservation(capsys):
    worst = 0.0
    for om1, om2 in RABI_PAIRS:
        d, p = _fig3(om1=om1, om2=om2)
        ctx = en.ClosedFormContext(d, p)
        for w in (0.01, 0.02):
            z = np.linspace(0, 1e-3 * en.length_scales(w, ctx).z_abs, 25)
            for theta in (0.0, math.pi / 4, math.pi / 2):
                f = en.f_factor(XI, theta)
                cmap = en.simulate(d, p, w, z, theta)
                worst = max(worst, np.abs(cmap.s1 + cmap.s2 - (2 - f)).max() / abs(f))
    d, p = _fig3()
    s1_inf, s2_inf = en.asymptotic_spectra(en.ClosedFormContext(d, p), 0.0)
    ok = worst <= 1e-2 and s1_inf == s2_inf
    report(capsys, "criterion 6", ok,
           f"max |S1 + S2 - (2 - f)| / |f| = {worst:.2e} <= 1e-2; "
           f"S1(inf) - S2(inf) = {s1_inf - s2_inf:.1e}")


def test_criterion_07_strong_pump(capsys):
    d, p = _fig3(om1=1.0, om2=1e-3)
    ctx = en.ClosedFormContext(d, p)
    unit = en.length_unit(p, d)
    block = en.fluctuation_block(d, p, en.dark_state(d))
    dev_s1 = dev_s2 = dev_rate = 0.0
    for w in (0.1, 0.25, 0.5, 1.0):
        rate = p.gamma * en.resonance_p(w, 0.0, ctx)
        cmap = en.simulate(d, p, w, Z)
        dev_s1 = max(dev_s1, np.abs(cmap.s1 - 1).max())
        dev_s2 = max(dev_s2, np.abs(cmap.s2 - (1 - F0 * np.exp(-rate * unit * Z))).max())
        a_probe = en.field_generator(block, d, p, w).a_mat[1, 1]
        dev_rate = max(dev_rate, abs(-2 * a_probe.real - rate) / rate)
    ok = dev_s1 <= 1e-5 and dev_s2 <= 1e-5 and dev_rate <= 1e-5
    report(capsys, "criterion 7", ok,
           f"|S1 - 1| = {dev_s1:.2e}, |S2 - exp law| = {dev_s2:.2e}, "
           f"relative probe absorption rate error {dev_rate:.2e}")


def test_criterion_08_coherent_invariance(capsys):
    worst = 0.0
    for om1, om2 in RABI_PAIRS:
        d, p = _fig3(om1=om1, om2=om2, xi=0.0)
        ctx = en.ClosedFormContext(d, p)
        for w in OMEGAS:
            for theta in (0.0, 0.9):
                cmap = en.simulate(d, p, w, Z, theta)
                s1, s2 = en.closed_form_spectra(Z, w, ctx, theta)
                worst = max(worst, *(np.abs(s - 1).max() for s in (cmap.s1, cmap.s2, s1, s2)))
    report(capsys, "criterion 8", worst <= 1e-9, f"max |S - 1| = {worst:.2e} <= 1e-9")


def test_criterion_09a_weak_decoherence_bound(capsys):
    d, p = _fig3(gamma12=1 / 500)
    z = np.linspace(0, 100, 1001)
    ideal = en.simulate(d, en.MediumParams(), 0.25, z).s2
    dephased = en.simulate_decoherence(d, p, 0.25, z).s2
    dev = np.abs(dephased - ideal)
    bound = 0.1 * F0
    report(capsys, "criterion 9a", dev.max() < bound,
           f"sup |S2(gamma12=1/500) - S2(ideal)| = {dev.max():.4f} at zC/gamma = "
           f"{z[dev.argmax()]:.1f}, bound {bound:.4f}")


def test_criterion_09b_decoherence_reduction(capsys):
    d, p = _fig3()
    dev = _grid_deviation(d, p, OMEGAS, Z, pipeline=en.simulate_decoherence)
    same = max(np.abs(en.simulate_decoherence(d, p, w, Z).s2 - en.simulate(d, p, w, Z).s2).max()
               for w in OMEGAS[::4])
    ok = dev <= 1e-3 and same <= 1e-10
    report(capsys, "criterion 9b", ok,
           f"gamma12 = 0 decoherence pipeline: max |S - S_an| = {dev:.2e}, "
           f"max difference to ideal pipeline {same:.1e}")


@pytest.mark.parametrize("gamma12", [0.0, 1 / 500, 10.0])
def test_criterion_10_oracles(capsys, gamma12):
    mean_dev, einstein = 0.0, 0.0
    for om1, om2 in RABI_PAIRS + [(1.0, 1e-3), (0.3, 0.0)]:
        d, p = _fig3(gamma12=gamma12, om1=om1, om2=om2)
        numeric = en.steady_state_numeric(d, p)
        if gamma12 == 0:
            mean_dev = max(mean_dev, np.abs(en.dark_state(d).atomic_vector()
                                            - numeric.atomic_vector()).max())
        block = en.fluctuation_block(d, p, numeric)
        einstein = max(einstein, en.einstein_residual(block, numeric))
    ok = mean_dev <= 1e-12 and einstein <= 1e-10
    report(capsys, f"criterion 10 (gamma12={gamma12:g})", ok,
           f"dark vs numeric steady state {mean_dev:.1e} <= 1e-12, "
           f"Einstein residual {einstein:.1e} <= 1e-10")
