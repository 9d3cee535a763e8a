"""Acceptance gate: one test per criterion, one printed PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s`.

Three checks (fig5 peak positions, fig7 magnon-decay trend, stability of all
preset working points) encode qualitative claims that the model's own
verified algebra contradicts at the reference coupling G_mb = 0.5; they are
implemented as stated and fail honestly.  deviations.md and the test output
carry the analysis.
"""

import time

import numpy as np

from ommsim import (
    SystemParams,
    assess_stability,
    compare,
    drift_matrix_elements,
    effective_state,
    response_point,
    solve_steady_state,
)
from ommsim.presets import (
    TABLE_PARAMS,
    fig2a_curves,
    fig2a_reference,
    fig5a,
    fig7a,
    fig7b,
    figure_working_points,
)
from ommsim.sweep import _detect_features_arrays, export, run_sweep

GRID = np.linspace(-2.0, 2.0, 2001)


def report(name, ok, detail=""):
    line = f"ACCEPTANCE {name}: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    print(line)
    assert ok, line


# ---------------------------------------------------------------------------
# 1. oracle equivalence over randomized stable working points


def test_a01_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240817)
    worst, accepted = 0.0, 0
    while accepted < 1000:
        kc, km, gb = rng.uniform(1e-3, 1.0, 3)
        dc, dm = rng.uniform(-2.0, 2.0, 2)
        gc, gm = rng.uniform(0.0, 0.6, 2)
        margin = assess_stability(
            drift_matrix_elements(1.0, gb, kc, km, dc, dm, complex(gc), complex(gm))
        ).margin
        if margin >= 0:
            continue
        accepted += 1
        params = SystemParams(kappa_c=kc, kappa_m=km, gamma_b=gb)
        ss, eff = effective_state(delta_c=dc, delta_m=dm, G_cb=gc, G_mb=gm)
        rep = compare(params, ss, eff, [float(rng.uniform(-2.0, 2.0))])
        worst = max(worst, rep.max_rel)
    elapsed = time.perf_counter() - t0
    report(
        "oracle-equivalence",
        worst <= 1e-10 and elapsed < 10.0,
        f"max_rel={worst:.3e}, {elapsed:.2f}s for 1000 stable sets",
    )


# ---------------------------------------------------------------------------
# 2. bare-cavity identity


def test_a02_bare_cavity_identity():
    params = TABLE_PARAMS
    worst = 0.0
    for g_mb in (0.0, 0.5):
        ss, eff = effective_state(delta_c=1.0, delta_m=0.5, G_cb=0.0, G_mb=g_mb)
        for delta in GRID:
            p = response_point(params, ss, eff, float(delta))
            bare = 2 * params.kappa_c / (params.kappa_c + 1j * (1.0 - delta))
            worst = max(worst, abs(p.eps_T - bare) / abs(bare))
            assert p.fwm == 0.0
    report("bare-cavity-identity", worst <= 1e-12, f"max rel dev {worst:.3e}, fwm identically 0")


# ---------------------------------------------------------------------------
# 3. probe-scaling invariance


def test_a03_probe_scaling_invariance():
    ss, eff = effective_state(delta_c=1.0, delta_m=0.5, G_cb=0.05, G_mb=0.5)
    ref = [response_point(TABLE_PARAMS, ss, eff, float(d)) for d in GRID[::50]]
    worst = 0.0
    for eps_p in (1e-3, 1e3):
        params = TABLE_PARAMS.replace(eps_p=eps_p)
        for d, r in zip(GRID[::50], ref):
            p = response_point(params, ss, eff, float(d))
            worst = max(worst, abs(p.eps_T - r.eps_T) / abs(r.eps_T))
            if r.fwm > 0:
                worst = max(worst, abs(p.fwm - r.fwm) / r.fwm)
    report("probe-scaling-invariance", worst <= 1e-12, f"max rel dev {worst:.3e}")


# ---------------------------------------------------------------------------
# 4. steady-state residuals on every preset working point + cubic closed form


def calibrate(params, delta_c, delta_m, g_cb_eff, g_mb_eff, g=1e-3):
    """Bare parameters whose fixed point realizes the given working point."""
    c_mag = abs(g_cb_eff) / (np.sqrt(2) * g)
    m_mag = abs(g_mb_eff) / (np.sqrt(2) * g)
    q_s = (g * c_mag**2 - g * m_mag**2) / params.omega_b
    return params.replace(
        g_cb=g,
        g_mb=g,
        delta_c0=delta_c + g * q_s,
        delta_m0=delta_m - g * q_s,
        omega_rabi=m_mag * abs(1j * delta_m + params.kappa_m),
        eps_L=c_mag * abs(1j * delta_c + params.kappa_c),
    )


def test_a04_steady_state_residuals():
    seen, worst = set(), 0.0
    n_checked = 0
    for label, params, dc, dm, gc, gm in figure_working_points():
        key = (params.kappa_c, params.kappa_m, dc, dm, gc, gm)
        if key in seen:
            continue
        seen.add(key)
        bare = calibrate(params, dc, dm, gc, gm)
        for ss in solve_steady_state(bare):
            worst = max(worst, ss.residual / max(1.0, abs(ss.q_s)))
        n_checked += 1
    cubic_ok = True
    for dm0, omega in ((0.5, 1.0), (0.5, 0.2)):
        p = SystemParams(g_mb=0.05 if omega == 0.2 else 1e-3, delta_m0=dm0, omega_rabi=omega)
        roots = np.roots(
            [
                p.omega_b * p.g_mb**2,
                2 * p.omega_b * p.g_mb * p.delta_m0,
                p.omega_b * (p.delta_m0**2 + p.kappa_m**2),
                p.g_mb * p.omega_rabi**2,
            ]
        )
        real = sorted(float(r.real) for r in roots if abs(r.imag) < 1e-10)
        sol = solve_steady_state(p)
        cubic_ok &= len(sol) == len(real) and all(
            abs(s.q_s - q) <= 1e-10 * max(1.0, abs(q)) for s, q in zip(sol, real)
        )
    report(
        "steady-state-residual",
        worst <= 1e-12 and cubic_ok,
        f"worst residual {worst:.3e} over {n_checked} calibrated working points; "
        f"cubic closed-form match: {cubic_ok}",
    )


# ---------------------------------------------------------------------------
# 5. fig2 features: sideband dips and lineshape-asymmetry ordering


def test_a05_fig2_features():
    ref = run_sweep(fig2a_reference(n_delta=4001))
    x = np.asarray(ref.spec["delta_grid"])
    y = ref.values["lambda"][0, 0]
    feats = _detect_features_arrays(x, y, prominence_threshold=1e-3 * (y.max() - y.min()))
    dips = sorted(d[0] for d in feats.dips)
    dips_ok = (
        len(dips) == 2
        and abs(dips[0] + 1.0) <= 0.02
        and abs(dips[1] - 1.0) <= 0.02
    )

    curves = run_sweep(fig2a_curves(n_delta=4001))
    dm_values = curves.spec["axis1"]["values"]
    asym = {dm: curves.features["lambda"][i][0].asymmetry for i, dm in enumerate(dm_values)}
    asym_ok = asym[1.0] < asym[0.3]
    report(
        "fig2a-features",
        dips_ok and asym_ok,
        f"dips at {dips}; asymmetry dm=1.0: {asym[1.0]:.4f} < dm=0.3: {asym[0.3]:.4f}",
    )


# ---------------------------------------------------------------------------
# 6. fig5 features: peak counts, positions, frozen multiplicity baselines


FIG5_DM = (0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8, 1.0)
# regression baselines, frozen from the first engine run (8001-point grid,
# default 1% prominence): multiplicities and refined positions
FIG5_BASELINE = {
    0.5: (3, (-1.1220, 0.0, 1.1220)),
    0.6: (4, (-1.1498, -0.2105, 0.2105, 1.1498)),
    0.8: (4, (-1.2177, -0.4004, 0.4004, 1.2177)),
    1.0: (4, (-1.3077, -0.5381, 0.5381, 1.3077)),
}


def fig5_features():
    result = run_sweep(fig5a(n_delta=8001, dm_values=FIG5_DM), workers=4)
    return {
        dm: result.features["fwm"][i][0] for i, dm in enumerate(FIG5_DM)
    }


def test_a06a_fig5_peak_count_low_detuning():
    feats = fig5_features()
    counts = {dm: feats[dm].peak_count for dm in FIG5_DM if dm <= 0.4}
    report(
        "fig5-peak-count",
        all(c == 2 for c in counts.values()),
        f"counts for dm<=0.4: {counts}",
    )


def test_a06b_fig5_peak_positions_low_detuning():
    feats = fig5_features()
    positions = {dm: tuple(round(p[0], 4) for p in feats[dm].peaks) for dm in FIG5_DM if dm <= 0.4}
    offsets = {dm: max(abs(abs(p) - 1.0) for p in pos) for dm, pos in positions.items()}
    print(f"fig5 peak positions (dm<=0.4): {positions}")
    print(
        "analysis: the magnon-spring shift omega_b*|G_mb|^2*Im(chi1) moves the sideband "
        "peaks outward with increasing delta_m (oracle-verified; see deviations.md); "
        "the 0.02 tolerance holds only for delta_m <~ 0.08."
    )
    report(
        "fig5-peak-positions",
        all(off <= 0.02 for off in offsets.values()),
        f"max offsets from +-1: { {k: round(v, 4) for k, v in offsets.items()} }",
    )


def test_a06c_fig5_multiplicity_baselines():
    feats = fig5_features()
    ok = True
    detail = []
    for dm, (count, positions) in FIG5_BASELINE.items():
        f = feats[dm]
        got = tuple(p[0] for p in f.peaks)
        match = f.peak_count == count and all(
            abs(g - p) <= 0.02 for g, p in zip(got, positions)
        )
        ok &= match
        detail.append(f"dm={dm}: n={f.peak_count} at {tuple(round(g, 3) for g in got)}")
    report("fig5-multiplicity-baselines", ok, "; ".join(detail))


# ---------------------------------------------------------------------------
# 7. fig7 monotonicity in the decay rates


def test_a07a_fig7_cavity_decay_trend():
    spec = fig7a(n_delta=4001)
    result = run_sweep(spec)
    values = [float(np.max(result.values["fwm"][i, 0])) for i in range(len(spec.axis1.values))]
    increasing = all(a < b for a, b in zip(values, values[1:]))
    report(
        "fig7-cavity-decay-trend",
        increasing,
        f"max fwm over kappa_c {spec.axis1.values}: {[f'{v:.3e}' for v in values]}",
    )


def test_a07b_fig7_magnon_decay_trend():
    spec = fig7b(n_delta=4001)
    result = run_sweep(spec)
    values = [float(np.max(result.values["fwm"][i, 0])) for i in range(len(spec.axis1.values))]
    print(f"fig7b max fwm over kappa_m {spec.axis1.values}: {[f'{v:.3e}' for v in values]}")
    print(
        "analysis: magnon damping broadens the hybridized mechanical resonance, so the "
        "global maximum decreases with kappa_m at every detuning/coupling scanned "
        "(the pointwise value at delta=+-omega_b does grow with kappa_m; see deviations.md)."
    )
    increasing = all(a < b for a, b in zip(values, values[1:]))
    report("fig7-magnon-decay-trend", increasing, "max_delta fwm must increase with kappa_m")


# ---------------------------------------------------------------------------
# 8. strain-divergence quadrature


def test_a08_quadrature():
    from ommsim import MaterialParams, ModeShapeGrid, magnon_phonon_coupling

    mat = MaterialParams(B1=1.0, B2=0.0, M_s=1.0, gamma=1.0, volume=1.0, d_zpm=1.0)

    def grid(nx, ny, nz, chi, centered=False):
        x = np.linspace(-0.5, 0.5, nx) if centered else np.linspace(0, 1, nx)
        y, z = np.linspace(0, 1, ny), np.linspace(0, 1, nz)
        xg, yg, zg = np.meshgrid(x, y, z, indexing="ij")
        cx, cy, cz = chi(xg, yg, zg)
        return ModeShapeGrid(
            nx=nx, ny=ny, nz=nz,
            spacing=(1.0 / (nx - 1), 1.0 / (ny - 1), 1.0 / (nz - 1)),
            chi_x=np.broadcast_to(cx, xg.shape).copy(),
            chi_y=np.broadcast_to(cy, xg.shape).copy(),
            chi_z=np.broadcast_to(cz, xg.shape).copy(),
        )

    uniform = lambda x, y, z: (x, np.zeros_like(y), np.zeros_like(z))
    trace_free = lambda x, y, z: (x, y, z)
    sinus = lambda x, y, z: (np.sin(np.pi * x), np.zeros_like(y), np.zeros_like(z))

    err_uniform = abs(magnon_phonon_coupling(grid(17, 9, 9, uniform), mat) - 1.0)
    err_trace = abs(magnon_phonon_coupling(grid(17, 9, 9, trace_free), mat))

    exact = 2.0

    def sin_coupling(nx):
        return magnon_phonon_coupling(grid(nx, 9, 9, sinus, centered=True), mat)

    e1 = abs(sin_coupling(81) - exact)
    e2 = abs(sin_coupling(161) - exact)
    factor = e1 / e2
    richardson = (4 * sin_coupling(641) - sin_coupling(321)) / 3
    err_rich = abs(richardson - exact) / exact
    ok = (
        err_uniform <= 1e-12
        and err_trace <= 1e-12
        and 3.5 <= factor <= 4.5
        and err_rich <= 1e-8
    )
    report(
        "quadrature",
        ok,
        f"uniform err {err_uniform:.1e}, trace-free err {err_trace:.1e}, "
        f"halving factor {factor:.2f}, Richardson rel err {err_rich:.2e}",
    )


# ---------------------------------------------------------------------------
# 9. stability of every preset working point


def test_a09_stability_of_figure_configs():
    unstable = []
    n = 0
    for label, params, dc, dm, gc, gm in figure_working_points():
        n += 1
        rep = assess_stability(
            drift_matrix_elements(
                params.omega_b, params.gamma_b, params.kappa_c, params.kappa_m,
                dc, dm, gc, gm,
            )
        )
        if not rep.stable:
            unstable.append((label, round(dm, 3), abs(gm), round(rep.margin, 4)))
    if unstable:
        print(f"unstable working points ({len(unstable)}/{n}):")
        for label, dm, gm, margin in unstable:
            print(f"  {label}: delta_m={dm}, |G_mb|={gm}, margin=+{margin}")
        print(
            "analysis: static magnon-spring softening 2*delta_m*|G_mb|^2/(delta_m^2+kappa_m^2) "
            "exceeds omega_b for |G_mb|=0.5 whenever delta_m is in (0.0002, 0.4998); "
            "oracle-verified model property, see deviations.md."
        )
    report(
        "stability-of-figure-configs",
        not unstable,
        f"{len(unstable)} of {n} working points have a positive stability margin",
    )


# ---------------------------------------------------------------------------
# 10. sweep determinism across worker counts


def test_a10_sweep_determinism():
    spec = fig5a(n_delta=801, dm_values=(0.0, 0.2, 0.4, 0.6, 1.0))
    blobs = {w: export(run_sweep(spec, workers=w), "csv") for w in (1, 2, 8)}
    identical = blobs[1] == blobs[2] == blobs[8]
    report("sweep-determinism", identical, f"{len(blobs[1])} bytes, workers 1/2/8")
