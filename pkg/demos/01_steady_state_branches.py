"""Self-consistent steady state: unique and bistable regimes.

The static displacement solves q = (g_cb|c_s(q)|^2 - g_mb|m_s(q)|^2)/omega_b.
The magnon Lorentzian feeds back into its own detuning, so a strong drive
bends the response until three branches coexist.
"""
import numpy as np

from ommsim import SystemParams, solve_steady_state, steady_state_residuals

# weak drive: one branch, essentially the uncoupled root
weak = SystemParams(g_mb=0.05, delta_m0=0.5, omega_rabi=0.02)
for ss in solve_steady_state(weak):
    print(f"weak drive    branch {ss.branch_id}: q_s = {ss.q_s:+.6e}  residual = {ss.residual:.1e}")

# strong drive: the feedback folds the response into three branches
strong = SystemParams(g_mb=0.05, delta_m0=0.5, omega_rabi=0.2)
branches = solve_steady_state(strong)
print(f"\nstrong drive: {len(branches)} coexisting branches")
for ss in branches:
    tag = " (default: connected to q=0)" if ss.is_default else ""
    print(
        f"  branch {ss.branch_id}: q_s = {ss.q_s:+.4f}, effective delta_m = {ss.delta_m:+.4f}, "
        f"|m_s| = {abs(ss.m_s):.2f}{tag}"
    )
    res = steady_state_residuals(strong, ss)
    assert max(res.values()) < 1e-12

# trace the fold by sweeping the drive amplitude
print("\nbranch count vs drive amplitude:")
for omega in np.linspace(0.05, 0.4, 8):
    n = len(solve_steady_state(strong.replace(omega_rabi=float(omega))))
    print(f"  omega_rabi = {omega:.3f}: {n} branch(es)")
