"""sin_{p,q} as the solution of an initial value problem.

The inversion route never touches a differential equation, so integrating
the p-Laplacian eigenvalue problem with an adaptive Runge-Kutta pair gives
an independent check.  Tightening the step tolerance should shrink the
discrepancy roughly in proportion.
"""

from gentrig import validate
from gentrig.ode_oracle import compare_detail, integrate_ivp, invariant_residual

for p, q in [(2, 2), (3, 2), (2, 4), (4, 3)]:
    pair = validate(p, q)
    print(f"(p, q) = ({p}, {q})")
    for hyp in (False, True):
        name = "sinh" if hyp else "sin"
        for tol in (1e-6, 1e-8, 1e-10):
            err, at = compare_detail(pair, 16, hyperbolic=hyp, tol=tol)
            print(f"  {name:4} tol {tol:.0e}: max |ODE - inversion| {err:.2e} at x = {at:.3f}")
        traj = integrate_ivp(pair, hyperbolic=hyp)
        print(f"  {name:4} first integral drift {invariant_residual(traj, pair, hyperbolic=hyp):.1e} over {len(traj.xs)} steps")
    print()
