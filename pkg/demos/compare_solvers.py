"""
BFGS-SQP and SQP-GS from one starting point
===========================================

Both solvers on the 18-delay shaper problem from the same LC start, with
deterministic unit costs so the output does not depend on the machine.
"""

# %%
import numpy as np

from shaperopt import bfgs_sqp, sqp_gs
from shaperopt.shaper import StartSet, build_problem, generate_starts, reference_instance

problem = build_problem(reference_instance())
x0 = generate_starts(StartSet("lc", seed=1, count=1), problem.n)[0]
ev = problem.evaluate(x0)
print(f"start: f = {ev.f:.4g}, violation = {ev.violation:.3g}")

# %%
# BFGS-SQP steers the penalty parameter and keeps one quasi-Newton model of
# the penalty function; it never samples.
h1 = bfgs_sqp.run(problem, x0, bfgs_sqp.BfgsSqpConfig(max_iter=100, cost_mode="unit"))

# %%
# SQP-GS samples 2n gradients of the abscissa constraint around every iterate.
h2 = sqp_gs.run(problem, x0, sqp_gs.SqpGsConfig(max_iter=100, seed=0, cost_mode="unit"))

# %%
for h in (h1, h2):
    best = h.best_feasible()
    best = "none" if best is None else f"{best:.6g}"
    print(f"{h.solver:9s} {h.iterations:4d} iterations, stop: {h.termination.value}, best feasible f: {best}")
    if "nonsmooth_grad_evals" in h.meta:
        print("          abscissa gradients per iteration:", h.meta["nonsmooth_grad_evals"][0])

# %%
# Penalty parameter trajectories: both only ever decrease rho.
print("bfgs-sqp rho:", sorted({r.rho for r in h1.records}, reverse=True))
print("sqp-gs   rho:", sorted({r.rho for r in h2.records}, reverse=True))
