"""
Relative minimization profiles and GL-Profiles
==============================================

Profiles computed from a directory of run histories, such as the one written by
``shaperopt-bench run``.  Pass the directory as the first argument; the
default is the desk-scale results directory.
"""

# %%
import math
import sys
from pathlib import Path

from shaperopt.cli import grouped, load_histories
from shaperopt.profiles import GlSpec, RmpSpec, gl_profiles, resolve_targets, rmp_curve

runs = Path(sys.argv[1] if len(sys.argv) > 1 else "results/desk/runs")
hists = load_histories(runs)
groups = grouped(hists)
print({f"{s} ({k})": len(hs) for (s, k), hs in groups.items()})

# %%
# One target for every curve: the best feasible value any run found.
spec = RmpSpec(budget=1.0)
target = resolve_targets(hists, spec)
print(f"best known objective: {target:.6g}")

# %%
# With an infinite budget the right end of each curve is the feasibility rate.
for (solver, kind), hs in groups.items():
    curve = rmp_curve(hs, spec, math.inf, target=target)
    at = {tol: y for tol, y in zip(curve.x, curve.y)}
    print(f"{solver:9s} {kind:9s}  y(1e-4) = {at[1e-4]:5.1f}%   y(inf) = {at[math.inf]:5.1f}%")

# %%
# GL-Profile: split a total budget over 2^r starting points.
total = sum(h.total_cost for h in hists) / len(groups)
gspec = GlSpec(totals=(total,), r_values=range(0, 6))
for (solver, kind), hs in groups.items():
    obj, feas = gl_profiles(hs, gspec, total)
    print(solver, kind, "M:", [int(m) for m in obj.x])
    print("   mean best f:", [f"{v:.4g}" for v in obj.y])
    print("   feasible fraction:", [f"{v:.2f}" for v in feas.y])
