"""
Zeros of a distributed-delay shaper
===================================

Rightmost zeros of the 18-delay shaper at one LC starting point, and the
gradient of the zeros spectral abscissa.
"""

# %%
# The instance used throughout: 18 equally spaced delays on [0, 0.8], gain 0.01.
import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from shaperopt.shaper import StartSet, generate_starts
from shaperopt.spectrum import ShaperSpec, rightmost_roots, spectral_abscissa_and_gradient

spec = ShaperSpec(18, 0.8, 0.01)
x = generate_starts(StartSet("lc", seed=0, count=1), spec.n)[0]

# %%
# All zeros within 3 of the rightmost one, certified by an argument-principle count.
res = rightmost_roots(spec, x, margin=3.0)
# LC gains sum to zero, so the count also includes the artificial root at 0, which is dropped.
print(f"{res.roots.size} zeros, abscissa {res.abscissa:.4f}, certified count {res.certified_count}, "
      f"origin root removed: {res.origin_root_removed}")
print("largest residual:", res.residuals.max())

# %%
# The abscissa is differentiable wherever the rightmost zero is simple and unique.
alpha, grad, warning = spectral_abscissa_and_gradient(spec, x, result=res)
h = 1e-6
e0 = np.eye(spec.n)[0]
fd = (spectral_abscissa_and_gradient(spec, x + h * e0)[0]
      - spectral_abscissa_and_gradient(spec, x - h * e0)[0]) / (2 * h)
print(f"d alpha / d x_1: analytic {grad[0]:.6f}, central difference {fd:.6f}, tie warning {warning}")

# %%
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(res.roots.real, res.roots.imag, "o", ms=4)
ax.axvline(-0.1, color="k", lw=0.8, ls="--", label="alpha_c = -0.1")
ax.set_xlabel("Re")
ax.set_ylabel("Im")
ax.legend()
fig.tight_layout()
fig.savefig("shaper_spectrum.svg")
