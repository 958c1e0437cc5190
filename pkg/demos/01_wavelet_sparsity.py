"""Why a wavelet basis helps: a smooth peaked signal needs few coefficients.

Run with ``python demos/01_wavelet_sparsity.py``.
"""

import numpy as np

from spca import WaveletSpec, dwt_forward, dwt_inverse, three_peak_target, weak_lq_radius

p = 2048
rho = three_peak_target(p, 10.0)
spec = WaveletSpec()
coeffs = dwt_forward(rho, spec)
print(f"{spec.family} with default depth on p = {p}")

# energy captured by the largest coefficients
energy = np.sort(coeffs ** 2)[::-1]
share = np.cumsum(energy) / energy.sum()
for k in (16, 64, 256, 372):
    print(f"  top {k:4d} coefficients hold {100 * share[k - 1]:6.2f}% of the energy")

# keep the top 64 and map back
kept = np.where(np.abs(coeffs) >= np.sort(np.abs(coeffs))[-64], coeffs, 0.0)
approx = dwt_inverse(kept, spec)
print(f"relative error of the 64-term reconstruction: {np.linalg.norm(approx - rho) / 10.0:.2e}")

# the same signal in the original coordinates is not sparse at all
direct = np.sort(rho ** 2)[::-1]
print(f"top 64 raw samples hold only {100 * direct[:64].sum() / direct.sum():.2f}% of the energy")

for q in (0.5, 1.0):
    print(f"weak l_{q} radius: wavelet {weak_lq_radius(coeffs, q):8.3f}, raw {weak_lq_radius(rho, q):8.3f}")
