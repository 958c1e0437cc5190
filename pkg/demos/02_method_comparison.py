"""Sparse, standard and smoothed PCA on one simulated data set.

Each row of the data is ``v_i * rho + sigma * z_i``.  The script reports
the squared error of each estimate of ``rho`` and writes an SVG overlay
to ``demo-out/components.svg``.

Run with ``python demos/02_method_comparison.py``.
"""

from pathlib import Path

import numpy as np

from spca import (
    ModelSpec,
    SelectionConfig,
    SmoothedSpec,
    sample,
    smoothed_pca,
    sparse_pca,
    standard_pca,
    three_peak_target,
)
from spca.bench.experiments import aligned_ase
from spca.bench.svgplot import line_plot

p, n, sigma = 512, 256, 1.0
rho = three_peak_target(p, 10.0)
x = sample(ModelSpec(rho, sigma, n, seed=2024))

estimates = {
    "standard": standard_pca(x).eigenvectors[:, 0],
    "smoothed (lam=1e-6)": smoothed_pca(x, SmoothedSpec(1e-6)).eigenvectors[:, 0],
}
result = sparse_pca(x)
estimates["sparse"] = result.components[:, 0]
print(f"sparse PCA kept {result.k_hat} of {p} wavelet coordinates")
print(f"noise variance estimate {result.sigma2_hat:.3f} (true {sigma ** 2})")

fixed = sparse_pca(x, selection=SelectionConfig.fixed(32))
estimates["sparse (k=32)"] = fixed.components[:, 0]

for name, est in estimates.items():
    print(f"  {name:22s} ASE = {aligned_ase(est, rho):.3e}")

out = Path("demo-out")
out.mkdir(exist_ok=True)
grid = np.arange(p) / p
series = {"true": (grid, rho / np.linalg.norm(rho))}
for name in ("standard", "sparse"):
    est = estimates[name]
    series[name] = (grid, np.sign(est @ rho) * est)
(out / "components.svg").write_text(line_plot(series, title="Estimated components", xlabel="t"))
print(f"wrote {out / 'components.svg'}")
