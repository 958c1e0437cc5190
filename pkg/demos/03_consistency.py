"""Standard PCA drifts away from the truth as p/n grows.

For a single spike the distance between the sample and true eigenvector
is bounded asymptotically by ``zeta_bound(|rho| / sigma, p/n)``, and the
bound grows with ``p/n``.  The sparse method works in a much smaller
coordinate subset and stays close even when ``p`` exceeds ``n``.

Run with ``python demos/03_consistency.py`` (about half a minute).
"""

import numpy as np

from spca import ModelSpec, SelectionConfig, dist, sample, sparse_pca, standard_pca, three_peak_target, zeta_bound

n, rho_norm, sigma = 256, 10.0, 1.0
tau = rho_norm / sigma
print(f"n = {n}, |rho| / sigma = {tau}; median dist over 5 draws")
print(f"{'p':>6} {'p/n':>6} {'zeta':>8} {'standard':>9} {'sparse':>9}")
for p in (64, 256, 1024):
    rho = three_peak_target(p, rho_norm)
    std_dist, sp_dist = [], []
    for rep in range(5):
        x = sample(ModelSpec(rho, sigma, n, seed=100 * p + rep))
        std_dist.append(dist(standard_pca(x).eigenvectors[:, 0], rho))
        sparse = sparse_pca(x, selection=SelectionConfig.noise_exceed(0.5))
        sp_dist.append(dist(sparse.components[:, 0], rho))
    c = p / n
    print(f"{p:6d} {c:6.2f} {zeta_bound(tau, c):8.3f} {np.median(std_dist):9.3f} {np.median(sp_dist):9.3f}")
