"""How often does top-k variance selection miss a signal coordinate?

``fe_fi_bound`` bounds the probability that a wrong coordinate is
included or a right one excluded when the top-k coordinates stand a
relative margin ``alpha_n`` above the rest.  The script prints the bound
for growing ``n`` and then a small Monte Carlo comparison.

Run with ``python demos/04_selection_bound.py``.
"""

from spca import fe_fi_bound
from spca.bench.config import ExperimentConfig
from spca.theory import SelectionBoundParams
from spca.bench.experiments import run_selection_mc

for n in (1000, 10_000, 100_000):
    params = SelectionBoundParams(p=100, n=n, k=5, gamma=8.0)
    print(f"n = {n:6d}: alpha_n = {params.alpha_n:.4f}, bound = {fe_fi_bound(params):.3e}")

report = run_selection_mc(ExperimentConfig.default("selection", replicates=400))
print("\nsd ratio  empirical  bound")
for pt in report.summary["points"]:
    bound = "n/a" if pt["bound"] is None else f"{pt['bound']:.3e}"
    print(f"{pt['sd_ratio']:8.3f}  {pt['p_union']:9.4f}  {bound}")
