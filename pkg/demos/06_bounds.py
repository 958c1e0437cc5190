"""Closed-form error bounds and when they say something.

``zeta_bound(tau, c)`` is the limiting squared sine between the sample and
true eigenvector for signal-to-noise ``tau`` and aspect ratio ``c = p/n``.
It is informative below 1.  ``omega_bound`` extends this to several
spikes.  The same numbers are available from ``spca bounds``.

Run with ``python demos/06_bounds.py``.
"""

from spca import omega_bound, zeta_bound

print("zeta_bound(tau, c)")
print("   c  " + " ".join(f"tau={tau:<5}" for tau in (1, 2, 5, 10)))
for c in (0.1, 0.5, 1, 2, 10):
    print(f"{c:5}  " + " ".join(f"{zeta_bound(tau, c):9.4f}" for tau in (1, 2, 5, 10)))

print("\nomega_bound for spikes (10, 5, 2), sigma = 1")
for c in (0.01, 0.1, 1.0):
    print(f"  c = {c:5}: {omega_bound((10.0, 5.0, 2.0), c):.4f}")

print("\nsame from the command line:")
print("""  spca bounds zeta --params '{"tau": 10, "c": 2}'""")
