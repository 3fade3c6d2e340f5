"""Real-root statistics of random polynomials with non-centered coefficients.

The package simulates and analyzes random polynomials p(t) = sum_j a_j t^j
with independent coefficients a_j = b_j + c_j * xi_j, where the xi_j are
standardized (mean-0, variance-1) innovations.  It provides:

* coefficient ensembles (Kac, hyperbolic, power-growth, mixed-sign) and
  reproducible sampling from them (``ensembles``),
* numerically stable evaluation of samples, means, and variance
  functionals (``polyeval``),
* certified real-root counting with an exact Sturm oracle (``rootcount``),
* analytic expected counts for Gaussian ensembles via the Kac-Rice
  formula (``kacrice``),
* a mean-vs-noise dominance classifier with count predictions
  (``comparison``),
* a deterministic, parallel-friendly Monte Carlo harness (``montecarlo``),
* an experiment registry and CLI (``experiments``, ``cli``).
"""

from rootstats import ensembles, polyeval, rootcount  # noqa: F401

__version__ = "0.1.0"

__all__ = [
    "ensembles",
    "polyeval",
    "rootcount",
    "__version__",
]
