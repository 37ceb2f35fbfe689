"""Schubert calculus on G(k, N) through Berezin integrals over Grassmann variables.

Three independent routes to the same intersection numbers:

* :mod:`fermischubert.schubert` - the fermion integral in the exterior algebra
  of :mod:`fermischubert.grassmann`;
* :mod:`fermischubert.closed_forms` - closed formulas for powers of
  ``sigma_1`` and ``sigma_{1,1}``;
* :mod:`fermischubert.oracle` - Pieri-rule combinatorics, no fermions.
"""

from .grassmann import DomainError, Element, GrassmannContext, berezin_integral, context_new
from .schubert import integrate_product, normalization_constant, schubert_class, tau_basis
from .oracle import complement_dual, oracle_intersection

__all__ = [
    "DomainError",
    "Element",
    "GrassmannContext",
    "berezin_integral",
    "complement_dual",
    "context_new",
    "integrate_product",
    "normalization_constant",
    "oracle_intersection",
    "schubert_class",
    "tau_basis",
]
