"""Exact free/Boolean probability transforms with verified identities.

Thin wrapper around the compiled extension. Exact values cross the boundary
as rational strings (use fractions.Fraction to consume them) or as JSON
documents in the formats the CLI reads and writes.
"""

try:  # wheel layout: extension inside the package
    from . import _ncprob as _impl
except ImportError:  # in-tree build: extension on sys.path
    import _ncprob as _impl

bbp1_moments = _impl.bbp1_moments
boxtimes = _impl.boxtimes
canonical_factorization = _impl.canonical_factorization
catalan_number = _impl.catalan_number
classify_word = _impl.classify_word
lambda_circular_sigma = _impl.lambda_circular_sigma
noncrossing_partitions = _impl.noncrossing_partitions
opmodel_moments = _impl.opmodel_moments
phi_moments = _impl.phi_moments
product_r = _impl.product_r
psi_product_moments = _impl.psi_product_moments
transform = _impl.transform
verify = _impl.verify
verify_ids = _impl.verify_ids

__all__ = [
    "bbp1_moments",
    "boxtimes",
    "canonical_factorization",
    "catalan_number",
    "classify_word",
    "lambda_circular_sigma",
    "noncrossing_partitions",
    "opmodel_moments",
    "phi_moments",
    "product_r",
    "psi_product_moments",
    "transform",
    "verify",
    "verify_ids",
]
