"""Exact-arithmetic toolkit for plane sextic models of genus-5 curves.

Builds the sextic model attached to a quintuple of branch parameters,
classifies the singularities of its projective closure, verifies the
birational maps between the model and the fiber product it came from,
and checks the supporting polynomial identities symbolically over the
integers.
"""

__version__ = "0.1.0"
