"""Exact verification of x_R-Hopf algebras, SAYD modules, Hopf-Galois transfer and
Hopf cyclic homology on finite-dimensional data over the rationals."""

__version__ = "0.1.0"

from .algebra import FDAlgebra, make_algebra  # noqa: E402,F401
from .bialgebroid import HopfAlgebra, XHopfLeft, XHopfRight  # noqa: E402,F401
from .cyclic import CocyclicModule, CyclicModule, cyclic_dual, cyclic_homology  # noqa: E402,F401
from .sayd import SAYDModule, make_sayd  # noqa: E402,F401
