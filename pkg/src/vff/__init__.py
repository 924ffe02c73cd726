"""Exact free-field (Feigin-Fuchs) representations of the Virasoro algebra.

Scalars live in Q(i)(gamma, alpha); polynomial arithmetic runs on python-flint
when it is installed and on sympy's sparse polynomials otherwise.  Set
``VFF_BACKEND=python`` or ``VFF_BACKEND=flint`` to force a backend.
"""

from ._backend import NAME as BACKEND
from .errors import VffError
from .fock import FockVector, gaussian_pairing, monomial, phi, vacuum
from .partitions import Partition, enumerate_level, partition_count, preceq, tau
from .scalars import (
    ALPHA,
    GAMMA,
    I,
    ONE,
    ZERO,
    Scalar,
    central_charge,
    conformal_weight,
    kac_alpha,
    q_background,
    reflect,
)
from .structure import (
    classify,
    descendant_matrix,
    irreducibility_check,
    kac_determinant_check,
    kernel_basis,
    projection_matrix,
    shapovalov_matrix,
    singular_vector,
)
from .sugawara import apply_L, closed_form_L, descendant

__version__ = "0.1.0"
