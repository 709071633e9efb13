"""Exact algebra for multi-component difference Hamiltonian operators."""

from types import ModuleType as _ModuleType

from .errors import (
    ArityError,
    DegreeError,
    DependencyError,
    DpvaError,
    FiltrationError,
    IncompatibleError,
    NonIntegrableExponent,
    NonInvertibleSubstitution,
    NotClosed,
    NotFound,
    NotPointTransform,
    NotSkewError,
    ParseError,
)
from .poly import DiffPoly, SuperPoly
from .parse import parse, to_str
from .functional import LocalPolyVector, canonicalize, integral
from .operators import (
    MatDiffOp,
    ScalarOp,
    adjoint,
    bivector_to_op,
    compose,
    conjugate,
    frechet,
    is_skewadjoint,
    op_to_bivector,
    point_transform,
)
from .schouten import are_compatible, characteristics, is_poisson, one_vector, schouten_bracket
from .pva import (
    LambdaSeries,
    Verdict,
    bracket_master,
    check_dependency_profile,
    check_jacobi,
    check_order11_conditions,
    check_ultralocal,
)
from .cohomology import P0, d_p0_apply, d_p0_functional, homotopy_apply, reduce_closed
from .ansatz import derive_pair, monomial_basis, solve_linear, solve_trivialization, trivialize_bivector
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [n for n, v in list(globals().items()) if not n.startswith("_") and not isinstance(v, _ModuleType)]
