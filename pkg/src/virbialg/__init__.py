"""Exact symbolic computation for the generalized Virasoro-like algebra L(Γ).

Brackets, tensor actions, coboundary cobrackets, Yang-Baxter residuals and
a constructive check that a given Lie bialgebra structure is triangular
coboundary, all over the Gaussian rationals.
"""
from .scalars import I, ONE, ZERO, Scalar, as_scalar
from .lattice import CartanElt, Degree, Lattice, check_nondegenerate, member, pairing, separating_cartan
from .algebra import D1, D2, BasisSym, L, LieElt, Lsym, bracket, check_jacobi, d1, d2, degree_decompose
from .tensor import (
    Tensor2,
    Tensor3,
    act,
    act2,
    act3,
    antisym_defect,
    antisymmetrize,
    cyclic,
    tensor,
    tensor_degree_decompose,
    twist,
)
from .bialgebra import (
    Cobracket,
    check_cocommutator_axioms,
    cobracket_apply,
    cybe_residual,
    michaelis_r,
    mybe_defect,
    theorem_identity_defect,
)
from .cohomology import (
    DerivationSpec,
    box_window,
    centralizer_witness,
    classify,
    derivation_defect,
    inner_witness_homogeneous,
    inner_witness_window,
    reduce_to_antisymmetric,
    standard_window,
)
from .errors import (
    InconclusiveBudgetExhausted,
    NoSolution,
    NotAntisymmetric,
    NotHomogeneous,
    OutOfWindow,
    VerificationFailed,
    VirBialgError,
    ZeroDegree,
    ZeroPairing,
)
from .script import parse, parse_element

__version__ = "0.1.0"
