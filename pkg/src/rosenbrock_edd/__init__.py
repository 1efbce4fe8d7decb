"""Exact Smith, Smith-McMillan and system-matrix computations over Z, Q[z] and
the proper rational functions."""

from .concrete import QZ, RPR, ZZ, Frac, lcd, order_at_infinity, ring_by_name
from .coprime import completion_I0, coprime_check, fraction_coprime, verify_report
from .errors import (DivisionByZeroError, DomainError, GuardExceededError, HypothesisError,
                     NotCoprimeError, NotDivisibleError, ParseError, RingMismatchError,
                     ShapeError, SingularMatrixError)
from .fof import fof_assemble, fof_converse, fof_forward, infinity_structure
from .matrices import (Matrix, block_lu, det, inverse, minor, rank, schur_complement,
                       schur_minor_identity, solve, transfer_function)
from .normal_forms import (determinantal_divisors, elementary_divisors, invariant_factors,
                           partial_multiplicities, smith, smith_mcmillan, smith_oracle)
from .parse import format_value, matrix_from_doc, matrix_to_doc, parse_entry, parse_frac
from .poly import Poly, ProperRat
from .system import (SystemMatrix, diagnose_reducible, is_irreducible, local_zero_structure,
                     minimal_realization, realization_dimension, reduce_system,
                     rosenbrock_converse, rosenbrock_forward, verify_rosenbrock)
