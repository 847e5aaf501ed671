"""Classical invariants of Legendrian and transverse knots, braid moves, and
overtwistedness certificates for cyclic branched covers over negatively
stabilized transverse braids."""

__version__ = "0.1.0"

from .braid import (
    BraidError,
    BraidWord,
    MoveStep,
    MoveWitness,
    Permutation,
    SearchBudget,
    closure_components,
    compose,
    conjugate,
    cyclic_shift,
    exponent_sum,
    find_destabilization,
    format_braid,
    free_reduce,
    inverse,
    negative_braid_stabilize,
    parse_braid,
    parse_braids,
    permutation,
    positive_markov_stabilize,
)
from .cover import (
    OvertwistedCertificate,
    alexander_polynomial,
    burau_reduced,
    certify_overtwisted,
    cyclic_cover_homology_order,
    format_certificate,
    parse_certificate,
    verify_certificate,
)
from .front import (
    FrontDiagram,
    FrontError,
    OrientedFront,
    format_front,
    orient,
    parse_front,
    rotation_number,
    self_linking_of_pushoff,
    stabilize,
    thurston_bennequin,
    writhe,
)
from .laurent import LaurentPolynomial
from .transverse import TransverseBraid, self_linking, transversely_equivalent
