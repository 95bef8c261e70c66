"""Property (A) and strong property (A) on finite commutative rings.

Rings are built from Z/n by products, quotients, monic polynomial
quotients, trivial extensions A ∝ E and amalgamated duplications R ⋈ I,
and the two annihilator properties are decided exactly.
"""

from .constructions import duplication, idealization, poly_quotient, product, quotient
from .deciders import PropertyReport, has_property_a, has_strong_property_a, shrink_witness, zero_divisor_set
from .errors import (
    DEFAULT_CAPS,
    Caps,
    DegenerateRingError,
    ElementError,
    PreconditionError,
    ResourceCapError,
    RingError,
    RingMismatchError,
)
from .expr import build_ring, parse_ring_expr, pretty
from .ideals import Ideal, all_ideals, annihilator, ideal_generate, ideal_sum
from .isomorphism import ring_isomorphic
from .modules import RingModule, module_direct_sum, module_free, module_ideal, module_quotient
from .ring import (
    Element,
    FiniteRing,
    check_ring_axioms,
    is_field,
    is_local,
    is_nilpotent,
    is_reduced,
    is_regular,
    is_unit,
    is_zero_divisor,
    zmod,
)

__version__ = "0.1.0"
