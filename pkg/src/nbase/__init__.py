"""nbase: composable nested shapes, their permutation calculus at level 2,
binary-tree group presentations, and Veblen-style ordinal notations."""

from .elements import (
    POINT,
    Attachment,
    GammaSequence,
    GraftResult,
    HeadForm,
    PlainElement,
    ShuffleMap,
    Witness,
    arity_m,
    check_associativity,
    check_phi_long,
    check_phi_short,
    compose,
    corolla,
    decompose_head,
    embed,
    graft_at_slot,
    make,
    normalize,
    shuffle,
    slots_F,
    total_G,
)
from .grammar import (
    element_from_json,
    element_to_json,
    format_element,
    parse_element,
)

__all__ = [name for name in dir() if not name.startswith("_")]
