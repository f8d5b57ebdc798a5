"""Wire, Brauer, Jones and Kauffman monoids, identities over them, and Rees
matrix semigroups."""
from .chips import (
    Chip,
    ChipParseError,
    DegreeMismatch,
    Matching,
    WireKind,
    alpha,
    circle,
    forget,
    format_chip,
    hook,
    identity,
    is_planar,
    multiply,
    parse_chip,
    rotate,
    star,
    wire_kind,
)
from .families import (
    ChipMonoid,
    brauer_monoid,
    brauer_multiply,
    embed_canonical,
    embed_double,
    embed_insert_middle,
    embed_pad,
    enumerate_brauer,
    enumerate_jones,
    fiber_increment,
    jones_monoid,
    k3_quotient,
)
from .rees import (
    AbelianGroup,
    ReesMatrixSemigroup,
    SandwichMatrix,
    a2,
    brandt_b21,
    collapse_to_trivial,
    nfb_submatrix_classify,
    parse_group,
    parse_matrix,
    tsl,
)
from .render import render
from .semigroups import FiniteSemigroup, closure, ideal_generated, idempotents, is_isomorphic, rees_quotient
from .words import (
    Identity,
    InvWord,
    evaluate,
    isoterm_witnesses,
    parse_identity,
    parse_word,
    refute_identity,
    satisfies_identity,
    zimin,
)

__version__ = "0.1.0"
