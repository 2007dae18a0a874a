"""qskein: exact skein-theoretic knot invariant calculator and verifier."""

from .qtpoly import (
    LaurentQT,
    ZTExpansion,
    SubstitutionSpec,
    NotInSubring,
    NotInScaledRing,
    NotDivisible,
    bracket,
    brace,
    delta,
    qt,
    adams,
    substitute,
    expand_in_z,
    expand_in_bracket,
    in_z2t_ring,
    exact_divide,
    divides,
    congruent,
    divisible_with_integer_quotient,
    vanishes_on_roots,
    to_text,
    to_text_z,
    to_json_terms,
    from_json_terms,
)
from .fracs import BracketFraction, substitute_frac
from .exprs import parse_expr, parse_laurent
from .partitions import (
    Partition,
    SizeMismatch,
    parse_partition,
    parse_colors,
    partitions_of,
    kappa,
    z_order,
    char_value,
    phi,
)

__version__ = "0.1.0"
