"""ordlab: symbolic computation with ordinal notations in Veblen normal form,
GLP worms, iterated-reflection theories and their Pi_n proof-theoretic
ordinals, pathological presentations of omega, and the explicit formula
constructions around slow consistency.

Everything is immutable and pure; values are safe to share across threads.
"""

from .errors import (
    CaptureError,
    CatalogError,
    OrdlabError,
    ParseError,
    PredicateError,
    RangeError,
    ShapeError,
    WormError,
)
from .formulas import (
    TOP,
    And,
    ConAtom,
    Defined,
    Equals,
    Exists,
    ForAll,
    Formula,
    Hole,
    Implies,
    Leq,
    Not,
    Num,
    Or,
    TheoryRef,
    Var,
    Verum,
    con_star_equation,
    fill_hole,
    free_vars,
    pretty,
    rosser_combination,
    slowcon,
    sv,
    sv_star,
)
from .notation import (
    AuditReport,
    PredicateExpr,
    Presentation,
    audit,
    check_ascending,
    find_descending,
    kreisel_presentation,
    parse_predicate,
)
from .ordinals import (
    EPSILON0,
    EQ,
    GT,
    LT,
    OMEGA,
    ONE,
    ZERO,
    Ordinal,
    VeblenAtom,
    add,
    compare,
    enumerate_terms,
    format_ordinal,
    from_int,
    in_phi_range,
    is_natural,
    iter_omega,
    mul_nat,
    next_phi_value,
    omega_power,
    parse_ordinal,
    phi_argument,
    phi_plus_iter,
    successor,
    term_size,
    to_int,
    veblen,
)
from .theories import (
    EA_PLUS,
    PA,
    Base,
    Reflect,
    ReductionRule,
    RuleSet,
    TheoryExpr,
    catalog_lookup,
    default_catalog,
    default_rules,
    format_theory,
    omega_model_dilator,
    parse_theory,
    pi_ordinal,
    progression_stage,
    reduce_to_level,
)
from .worms import (
    TOP as TOP_WORM,
    Worm,
    drop,
    format_worm,
    lift,
    parse_worm,
    theory_of_worm,
    worm_compare,
    worm_of_ordinal,
    worm_ordinal,
)

__version__ = "0.1.0"
