"""Exact arithmetic for polyadic integers and the characters of periodic functions.

The main entry points::

    from polyadic import embed, char_of, evaluate, indicator
    psi = char_of(embed(9))
    evaluate(psi, indicator(4, 1))   # 1, since 9 = 1 mod 4
"""

from .arith import (DEFAULT_DEPTH, FactorialDigits, PolyadicInt, ResidueClaim,
                    add, crt_lift, div_rem, embed, eq_at_depth, from_digits,
                    min_depth_for, mul, neg, padic_digits, residue_mod, sub,
                    to_digits, tower_modulus)
from .characters import (Character, GelfandNeighborhood, char_of,
                         cluster_equal, conv_dot, conv_minus, conv_plus,
                         direct_product_apply, epsilon, evaluate,
                         gelfand_contains, kappa, reflect, theta, tower_of)
from .errors import (DigitOutOfRange, Incompatible, IndexOutOfRange,
                     InsufficientDepth, NotYetStable, PolyadicError,
                     UnknownSuite, WidthMismatch)
from .periodic import (PeriodicFunction, SymmetricBiPeriodicFunction,
                       constant, decompose, indicator, reflect_fn,
                       res_function, sym_basis_expand, sym_from_product,
                       sym_from_sum, uniform_norm)
from .stabilizers import (IntSequence, StabilizationReport,
                          classify_absolute_upto, converges_check,
                          is_prezero_upto, is_zero_sequence_upto, limit_upto)
from .topology import (Grid, Relation, grid_contains, grids_relation,
                       intersect, partition, refine)

__version__ = "0.1.0"
