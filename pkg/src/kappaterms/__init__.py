"""Symbolic computation with terms over finite semigroups.

The toolkit covers: Cayley-table semigroups with idempotent and group-inverse
powers; a term algebra over letters, concatenation and the (omega-1)-power;
stable prefixes/suffixes and identity checkers for the prefix/suffix
pseudovarieties; the window ("k-superposition") homomorphism and its
pair-alphabet companion; a value-preserving term transformation over a fixed
semigroup; and verification plus transformation of pointlike equation
systems.
"""

from .errors import (AlgebraError, CapError, Error, EvalError, ParseError,
                     PreconditionError, RejectedSolution)
from .finsemi import (FiniteSemigroup, GeneratorMap, MonogenicProfile,
                      adjoin_identity, delta_eval, load_semigroup)
from .terms import (EMPTY, INFINITE, BkPair, Concat, Letter, OmegaMinusOne,
                    Term, Window, concat, content, eval_term, expand,
                    expand_clip, expand_clip_right, finite_length, letter,
                    omega_minus_one, parse_term, size, to_text, word_or_infinite,
                    word_term)
from .truncation import (K_SIDE, D_SIDE, TruncSemigroup, UPWord, build_trunc,
                         check_identity, infinite_prefix, infinite_suffix,
                         natural_projection, prefix_k, suffix_k)
from .superpose import (SuperposeContext, beta_prime, bk_action, e_term,
                        factor_prefix, nu, phi, saturate, saturation_exponent)
from .theta import IndexPair, ThetaContext
from .pointlikes import (PointlikeSystem, TransformReport, VChecker,
                         FalsificationChecker, check_solution,
                         compute_pointlikes, d_checker, dk_checker, k_checker,
                         kk_checker, li_checker, parse_system, sl_checker,
                         transform_solution, with_identity)
from .verdict import Verdict, HOLDS, failure, unknown_at

__version__ = "0.1.0"
