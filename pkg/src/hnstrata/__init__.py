"""Harder-Narasimhan strata of flag varieties of isocrystals (GL_d), computed exactly."""

from .numvec import MalformedInstance, dominance_geq, fr_geq, rat, rtuple, shift, sort_desc, total
from .permcomb import Perm, block_embed, double_coset_rep, is_kostant, kostant_reps, perm_act, perm_length
from .isodata import (HodgeData, NewtonData, hodge_from_tuple, newton_from_slopes, newton_from_tuple,
                      ss_nonempty, stab_mu, stab_nu, wa_nonempty)
from .strata import (HNVector, NotInGamma, Stratum, build_stratum, enumerate_gamma, hn_vector, in_gamma,
                     lambda_fibers, stratum_rank)
from .hncheck import (Witness, check_hn_vector, enumerate_witness_lambdas, stratum_to_witness,
                      verify_equivalence, witness_to_stratum)
from .polyio import Polygon, export_csv, export_svg, is_convex, polygon_of

__version__ = "0.1.0"
