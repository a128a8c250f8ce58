"""Exact invariants of composite graph manifolds: first homology, Thurston
norm, twisted torsion, mod-d characters, covers, and circle-bundle genus
bounds."""

__version__ = "0.1.0"

from .abelian import (FgAbelianGroup, GroupElement, IntMatrix, cokernel, hom_lattice,
                      smith_normal_form, solve_mod)
from .bundle import (BundleClass, SWFunction, baldridge_sum, basic_pairing_max, bound_rhs,
                     limit_certificate, piping_bound, separating_k, twist_euler)
from .covers import (CoverPattern, ObstructionReport, TorusCharacter, alpha_on_torus,
                     cover_genus, cyclic_cover, eliminate_self_pastings, extension_obstruction,
                     glue_character)
from .errors import GraphNormError
from .field import (MINUS_INFINITY, Cyclotomic, LaurentPoly, RatFunc, TorsionValue,
                    cyclotomic_poly, parse_ratfunc, w_equal, width, zeta)
from .graph import (Block, CharacterModD, CohClass, DecoratedGraph, TorusGluing, classify,
                    eval_class, fibre_intersection, homology_h1, validate_structure)
from .norms import (NormReport, thurston_norm, torsion_norm, torsion_product,
                    torsion_via_engine, verify_norm_equality)
from .torsion import (BasedChainComplex, apply_base_change, circle_product, is_acyclic,
                      torsion, wedge_complex)
