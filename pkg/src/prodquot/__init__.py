"""Product-quotient surfaces with p_g = 0: baskets, signatures, groups,
generating vectors, singularities, homology and the classification sweep."""

from .baskets import Basket, basket_invariants, baskets_with_B, enumerate_baskets, gorenstein_index
from .genvec import (
    exists_gen_vector,
    find_curves,
    find_surfaces,
    gen_vectors,
    hurwitz_move,
    hurwitz_orbit,
    parse_vector,
)
from .groups import FiniteGroup, RefusalError, catalogue, from_generators, semidirect_product
from .homology import AbelianInvariants, h1, parse_abelian
from .pipeline import ClassificationReport, RunConfig, classify, emit_report, parse_report
from .signatures import group_order, list_of_types, make_signature, parse_signature, signatures_for_basket
from .singtypes import QuotSing, cont_frac, inv_B, inv_e, inv_k, rat_num
from .surface import Minimality, SurfaceRecord, basket_by_pair, check_sings, classify_minimality

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants", "Basket", "ClassificationReport", "FiniteGroup", "Minimality", "QuotSing",
    "RefusalError", "RunConfig", "SurfaceRecord", "basket_by_pair", "basket_invariants",
    "baskets_with_B", "catalogue", "check_sings", "classify", "classify_minimality", "cont_frac",
    "emit_report", "enumerate_baskets", "exists_gen_vector", "find_curves", "find_surfaces",
    "from_generators", "gen_vectors", "gorenstein_index", "group_order", "h1", "hurwitz_move",
    "hurwitz_orbit", "inv_B", "inv_e", "inv_k", "list_of_types", "make_signature", "parse_abelian",
    "parse_report", "parse_signature", "parse_vector", "rat_num", "semidirect_product",
    "signatures_for_basket",
]
