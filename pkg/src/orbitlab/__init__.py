"""Exact toolkit for orbits of fixed-density binary words, their base-2
orbits and the sum/product majorization orders between them."""

from .analysis import (
    LexiProdPermutation,
    ProductTieError,
    TheoremReport,
    lexidynamic_permutation,
    lexiprod_permutation,
    verify_partial_product_extreme,
    verify_product_extremes,
    verify_sum_extremes,
)
from .expansions import GenExpansion, evaluate, from_pattern, scale
from .lemmas import check_lemma3, check_lemma4, check_lemma5
from .majorization import (
    MajorizationPoset,
    ProductProfile,
    SumProfile,
    build_poset,
    extremal_elements,
    product_majorizes,
    product_profile,
    sum_majorizes,
    sum_profile,
)
from .orbits import (
    Base2Orbit,
    OrbitVector,
    balanced_orbit,
    base2_orbit,
    base2_value,
    build_orbit,
    enumerate_orbits,
    most_unbalanced,
)
from .words import BinaryWord, is_balanced, least_rotation, lex_compare, rotate, window_ones

__version__ = "0.1.0"
