"""Verification workbench for finite KU-algebras and fuzzy derivation KU-ideals."""

from .algebra import (
    AxiomReport,
    FiniteAlgebra,
    Subset,
    check_ku_axioms,
    induced_order,
    is_ideal,
    is_ku_algebra,
    is_ku_ideal,
    is_subalgebra,
    loop_algorithm_check,
    loop_divergence,
    meet,
    verify_identities,
)
from .derivations import (
    DerivationClass,
    SelfMap,
    check_regularity,
    classify,
    enumerate_derivations,
    fixed_set,
    is_derivation_ku_ideal,
    is_left_derivation_ku_ideal,
    is_right_derivation_ku_ideal,
    kernel,
    verify_derivation_properties,
)
from .errors import CapExceeded, KUError, ParseError, SizeMismatch
from .fuzzy import (
    FuzzySet,
    check_indicator,
    check_intersection,
    check_left_ideal_lemmas,
    check_level_characterization,
    grade,
    indicator_fuzzy,
    intersect,
    is_fuzzy_deriv_ku_ideal,
    is_fuzzy_ku_ideal,
    is_fuzzy_left_deriv_ku_ideal,
    is_fuzzy_right_deriv_ku_ideal,
    is_fuzzy_subalgebra,
    level_set,
)
from .homomorphisms import (
    Homomorphism,
    check_image_transport,
    check_preimage_transport,
    enumerate_homomorphisms,
    has_sup_property,
    image_fuzzy,
    is_homomorphism,
    preimage_fuzzy,
)
from .products import (
    ProductAlgebra,
    cartesian_product_fuzzy,
    check_level_product,
    check_product_factors,
    check_product_ideal,
    check_strongest_relation,
    is_fuzzy_relation_on,
    product_algebra,
    product_map,
    strongest_fuzzy_relation,
)
from .reports import TheoremReport
from .search import CatalogEntry, canonical_form, enumerate_ku_algebras, sweep

__version__ = "0.1.0"
