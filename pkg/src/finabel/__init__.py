"""Exact arithmetic of finite abelian groups.

The library provides:

* canonical group types (invariant factors) and primary decompositions;
* explicit small groups with full subgroup-lattice enumeration and
  Smith-normal-form type computations;
* the convolution algebra of abelian functions (unit delta, Moebius
  inverse, totient, generating-set counters) over exact rationals;
* counting formulas for Hom/Mono/Epi/Aut, subgroup counts by type,
  Gaussian binomials, and order-profile classification;
* the interstice/isometry machinery deciding when translations plus
  transpositions generate the full symmetric group;
* deliberately naive brute-force oracles for cross-validation.

No floating point is used anywhere in the math core: values are Python
integers and ``fractions.Fraction``.
"""

from .errors import BoundExceededError, NonInvertibleError
from .grouptype import (
    GroupType,
    PrimaryDecomposition,
    TRIVIAL_GROUP,
    canonicalize,
    cyclic,
    dim_p,
    from_primary,
    is_elementary,
    min_generators,
    parse_group_spec,
    primary,
    primary_parts,
    product,
    types_of_order,
    types_up_to,
)
from .lattice import (
    ConcreteGroup,
    DEFAULT_MAX_LATTICE_ORDER,
    IntMatrix,
    Subgroup,
    all_subgroups,
    element_order,
    generated_subgroup,
    get_max_lattice_order,
    quotient_type,
    set_max_lattice_order,
    smith_normal_form,
    subgroup_quotient_pairs,
    subgroup_type,
    subgroup_type_via_snf,
    type_from_order_statistics,
)
from .functions import (
    AbelianFunction,
    ArithmeticFunction,
    ExactValue,
    add,
    binom_card,
    builtin_function,
    card,
    card_pow_t,
    check_multiplicative,
    convolve,
    delta,
    generating_subsets_of_size,
    generating_tuples,
    inverse,
    mu,
    mu_closed,
    n_t,
    one,
    phi,
    pointwise,
    restrict_to_cyclic,
    scale,
    subgroup_count,
    t_pow_card,
)
from .counting import (
    OrderProfile,
    aut_count,
    conjecture_search,
    element_order_profile,
    epi_count,
    gaussian_subspace_count,
    hom_count,
    isomorphic_by_element_orders,
    mono_count,
    sub_count,
    subgroup_order_profile,
    yoneda_numeric_check,
)
from .symgen import (
    Permutation,
    Transposition,
    cycle_transposition_generates,
    generates_full_symmetric,
    interstice_subgroup,
    is_isometry_mod_H,
    isometry_constant,
    isometry_group_order,
)
from . import oracle

__version__ = "0.1.0"
