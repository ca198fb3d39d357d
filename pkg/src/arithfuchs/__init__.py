"""Exact invariants of quaternion algebras over abelian number fields.

The core objects are ``CycloElement`` (elements of Q(zeta_N)),
``AbelianField`` (subfields of Q(zeta_N) given by a fixing subgroup) and
``QuaternionAlgebra``.  On top of these sit ramification sets, the
real-place condition for a Fuchsian group, period sets of commensurators
and the Galois action on all of that data.
"""

__version__ = "0.1.0"

from .cyclo import (
    AbelianField,
    CycloElement,
    GaloisAutomorphism,
    certified_sign,
    cos_element,
    field_contains,
    galois_apply,
    is_integral,
    minimal_polynomial,
    sin_element,
    stabilizer,
    zeta,
)
from .places import (
    archimedean_places,
    hilbert_symbol_finite,
    hilbert_symbol_real,
    local_is_square,
    splitting_type,
)
from .quat import (
    QuaternionAlgebra,
    QuaternionOrder,
    find_sqrt_witness,
    matrix_image,
    norm_one,
    order_closure_check,
    order_membership,
)
from .invariants import (
    Verdict,
    bhn_embeds,
    fuchsian_check,
    period_set,
    period_test,
    ram_finite,
    ram_infinity,
    ramification,
)
from .galois import (
    AlgebraInvariantData,
    act_on_place,
    conjugate_invariants,
    same_algebra,
    verify_period_invariance,
)
from .families import elkies, gamma_p, verify_elkies, verify_gamma_p
from .expr import parse_element
