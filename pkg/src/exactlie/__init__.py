"""Exact verification toolkit for Lorentz-type, orthogonal, sl2, and
Poincare-type Lie algebras over exact commutative rings.

The public surface groups into: the scalar tower (scalars), exact linear
algebra (linalg), structure-constant algebras (liealg), ideal sweeps
(ideals), explicit isomorphism witnesses (witnesses), the Poincare suite
(poincare), and the check registry behind the CLI (checks, cli).
"""

from .scalars import (
    Ring,
    RingIdeal,
    decompositions,
    dup,
    dup_automorphisms,
    fp,
    fq,
    ideal,
    is_m_two_formally_real,
    make_ring,
    maximal_ideals,
    mu2,
    prod,
    q_form_check,
    rationals,
    sqrt_minus_one,
    zero_ideal,
    zn,
)
from .linalg import Matrix, Submodule, canonicalize, invert, member, nullspace
from .liealg import (
    LinearMap,
    StructureAlgebra,
    ad,
    bracket,
    center,
    derivation_space,
    derived_subalgebra,
    inner_derivation_span,
    is_automorphism,
    is_homomorphism,
    make_algebra,
    restrict_scalars,
)
from .ideals import (
    IdealReport,
    char2_ideal,
    classify,
    dimension_exclusion_check,
    ideal_closure,
    is_m_simple,
    is_simple,
    m_simplicity_report,
    notsimple_witness,
    simplicity_report,
    sl2_ideal_form,
    splitting_report,
)
from .witnesses import (
    IsoWitness,
    char2_crossmodel,
    char2_kernel_aut,
    char2_lift_o3,
    dup_iso,
    lemma_one_iso,
    sl2_inner_form,
    sl2_split,
    sl2pair_decompose,
    vector_cocycle_space,
)
from .poincare import (
    PoincareWitness,
    aut_family,
    build_lattice,
    ideal_spectrum_sample,
    poincare_der,
    poincare_report,
    radical_minimality,
)

__version__ = "0.1.0"
