"""pathgauge: exact holonomy and bundle reconstruction on graph gauge fields.

The package realizes, at desk scale, the correspondence between group-valued
holonomy data on a pointed graph and gauge fields with a marked point: words
of edge steps up to retrace cancellation form the based-path bundle, a gauge
field transports fibers along words, the universal connection straightens
paths of based-path classes, and the two directions of the correspondence
are mutually inverse up to an explicit, verified isomorphism.  A
piecewise-linear numeric module mirrors the same identities with honest
floating point.
"""

from .complexes import (
    BaseComplex,
    Edge,
    SpanningTree,
    build_tree,
    chord_loops,
    factor_loop,
    radial_paths,
    tree_path,
)
from .errors import (
    BaseMismatch,
    ConjugacyViolated,
    DomainError,
    DomainMismatch,
    EndpointMismatch,
    HolonomyIncompatible,
    IndexOutOfRange,
    InfiniteContext,
    NonEquivariantSpec,
    NotClosed,
    NotConnected,
    ParseError,
    PathGaugeError,
    SingularityTooClose,
    UnknownEdge,
)
from .gauge import (
    BundleMap,
    BundlePoint,
    EPath,
    GaugeField,
    bundle_morphism_apply,
    check_bundle_morphism,
    holonomy_group,
    holonomy_rep,
    horizontal_lift,
    is_horizontal,
    project_horizontal,
    transport,
)
from .groups import (
    CyclicCtx,
    GroupCtx,
    HoloSpec,
    PermutationCtx,
    RationalMatrixCtx,
    ctx_from_spec,
    subgroup_closure,
)
from .pathspace import (
    AssocPath,
    AssociatedPoint,
    FPath,
    FPoint,
    associated_connection,
    associated_lift,
    canonicalize,
    fpoint,
    omega_action,
    universal_connection,
    universal_lift,
)
from .reconstruct import (
    BCObject,
    HolMorphism,
    HolObject,
    Report,
    bc_object,
    bundle_from_holonomy,
    conjugation_iso,
    find_conjugator,
    gauge_morphism_exists,
    hol_object,
    holonomy_of_bundle,
    reconstruct_iso,
    roundtrip_check,
)
from .words import (
    EdgeStep,
    PathWord,
    concat,
    empty_word,
    loop_id,
    loop_inv,
    loop_mul,
    reduce_word,
    reverse_word,
    subword,
)

__version__ = "0.1.0"
