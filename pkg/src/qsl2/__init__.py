"""Exact quantum sl2 invariants of framed links and tangles at level 4.

Colored tangle operators from the quantum algebra at a 16th root of unity,
an independent skein-recursion engine with the Arf extraction, surgery
invariants of closed 3-manifolds, genus-1 transfer matrices, and the
inductive-limit invariant at infinity for the Whitehead manifold.
"""

from .cyclotomic import (
    ApproximateOnlyError,
    CycError,
    CycNum,
    LevelConstants,
    arith,
    constants,
    sqrt2,
)
from .diagrams import (
    BUILTIN_NAMES,
    DiagramError,
    FramedLink,
    Gen,
    LinkingMatrix,
    SliceDiagram,
    apply_move,
    braid_closure,
    build,
    builtin,
    cable,
    compose,
    insert_kink,
    insert_kink_pair,
    insert_r2,
    kirby_blowup,
    linking_matrix,
    normal_form,
    parse_text,
    resolve,
    reverse_component,
    tensor,
    to_text,
)
from .algebra import (
    ColorError,
    Operator,
    QuantumAlgebra,
    braiding,
    braiding_inv,
    cupcap,
    irrep,
    dual_module,
    quantum_integer,
    twist_scalar,
    universal_r_literal,
)
from .evaluate import (
    ColoredDiagram,
    colored_invariant,
    evaluate,
    evaluate_colored_link_family,
    evaluate_scalar,
)
from .skein import (
    ArfResult,
    SkeinBudgetError,
    arf,
    colored_via_cabling,
    jones_from_skein,
    skein_I,
)
from .rt import (
    LimitSystem,
    SurgeryPresentation,
    TransferMatrix,
    limit_rank,
    transfer_matrix,
    whitehead_pipeline,
    z_invariant,
)

__version__ = "0.1.0"
