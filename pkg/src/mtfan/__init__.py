"""Newton polytopes, stability fans and torsion-class data for modules
over bound quiver algebras.

The central objects are the Newton polytope of a module (convex hull of
its submodule dimension vectors), its normal fan (whose cones are exactly
the classes of stability vectors with equal torsion behaviour on the
module) and the canonical torsion filtration attached to each cone.
"""

from .errors import (
    AlgebraDefinitionError,
    InputFormatError,
    ModuleDefinitionError,
    ResourceLimitError,
)
from .fan import (
    FanPathCatalog,
    MTFFan,
    TFClassData,
    boundary_regions,
    build_mtf_fan,
    class_of,
    face_restriction_check,
    facet_partition,
    fan_paths,
    smallest_cone,
    wall_cone,
)
from .oracle import (
    OracleReport,
    SampleSet,
    build_sample_set,
    verify_dim_formula,
    verify_fan,
    verify_point,
)
from .polyhedra import (
    Cone,
    GeneralizedFan,
    NormalFan,
    Order,
    Polytope,
    cone_from_generators,
    cone_from_hrep,
    cone_intersection,
    convex_hull,
    full_cone,
    locate_cone,
    max_face,
    minkowski_sum,
    normal_cone,
    normal_fan,
    validate_generalized_fan,
    vertex_order,
)
from .presets import preset_module, preset_names
from .quiver import (
    BoundQuiverAlgebra,
    Module,
    Submodule,
    build_algebra,
    build_module,
    direct_sum,
    dim_vector,
    generated_submodule,
    quotient_module,
    simple_module,
    submodule_as_module,
    subquotient,
    zero_module,
)
from .stability import (
    CanonicalSequenceData,
    canonical_sequences,
    evaluate,
    in_class_closure,
    is_m_tf_equivalent,
    is_semistable,
    is_stable,
    m_tf_equivalent_by_filtration,
    supp_factors,
    t_set,
    wall_membership,
)
from .sublattice import enumerate_submodules, newton_polytope, submodule_dim_vectors
from .svg import render_svg

__version__ = "0.1.0"

__all__ = [
    "AlgebraDefinitionError",
    "BoundQuiverAlgebra",
    "CanonicalSequenceData",
    "Cone",
    "FanPathCatalog",
    "GeneralizedFan",
    "InputFormatError",
    "MTFFan",
    "Module",
    "ModuleDefinitionError",
    "NormalFan",
    "OracleReport",
    "Order",
    "Polytope",
    "ResourceLimitError",
    "SampleSet",
    "Submodule",
    "TFClassData",
    "boundary_regions",
    "build_algebra",
    "build_module",
    "build_mtf_fan",
    "build_sample_set",
    "canonical_sequences",
    "class_of",
    "cone_from_generators",
    "cone_from_hrep",
    "cone_intersection",
    "convex_hull",
    "dim_vector",
    "direct_sum",
    "enumerate_submodules",
    "evaluate",
    "face_restriction_check",
    "facet_partition",
    "fan_paths",
    "full_cone",
    "generated_submodule",
    "in_class_closure",
    "is_m_tf_equivalent",
    "is_semistable",
    "is_stable",
    "locate_cone",
    "m_tf_equivalent_by_filtration",
    "max_face",
    "minkowski_sum",
    "newton_polytope",
    "normal_cone",
    "normal_fan",
    "preset_module",
    "preset_names",
    "quotient_module",
    "render_svg",
    "simple_module",
    "smallest_cone",
    "subquotient",
    "submodule_as_module",
    "submodule_dim_vectors",
    "supp_factors",
    "t_set",
    "validate_generalized_fan",
    "verify_dim_formula",
    "verify_fan",
    "verify_point",
    "vertex_order",
    "wall_cone",
    "wall_membership",
    "zero_module",
]
