"""Exact-arithmetic engine for weighted surface (triangulation) algebras."""

from .algebra import (AlgebraTable, CyclePaths, DimensionMismatch,
                      SingularSocle, build_algebra, cartan_matrix,
                      cycle_paths, multiply, relation_generators, socle,
                      string_dim_formula, symmetrizing_form)
from .bimodule import (BimoduleResolution, CapExceeded, SingularInput,
                       bimodule_resolution, verify_bimodule_period)
from .catalog import builtin, builtin_names
from .classify import (ClassificationResult, VProfile, classify,
                       singular_parameter_probe, v_profile)
from .degeneration import (NonGenericWithoutFamilyTag, degeneration_algebra,
                           verify_degeneration_isomorphism)
from .fields import GF, QQ, field_from_name
from .modules import (ModuleMap, RightModule, ext2_dims, modules_isomorphic,
                      omega_period_of_simple, projective_cover,
                      projective_module, resolution_shape, simple_module,
                      syzygy)
from .quiver import (AssumptionViolated, Quiver, SurfaceAlgebraSpec,
                     TriangulationQuiver, ValidationReport, check_assumptions,
                     derive_permutations, gabriel_quiver,
                     validate_triangulation_quiver, virtual_arrows)
from .specfile import SpecParseError, load_spec, parse_spec, spec_to_text
from .walks import enumerate_bands, enumerate_strings, walk_classify

__version__ = "0.1.0"
