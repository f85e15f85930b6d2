"""Free Z/p chain complexes over F_p: homology, joins and the cohomological index."""
from .complexes import (EquivariantComplex, HomologyTable, ValidationError, builtin_complex, complex_U, complex_V,
                        expand, homology, homology_equivariant, homology_orbit, lens, make_complex, orbit_complex,
                        orbit_projection_induced, point_orbit, validate)
from .explore import GenConfig, check_additivity, check_lemmas, random_free_complex, run_trials
from .files import load_complex, save_complex
from .gfp import PrimeField
from .index import IndexReport, classifying_lift, index, index_report
from .join import join, join_with_point
from .rmod import (GroupRingElem, RModule, direct_sum, indecomposable, iso_test, jordan_type,
                   tensor_diagonal)

__version__ = "0.1.0"
