"""Exact character-table computations for bounding the lct of a 9-dimensional representation."""

__version__ = "0.1.0"

from .cyclo import Cyclotomic, zeta  # noqa: E402
from .chartab import CharacterTable, ClassFunction, TableParseError, TableValidationError, load_table, parse_table  # noqa: E402
from .sums import DimensionProfile, realizations, sigma  # noqa: E402
from .reps import decompose, delta_profile, ext_power, sym_power, tensor  # noqa: E402
from .hilbert import HilbertCandidate, builtin_constraints, check_candidate, search  # noqa: E402
from .exclusion import CaseData, TensorSplit, exclude_case  # noqa: E402
