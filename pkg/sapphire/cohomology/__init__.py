from .errors import (CohomologyError, RejectedParams, AugmentationNonzero, DegreeOutOfRange,
                     InvalidCharacter, InvalidModule, CoefficientSyntaxError, NotACocycle,
                     NotInSpan, DimensionMismatch)
from .group import GroupParams, GroupElement, Character, SapphireGroup, validate_params
from .group import TRIVIAL_CHARACTER, ETA1, ETA2, ETA3
from .group_ring import GroupRingElement, fox_derivative, fox_power, fox_decompose
from .resolution import FreeVector, Resolution, build_resolution
from .diagonal import TensorVector, BalancedTensor, Diagonal
from .coefficients import CoefficientModule, module_trivial_Z, module_character, module_Zp
from .coefficients import tensor, parse_coefficient
from .linalg import smith_normal_form, SmithForm, Subquotient
from .homology import AbelianInvariants, CohomologyClass, CohomologyGroup, HomologyGroup
from .homology import cohomology, homology, express_in_generators
from .products import ProductCalculator, ProductTable, ProductEntry, product_table
from .verify import VerificationSuite, CheckResult, run_verification
from .report import ReportView
