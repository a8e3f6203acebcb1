from .bicharacter import (
    Bicharacter,
    InvalidBicharacterError,
    Violation,
    bicharacter_from_json,
    grassmann_bicharacter,
    lambda_along_path,
    lambda_exponent,
    lambda_sigma,
    make_bicharacter,
    symplectic_bicharacter,
    trivial_bicharacter,
    verify_bicharacter,
)
from .models import ColorModel, GrassmannModel, find_tensor_counterexample, model_for, tensor_evaluate
from .regular import GradedStructure, RegularityReport, check_regular, theta_as_bicharacter
from .transforms import canonical_relabel, phi_h, sign_of_order, super_group, transform_basis, zeta_J
