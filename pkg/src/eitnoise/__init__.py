"""Propagation of quantum fluctuations of a pump/probe pair through an EIT medium."""

from .analytic import (ClosedFormContext, approx_spectra, approx_uncertainty_product,
                       asymptotic_spectra, closed_form_spectra, f_factor, length_scales,
                       peak_positions, resonance_p)
from .errors import (ConsistencyError, EITError, InconsistentStateError, IntegrationError,
                     LimitEvaluationWarning, UndefinedStateError, UnsupportedFeatureError)
from .langevin import (FluctuationBlock, atomic_jacobian, diffusion_matrix,
                       einstein_residual, fluctuation_block)
from .model import (ORDERING, DriveState, MediumParams, SystemOrdering, build_drive,
                    c_prefactor, drive_from_rabi, length_unit)
from .propagate import (CovarianceMap, input_covariance, propagate_covariance, simulate,
                        simulate_decoherence, spectrum, sweep, uncertainty_product)
from .steady_state import MeanValues, dark_state, steady_state_numeric
from .transfer import EigenReport, FieldGenerator, eigen_report, field_generator, noise_injection

__version__ = "0.1.0"
