"""PFD protection masks for VHF land mobile receivers against satellite downlinks."""

from .antenna import AntennaPattern, beamwidth_from_peak_gain, gain
from .compliance import SatelliteEmission, compliance_margin, satellite_pfd
from .config import ScenarioConfig, dumps, loads, parse_config
from .criteria import (
    CriteriaParams,
    Criterion,
    CriterionLimit,
    analog_interference_limit,
    combined_ci_limit,
    digital_interference_limit,
    ecc_pfd_threshold,
    in_interference_limit,
    min_eirp,
    required_cnir_digital,
    sensitivity,
)
from .environment import NoiseEnvironment, combine_noise_temperatures, noise_power
from .errors import DomainError, InfeasibleBudgetError, UnitError, VdeMaskError
from .mask import PfdMask, compose_min, ecc_mask, pfd_from_interference, station_mask
from .propagation import free_space_loss, horizon_distance, slant_range, total_path_loss
from .scenario import evaluate
from .stations import Modulation, Role, StationProfile
from .units import DecibelQuantity, Kind, field_strength_to_pfd, from_db, rebandwidth, to_db

__version__ = "0.1.0"
