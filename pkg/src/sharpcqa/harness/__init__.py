from .checks import CHECKS, ReductionCase, checks_for, couple_case, padding_case, register_check, run_checks
from .generator import Instance, constant_pool, random_database, random_query, random_schema, trial_rng
from .verify import TrialResult, VerificationReport, run_trial, run_verification
