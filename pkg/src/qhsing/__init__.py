"""Singularities, plurigenera and log Kodaira dimension of quasihomogeneous varieties."""

from .classify import (
    Answer,
    BruteForceWitness,
    Verdict,
    classify_l2lt,
    classify_lc,
    classify_lt,
    classify_rational,
    kempf_rational_bruteforce,
    l2lt_bruteforce,
    lc_bruteforce,
)
from .errors import HypothesisError, InputError, PfaffianError, QhsingError, TruncationError, WeightError
from .graded import (
    DualizingShift,
    Hypotheses,
    PfaffianInput,
    PfaffianRing,
    WeightedCI,
    chart_orders,
    dualizing_shift,
    dualizing_shift_ci,
    graded_canonical_dim,
    hilbert,
    pfaffian_ring,
)
from .kodaira import Kbar, KodairaReport, growth_exponent_estimate, infinity_section_dim, kodaira_dimension, log_plurigenus
from .plurigenera import PlurigeneraRow, delta, lambda_, plurigenera_table
from .report import JobSpec, SingularityReport, dump_job, parse_job, render_report, run_job
from .series import FactoredHilbert, Series, coeff, expand, negativity_scan, partial_sum

__version__ = "0.1.0"
