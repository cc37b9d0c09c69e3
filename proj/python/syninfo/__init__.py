"""Synergistic information measures over discrete joint distributions."""

from ._core import (
    ConditionalPmf,
    ConvergenceError,
    DecompositionConfig,
    DecompositionResiduals,
    DecompositionResult,
    DeterministicSrv,
    EnumerationBudgetError,
    JointPmf,
    MoodTestResult,
    OsrvSequence,
    PerSrvTerm,
    SearchConfig,
    SrvResult,
    SynergyEstimate,
    binary_channel_pmf,
    binary_impossibility_scan,
    binary_pair_pmf,
    chi_square_survival,
    cond_entropy,
    cond_mutual_info,
    decompose,
    entropy,
    enumerate_srvs,
    estimate_synergy,
    find_osrv_sequence,
    find_srv,
    maximize_ordering,
    mood_median_test,
    mutual_info,
    perturb_local,
    perturb_nonlocal,
    run_fig2,
    run_fig3,
    run_fig4,
    srv_upper_bound,
    synergy_terms,
    three_bit_msrv_census,
    verify_decomposition,
    whole_minus_sum,
    wyner_condition_check,
)

__version__ = "0.1.0"
