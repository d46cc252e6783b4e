"""Exact set valuations: construction, combination, classification and
optimisation of ultra valuations, plus Walrasian checks for small economies."""

from .core import (
    DomainError,
    GroundSet,
    PriceVector,
    Valuation,
    add_dummies,
    complementarity,
    direct_sum,
    eval_bundle,
    marginal,
    or_combine,
    restrict,
    to_value,
    utility,
    xor_combine,
)
from .demand import (
    FailureWitness,
    GreedyTrace,
    PreferredSet,
    brute_force_maximize,
    certify_k_preferred,
    certify_preferred,
    demand_set,
    greedy_failure_witness,
    greedy_maximize,
    shortened_greedy,
)
from .economy import (
    Allocation,
    Economy,
    EquilibriumVerdict,
    check_walrasian,
    optimal_allocation,
    welfare,
)
from .generators import (
    CatalogName,
    ConcaveSchedule,
    catalog,
    extended_symmetric,
    left_right,
    random_table,
    symmetric,
)
from .properties import (
    CapExceeded,
    LemmaId,
    LemmaPreconditionError,
    PropertyId,
    Verdict,
    Witness,
    check,
    check_equivalence_class,
    check_lemma,
    classify,
)

__version__ = "0.1.0"
