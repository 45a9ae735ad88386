"""Counting multinomial coefficients with a prescribed value.

The core question: among the solutions of k_1 + k_2 + ... + k_n = k,
k_1 + 2*k_2 + ... + n*k_n = n (partitions of n into exactly k positive
parts), how many have multinomial coefficient k!/(k_1!...k_n!) equal to
a given m?  The package provides exhaustive oracles, closed forms for
the targets that admit them, and large-range verification sweeps over
related binomial-coefficient claims, all exposed through a CLI and a
small HTTP service.
"""

from .arith import (
    PrimePower,
    binomial,
    binomial_is_prime_power,
    binomial_p_order,
    factorize,
    is_prime,
    is_prime_power,
    kummer_carries,
    legendre_order,
    multinomial,
    primes_up_to,
)
from .conjecture import (
    Checkpoint,
    CorruptCheckpointError,
    SearchConfig,
    SearchMode,
    SearchReport,
    checkpoint_load,
    checkpoint_save,
    gcd_conjecture_holds_direct,
    gcd_conjecture_holds_fast,
    lemma1_holds,
    search,
)
from .mcount import (
    MQuery,
    MResult,
    count_xy_solutions,
    fine_check,
    fine_lhs,
    m_closed,
    m_closed_one,
    m_closed_prime_power,
    m_closed_ten,
    m_closed_two,
    m_count_bruteforce,
    m_count_pruned,
    multinomial_distribution,
    multinomial_value,
)
from .partitions import (
    MultiplicityVector,
    count_partitions,
    from_parts,
    partitions_into_parts,
    to_parts,
)

__version__ = "0.1.0"

__all__ = [
    "PrimePower",
    "binomial",
    "binomial_is_prime_power",
    "binomial_p_order",
    "factorize",
    "is_prime",
    "is_prime_power",
    "kummer_carries",
    "legendre_order",
    "multinomial",
    "primes_up_to",
    "Checkpoint",
    "CorruptCheckpointError",
    "SearchConfig",
    "SearchMode",
    "SearchReport",
    "checkpoint_load",
    "checkpoint_save",
    "gcd_conjecture_holds_direct",
    "gcd_conjecture_holds_fast",
    "lemma1_holds",
    "search",
    "MQuery",
    "MResult",
    "count_xy_solutions",
    "fine_check",
    "fine_lhs",
    "m_closed",
    "m_closed_one",
    "m_closed_prime_power",
    "m_closed_ten",
    "m_closed_two",
    "m_count_bruteforce",
    "m_count_pruned",
    "multinomial_distribution",
    "multinomial_value",
    "MultiplicityVector",
    "count_partitions",
    "from_parts",
    "partitions_into_parts",
    "to_parts",
    "__version__",
]
