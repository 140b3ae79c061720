"""Exact combinatorics of integer compositions and partitions.

Composition/partition value types and the gap bit-sequence codec live in
core; enumeration holds the exhaustive oracle generators; counting the
exact counters and recurrences; genfun the truncated integer power series;
bijection the odd-parts correspondence; analytic the certified
high-precision series for p(n) and q(n); verify the cross-check suites.
"""

from .analytic import (
    HPReal,
    NonCertifiedError,
    SeriesEvalReport,
    bessel_I1,
    dedekind_s,
    hagis_q,
    hagis_t,
    kloosterman_A,
    rademacher_p,
    sawtooth,
)
from .bijection import BijectionTrace, gt1_to_odd, odd_to_gt1, trace_forward
from .core import (
    BitSeq,
    Composition,
    DomainError,
    Partition,
    conjugate,
    format_composition,
    from_bitseq,
    make_composition,
    parse_composition,
    render_graph,
    to_bitseq,
)
from .counting import (
    BinetReport,
    MemoTable,
    Q_count,
    binet_first_failure,
    binet_float,
    c_count,
    fibonacci,
    p_recurrence,
    q_recurrence,
    q_recurrence_residual,
)
from .enumeration import (
    CompositionClass,
    PartitionClass,
    count_by_enumeration,
    gen_compositions,
    gen_partitions,
    parse_class,
)
from .genfun import (
    TruncatedSeries,
    compositions_gf,
    distinct_compositions_gf,
    distinct_partitions_ell_gf,
    partition_gf,
    series_inverse,
    series_mul,
)
from .verify import CheckResult, verify_suite

__version__ = "0.1.0"
