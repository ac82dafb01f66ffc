"""tqnets: temporal quantities over semirings and sparse temporal networks."""

from .semiring import COMBINATORIAL, MINPLUS, Semiring
from .tq import (
    EMPTY,
    TQ,
    TimeHorizon,
    cut_ge,
    cut_gt,
    is_cumulative,
    make,
    pad_zero,
    render,
    tq_change_time,
    tq_cum,
    tq_cut,
    tq_prod,
    tq_sum,
    tq_summary,
    tq_total,
    value_at,
)
from .network import (
    NetworkError,
    Node,
    RankedLink,
    TemporalNetwork,
    del_loops,
    index_by_label,
    lookup_label,
    one_to_two_mode,
    square_to_one_mode,
    transpose,
    verify_kind,
)
from .algebra import (
    multiply,
    net_in_sum,
    net_out_sum,
    normalize_rows,
    top_links,
    top_loops,
    triple_product,
    two_to_one_cols,
)
from .pajek import (
    PajekError,
    StaticNetwork,
    TimePartition,
    parse_clu,
    parse_net,
    temporalize_one_mode,
    temporalize_two_mode,
    write_clu,
    write_net,
)
from .netsjson import export_tq_csv, read_netsjson, read_tq_csv, write_netsjson

__version__ = "0.1.0"
