"""Half-open index ranges, array splitting policies and their brute-force checks."""

from .errors import (
    ContractError,
    DomainError,
    ExprSyntaxError,
    IndexOverflowError,
    IntDivisionError,
    RangeSplitError,
    RangeUnderflowError,
)
from .intdiv import Bindings, DivMode, check_equiv, check_identity, eval_expr, eval_range, idiv, parse_expr, parse_range
from .ranges import BoundSpec, Range, contains, drop_back, drop_front, left_window, length, make_range, mirror_index, rebase, right_window
from .splitter import (
    Landmarks,
    Partition,
    SplitPolicy,
    center_band,
    center_index,
    center_window,
    kway_split,
    landmarks,
    split_based,
    split_be,
    split_bex,
    split_n,
)
from .algorithms import SearchVariant, binary_search, chop_points, merge_sort, quicksort, word_crosses_center

__version__ = "0.1.0"
