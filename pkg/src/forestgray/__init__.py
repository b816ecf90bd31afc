"""Gray listings of the bit patterns allowed by a totally acyclic digraph.

Typical use::

    from forestgray import load_forest, ActiveList, run_path

    forest = load_forest(open("spider.txt").read())
    path = run_path(ActiveList(forest), forest.labels())
"""
from .active_list import ActiveList
from .analysis import Analysis, InitTable, analyze, count_total, init_table
from .coroutine_engine import CoroutineEngine, GeneratorEngine
from .digraph_io import (
    RawDigraph,
    SpiderForest,
    format_digraph,
    load_forest,
    mapping_report,
    parse_digraph,
    validate_and_normalize,
)
from .errors import (
    CapExceeded,
    DuplicateArc,
    GrayError,
    InternalProtocol,
    NoFixture,
    NotTotallyAcyclic,
    ParseError,
    UndirectedCycle,
)
from .steps import HALF_PERIOD_END, Changed, GrayPath, run_path, take_steps

__version__ = "0.1.0"

__all__ = [
    "ActiveList",
    "Analysis",
    "analyze",
    "CapExceeded",
    "Changed",
    "CoroutineEngine",
    "count_total",
    "DuplicateArc",
    "format_digraph",
    "GeneratorEngine",
    "GrayError",
    "GrayPath",
    "HALF_PERIOD_END",
    "init_table",
    "InitTable",
    "InternalProtocol",
    "load_forest",
    "mapping_report",
    "NoFixture",
    "NotTotallyAcyclic",
    "parse_digraph",
    "ParseError",
    "RawDigraph",
    "run_path",
    "SpiderForest",
    "take_steps",
    "UndirectedCycle",
    "validate_and_normalize",
]
