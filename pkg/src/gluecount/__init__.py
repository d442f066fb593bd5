"""gluecount: exact counts of polygon edge gluings into bordered surfaces.

Glue some edges of an N-gon together in pairs (respecting orientation) and
the result is an orientable surface of some genus whose unglued edges form
polygonal boundary components. This package counts the inequivalent gluings
that produce a prescribed surface, exactly:

* `count_closed`     - closed formula (the fast route)
* `count_recursive`  - boundary-merging / handle-cutting recursion with a
                       persistent memo table
* `count_brute`      - exhaustive enumeration of gluing words (small polygons)
* `hz_sum` / `hz_tanh` / `hz_from_gluing_counts`
                     - the classical closed-surface (Harer-Zagier) numbers by
                       three independent routes

All arithmetic is integer/rational and exact; nothing here ever rounds.
"""

from .errors import (
    AllPuncturesError,
    CacheError,
    CacheVersionError,
    CapExceededError,
    ConsistencyError,
    DomainError,
    GluecountError,
    ParityError,
    SeriesOrderError,
    SignatureError,
    TruncationError,
)
from .exact import compositions, double_factorial_odd, factorial
from .formula import SurfaceSignature, count_closed, polygon_size
from .gluing import (
    DEFAULT_ENUMERATION_CAP,
    CanonicalWord,
    GluedSurface,
    GluingWord,
    canonicalize,
    count_brute,
    enumerate_classes,
    glue,
    iter_words,
)
from .hz import (
    GfIdentityReport,
    catalan,
    gf_identity_check,
    hz_from_gluing_counts,
    hz_sum,
    hz_tanh,
    hz_toric,
)
from .recursion import CountTable, count_recursive, memo_store_load, memo_store_save
from .series import (
    DEFAULT_ORDER,
    Poly,
    TruncatedSeries,
    coefficient,
    series_div,
    series_exp,
    series_log,
    series_mul,
    series_pow,
)

__version__ = "0.1.0"

__all__ = [
    "AllPuncturesError",
    "CacheError",
    "CacheVersionError",
    "CanonicalWord",
    "CapExceededError",
    "ConsistencyError",
    "CountTable",
    "DEFAULT_ENUMERATION_CAP",
    "DEFAULT_ORDER",
    "DomainError",
    "GfIdentityReport",
    "GluecountError",
    "GluedSurface",
    "GluingWord",
    "ParityError",
    "Poly",
    "SeriesOrderError",
    "SignatureError",
    "SurfaceSignature",
    "TruncatedSeries",
    "TruncationError",
    "canonicalize",
    "catalan",
    "coefficient",
    "compositions",
    "count_brute",
    "count_closed",
    "count_recursive",
    "double_factorial_odd",
    "enumerate_classes",
    "factorial",
    "gf_identity_check",
    "glue",
    "hz_from_gluing_counts",
    "hz_sum",
    "hz_tanh",
    "hz_toric",
    "iter_words",
    "memo_store_load",
    "memo_store_save",
    "polygon_size",
    "series_div",
    "series_exp",
    "series_log",
    "series_mul",
    "series_pow",
    "__version__",
]
