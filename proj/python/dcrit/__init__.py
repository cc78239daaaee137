"""Python bindings for the dcrit verification library.

Every runner returns the report as a dict following the ``dcrit.report/1``
schema, exactly as the ``dcrit`` command line tool prints it.
"""

import json as _json

from . import _core
from ._core import REPORT_SCHEMA, InvalidInput, __version__, partition_count

__all__ = [
    "REPORT_SCHEMA",
    "InvalidInput",
    "__version__",
    "corpus",
    "ext",
    "ext_points",
    "partition_count",
    "partitions",
    "run_all",
    "toric_chart",
    "toric_cover_stats",
    "verify_cdga",
    "verify_chainmap",
    "verify_family",
    "verify_resolution",
    "verify_superpotential",
]


def _runner(name):
    fn = getattr(_core, name)

    def run(n=2, prime=2147483647, seed=1, samples=20, timing=True):
        return _json.loads(fn(n, prime, seed, samples, timing))

    run.__name__ = name
    run.__doc__ = fn.__doc__
    return run


verify_cdga = _runner("verify_cdga")
verify_superpotential = _runner("verify_superpotential")
verify_family = _runner("verify_family")
verify_resolution = _runner("verify_resolution")
verify_chainmap = _runner("verify_chainmap")
ext = _runner("ext")
partitions = _runner("partitions")
toric_cover_stats = _runner("toric_cover_stats")
run_all = _runner("run_all")


def _text(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def ext_points(points, prime=2147483647, timing=True):
    """Ext report on a list of points (or a ``dcrit.points/1`` object)."""
    return _json.loads(_core.ext_points(_text(points), prime, timing))


def toric_chart(surface, points):
    """Chart containing ``points`` on ``surface``; both as JSON values or text."""
    return _json.loads(_core.toric_chart(_text(surface), _text(points)))


def corpus(max_n, conjugates=0, seed=1):
    """Partition points of size <= max_n plus random conjugates."""
    return _json.loads(_core.corpus(max_n, conjugates, seed))
