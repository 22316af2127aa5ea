"""Rate regions, secrecy capacity and exact code simulation for multiple-access
channels with confidential messages."""

import json as _json

from ._gmac import Channel, GmacError, __version__, examples, frontier_csv, load_channel
from . import _gmac

__all__ = [
    "Channel",
    "GmacError",
    "__version__",
    "channel_from_dict",
    "check_degraded",
    "examples",
    "frontier_csv",
    "information",
    "load_channel",
    "region",
    "secrecy_capacity",
    "simulate",
]


def _dump(obj):
    return "" if obj is None else _json.dumps(obj)


def channel_from_dict(doc):
    """Channel from {"x1","x2","y","y1","y2","p"} with p nested [x1][x2][y][y1][y2]."""
    return _gmac.channel_from_json(_json.dumps(doc))


def check_degraded(channel, tol=1e-7):
    """Degradedness verdict, residual and witness kernel p(y2 | y, x2)."""
    return _json.loads(_gmac._check_degraded(channel, tol))


def secrecy_capacity(channel, r0=0.0, config=None, degraded=False):
    """Best searched secrecy rate at common rate r0, with the witness scheme."""
    return _json.loads(_gmac._secrecy_capacity(channel, r0, _dump(config), degraded))


def region(channel, bound, config=None, plane=None, fix=None, resolution=64):
    """Searched and convexified region for `bound`, reduced to its frontier in `plane`.

    bound is one of inner1, outer1, secrecy1, degraded, two-set, secrecy2.
    """
    if plane is None:
        plane = ("R0", "R1") if bound != "secrecy2" else ("R1", "R2")
    return _json.loads(_gmac._region_frontier(channel, bound, _dump(config), tuple(plane), dict(fix or {}), resolution))


def information(channel, scheme, a, b=(), given=()):
    """I(a; b | given), or H(a | given) when b is empty, under a scheme dict."""
    return _gmac._information(channel, _json.dumps(scheme), list(a), list(b), list(given))


def simulate(channel, config, jobs=0):
    """Exact error probability and equivocations for the codebooks of each seed.

    config holds n, M0, M1, M2, J1, J2, input_dist and seeds.
    """
    doc = {k: v for k, v in config.items() if k != "channel"}
    return _json.loads(_gmac._simulate(channel, _json.dumps(doc), jobs))
