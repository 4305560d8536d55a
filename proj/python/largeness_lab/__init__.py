"""Exact largeness checks, J-set search and theorem sweeps on finite semigroups.

Sets are passed as iterables of element indices. Verdicts and reports come
back as plain dictionaries with the same layout as the command line reports.
"""

import json

from ._core import (
    LargenessError,
    Semigroup,
    direct_product,
    enumerate_semigroups,
    is_good,
    subsemigroups,
    sweep_ids,
    translate_preimage,
    zfp,
)
from . import _core

__all__ = [
    "LargenessError",
    "Semigroup",
    "check",
    "direct_product",
    "enumerate_semigroups",
    "is_good",
    "j_witness",
    "kernel_report",
    "subsemigroups",
    "sweep",
    "sweep_ids",
    "translate_preimage",
    "windowed_check",
    "zfp",
]


def _elements(xs):
    return sorted(set(int(x) for x in xs))


def _family(family):
    out = []
    for f in family:
        if isinstance(f, int):
            out.append(([], [f]))
        else:
            pre, period = f
            out.append((list(pre), list(period)))
    return out


def check(S, A, kind, core=None, route="closed-form"):
    """Decide one largeness kind ("thick", "f-syndetic", "pws-f", ...)."""
    c = None if core is None else _elements(core)
    return json.loads(_core._check(S, _elements(A), kind, c, route))


def kernel_report(S, core=None):
    c = None if core is None else _elements(core)
    return json.loads(_core._kernel(S, c))


def j_witness(S, A, family, m_max=None, t_max=None):
    """Least witness {"m", "a", "t"} or None.

    A family member is either a constant element or a (preperiod, period) pair.
    Without bounds the search is exact.
    """
    text = _core._j_witness(S, _elements(A), _family(family), m_max, t_max)
    return None if text is None else json.loads(text)


def sweep(id, order, sample=None, seed=1, jobs=1, monoids_only=False):
    return json.loads(_core._sweep(id, order, sample, seed, jobs, monoids_only))


def windowed_check(name, window, kind, gap=0, run=0):
    return json.loads(_core._window(name, window, kind, gap, run))
