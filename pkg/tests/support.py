"""Shared helpers: cached workspaces and check-suite runs per zoo entry."""
from __future__ import annotations

from bcontact import zoo
from bcontact.checks import run_checks
from bcontact.scalars import RATIONAL

_WS = {}
_RESULTS = {}


def workspace(name: str, mode: str = RATIONAL):
    key = (name, mode)
    if key not in _WS:
        _WS[key] = zoo.builtin(name).workspace(mode)
    return _WS[key]


def suite_results(name: str, mode: str = RATIONAL, planes: int = 20):
    key = (name, mode, planes)
    if key not in _RESULTS:
        _RESULTS[key] = run_checks(workspace(name, mode), seed=0, plane_count=planes)
    return _RESULTS[key]


def result_map(name: str, mode: str = RATIONAL, planes: int = 20):
    return {r.name: r for r in suite_results(name, mode, planes)}
