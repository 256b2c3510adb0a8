"""Calogero-Moser pairs, tau functions and reality tests (bindings to the C++ core).

Pairs, charts and spaces use the same JSON schemas as the ``cmtool`` CLI and
may be passed as dicts or JSON text.
"""

from ._cmreal import (
    CounterexampleAlarm,
    NotCMPairError,
    ParseError,
    bispectral_symmetric,
    chart_to_pair,
    coro_schur,
    dunkl,
    fiber,
    normalized_wronskian,
    pair_to_chart,
    real_span,
    realify,
    run_criterion,
    schur,
    tau,
    validate,
    wave,
)

__all__ = [
    "CounterexampleAlarm",
    "NotCMPairError",
    "ParseError",
    "bispectral_symmetric",
    "chart_to_pair",
    "coro_schur",
    "dunkl",
    "fiber",
    "normalized_wronskian",
    "pair_to_chart",
    "real_span",
    "realify",
    "run_criterion",
    "schur",
    "tau",
    "validate",
    "wave",
]
