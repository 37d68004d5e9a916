# homcount: exact point counts for homogeneous spaces over finite fields
# Copyright 2026 The homcount Authors.
# SPDX-License-Identifier: Apache-2.0
"""Exact counting polynomials for homogeneous spaces over finite fields.

The heavy lifting lives in the compiled extension; this package re-exports
its surface: the ``Spec`` class, ``period_bound``, ``replay_trace`` and the
``oracle`` submodule of brute-force enumerations.
"""

from ._homcount import Error, Spec, oracle, period_bound, replay_trace

__all__ = ["Error", "Spec", "oracle", "period_bound", "replay_trace"]
