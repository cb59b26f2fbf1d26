"""Numerical tolerances used across the toolkit.

All inequality verdicts, guards, and certification slacks are derived
from this one frozen config so a single override (e.g. the CLI ``--tol``
flag) changes behaviour coherently.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # normwise accuracy target of the matrix exponential kernel
    exp_tol: float = 1e-12
    # resolvent refusal: shifts closer than spectrum_guard * max(1, ||A||)
    # to an eigenvalue are rejected rather than inverted
    spectrum_guard: float = 1e-8
    # accepted relative residual ||(lambda I - A) X - I|| / ((|lambda| + ||A||) ||X||)
    residual_tol: float = 1e-10
    # relative slack of certified growth envelopes and renorm checks
    env_tol: float = 1e-6
    # relative slack of all resolvent-inequality verdicts; |ratio - 1| within
    # this is reported "tight" rather than failed
    power_tol: float = 1e-8
    # absolute truncation target of the geometric-series inverse
    series_tol: float = 1e-12
    # relative distance to the unit circle below which spectra are "marginal"
    gap_tol: float = 1e-8
    # absolute slack (times scale) of semigroup-difference bound checks
    abs_tol: float = 1e-8

    def with_power_tol(self, value: float) -> "Tolerances":
        return dataclasses.replace(self, power_tol=float(value))


DEFAULT_TOLS = Tolerances()
