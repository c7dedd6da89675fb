"""Subjective disbelief mapped onto single-qubit rotation angles.

A fact carries a disbelief delta in [0, 100]: 0 means fully credible,
100 fully discredited, and credibility = 100 - delta. The chain

    alpha = pi * delta / 100        (displacement angle, [0, pi])
    theta = (pi - alpha) / 2        (rotation angle, [pi/2 .. 0])

gives the fact the amplitude pair (sin theta on TRUE, cos theta on FALSE),
so P(true) = sin^2(theta): a linear slide of delta sweeps the probability
smoothly from 1 down to 0.

The TRUE/FALSE roles here are abstract; the compiler decides which basis
bit carries TRUE.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .gates import Gate, M

LABELS = (
    "True",
    "Almost Certainly True",
    "Very Likely",
    "Likely",
    "Somewhat Likely",
    "Unknown",
    "Somewhat Unlikely",
    "Unlikely",
    "Very Unlikely",
    "Almost Certainly False",
    "False",
)


def _check_delta(delta: float) -> float:
    delta = float(delta)
    if not 0.0 <= delta <= 100.0:  # also rejects NaN
        raise ValueError(f"disbelief must be in [0, 100], got {delta}")
    return delta


def credibility(delta: float) -> float:
    return 100.0 - _check_delta(delta)


def delta_to_alpha(delta: float) -> float:
    """Disbelief to displacement angle, linear: alpha = pi*delta/100."""
    return math.pi * _check_delta(delta) / 100.0


def alpha_to_theta(alpha: float) -> float:
    """Rotation angle theta = (pi - alpha)/2; decreasing in alpha."""
    if not 0.0 <= alpha <= math.pi:
        raise ValueError(f"alpha must be in [0, pi], got {alpha}")
    return (math.pi - alpha) / 2.0


class FactAmplitudes(NamedTuple):
    theta: float
    amp_true: float
    amp_false: float

    @property
    def p_true(self) -> float:
        return self.amp_true**2

    @property
    def p_false(self) -> float:
        return self.amp_false**2


def fact_amplitudes(delta: float) -> FactAmplitudes:
    """Amplitude pair (sin theta, cos theta) for a fact at the given disbelief."""
    theta = alpha_to_theta(delta_to_alpha(delta))
    return FactAmplitudes(theta, math.sin(theta), math.cos(theta))


def qualitative_label(delta: float) -> str:
    """Verbal label of the nearest decade; ties between decades resolve toward 50."""
    delta = _check_delta(delta)
    decade = min(range(0, 101, 10), key=lambda d: (abs(delta - d), abs(d - 50)))
    return LABELS[decade // 10]


def uncertainty_gate(delta: float) -> Gate:
    """The single gate M(theta) realizing the fact state: M(theta)|0> has
    modulus pair (sin theta, cos theta)."""
    return M(alpha_to_theta(delta_to_alpha(delta)))
