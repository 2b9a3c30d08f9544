"""Synthetic smart-grid day: one appliance, per-minute measurements.

Atoms:
  a  fuzzy availability, from the delay of each minute against its history
  d  crisp: new metering data arrived this minute
  c  crisp: an operational control signal was sent to the appliance
  s  crisp: the appliance is connected (0 during an outage)
  p  fuzzy: the energy consumption is moderate
"""

from __future__ import annotations

import math
import random

from .core import Trace


def availability(delta: float, variance: float) -> float:
    """Truth degree that availability is high, from the delay offset.

    Full degree from half a variance below the mean upward, fading linearly
    to zero at one and a half variances below; the clamp only guards float
    rounding at the branch point.
    """
    if delta < -1.5 * variance:
        return 0.0
    raw = (delta + 1.5 * variance) / variance
    return min(1.0, max(0.0, raw))


def _delay_profile(minute: int) -> tuple[float, float]:
    # slower around breakfast and dinner peaks; variance follows the mean
    day_angle = 2.0 * math.pi * minute / 1440.0
    mean = 30.0 + 8.0 * math.sin(day_angle - 1.0) + 5.0 * math.sin(2.0 * day_angle)
    variance = 4.0 + 2.0 * math.sin(day_angle + 0.5)
    return mean, variance


def generate_day(minutes: int = 1440, seed: int = 0) -> Trace:
    """A deterministic per-minute trace; same seed, same bytes."""
    rng = random.Random(seed)
    outages: set[int] = set()
    for _ in range(rng.randint(1, 3)):
        start = rng.randrange(max(1, minutes))
        for m in range(start, min(minutes, start + rng.randint(2, 10))):
            outages.add(m)

    rows = []
    pending_control = -1
    consumption_level = rng.uniform(0.3, 0.7)
    for minute in range(minutes):
        mean, variance = _delay_profile(minute)
        actual = mean + rng.gauss(0.0, math.sqrt(variance))
        a = availability(actual - mean, variance)

        d = 1.0 if minute % 15 == 0 else 0.0
        if d == 1.0:
            pending_control = minute + rng.randint(0, 2)
        c = 1.0 if minute == pending_control else 0.0

        s = 0.0 if minute in outages else 1.0

        consumption_level += rng.uniform(-0.05, 0.05)
        consumption_level = min(1.0, max(0.0, consumption_level))
        p = round(consumption_level, 6)

        rows.append((round(a, 6), d, c, s, p))
    return Trace(("a", "d", "c", "s", "p"), tuple(rows))
