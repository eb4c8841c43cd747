"""Two-step lottery: draw an extreme component by weight, then one of its
support points by mass.

Randomness comes from SplitMix64 so that a seed reproduces the same draws
on any platform.  The generator keeps one unsigned 64-bit word ``s``; each
call does::

    s = (s + 0x9E3779B97F4A7C15) mod 2**64
    z = s
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2**64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2**64
    return z ^ (z >> 31)

and a uniform double in ``[0, 1)`` is ``(output >> 11) * 2**-53``.

Independent streams for parallel workers are seeded with
``derive_seed(seed, k)``, the mixed output of ``seed + (k + 1) * 0x9E3779B97F4A7C15``.
"""
from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter
from dataclasses import dataclass
from itertools import accumulate
from typing import Dict, Sequence

from .decompose import Decomposition
from .extremes import ExtremeComponent
from .geometry import Point

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def random(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))


def derive_seed(seed: int, stream: int) -> int:
    return _mix((seed + (stream + 1) * GOLDEN) & MASK64)


def _pick(cumulative: Sequence[float], u: float) -> int:
    i = bisect_right(cumulative, u * cumulative[-1])
    # guards the u * total == total rounding edge
    return min(i, len(cumulative) - 1)


def sample_component(d: Decomposition, rng: SplitMix64) -> ExtremeComponent:
    cum = list(accumulate(float(w) for w in d.weights))
    return d.components[_pick(cum, rng.random())][0]


def sample_point(c: ExtremeComponent, rng: SplitMix64) -> Point:
    cum = list(accumulate(float(m) for m in c.masses))
    return c.points[_pick(cum, rng.random())]


@dataclass(frozen=True)
class EmpiricalSummary:
    draws: int
    empirical_mean: Point
    frequencies: Dict[Point, float]
    seed: int


class Lottery:
    """Precomputed cumulative tables for repeated two-step draws.

    Drawn points are shifted back by the decomposition offset, so the
    lottery realizes the original (uncentered) distribution.
    """

    def __init__(self, d: Decomposition):
        self.decomposition = d
        self._cum = list(accumulate(float(w) for w in d.weights))
        self._inner = []
        for c, _ in d.components:
            pts = tuple(z + d.offset for z in c.points)
            self._inner.append((pts, list(accumulate(float(m) for m in c.masses))))

    def draw(self, rng: SplitMix64) -> Point:
        pts, cum = self._inner[_pick(self._cum, rng.random())]
        return pts[_pick(cum, rng.random())]


def run(d: Decomposition, n: int, seed: int) -> EmpiricalSummary:
    if n < 1:
        raise ValueError("need at least one draw")
    rng = SplitMix64(seed)
    lottery = Lottery(d)
    counts = Counter(lottery.draw(rng) for _ in range(n))
    sx = math.fsum(float(z.x) * k for z, k in counts.items())
    sy = math.fsum(float(z.y) * k for z, k in counts.items())
    freqs = {z: counts[z] / n for z in sorted(counts)}
    return EmpiricalSummary(n, Point(sx / n, sy / n), freqs, seed)


def binomial_band(q: float, n: int, k: float = 3.0) -> float:
    """Half-width of the k-sigma band for a frequency with success rate q."""
    return k * math.sqrt(q * (1 - q) / n)
