"""Outlier profiling: residue count as a step function of the potential
scale alpha.

Raising alpha makes isolated vertices progressively more expensive to keep
inside parts, so the post-processed minimizer sheds them into the residue.
The profile locates the alpha values where the residue count steps, scores
each constant interval, and picks the interval whose score is largest; its
left endpoint is the suggested outlier-extraction scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import WeightedTree, as_fraction
from .postprocess import reduce_residue
from .solver import isoperimetric_number

DEFAULT_EPSILON = Fraction(1, 100)
DEFAULT_SIGMA_S = 0.5
ALPHA_MAX_CAP = Fraction(1 << 20)


def residue_at(tree: WeightedTree, k: int, alpha):
    """Post-processed minimizer at scale alpha and its residue count."""
    alpha = as_fraction(alpha)
    value, sub = isoperimetric_number(tree, k, alpha)
    reduced = reduce_residue(tree, sub, value, alpha)
    return reduced.residue_number, reduced


@dataclass(frozen=True)
class ProfileSample:
    alpha: Fraction
    residue_count: int
    residue: frozenset


@dataclass(frozen=True)
class ProfileInterval:
    alpha_low: Fraction
    alpha_high: Fraction
    residue_count: int
    sm: float


@dataclass(frozen=True)
class OutlierProfile:
    """Step function alpha -> residue count over [0, alpha_max].

    ``intervals`` tile [0, alpha_max] contiguously; each carries the score
    from interval_measure. ``samples`` is the full evaluation grid (every
    alpha at which the pipeline was actually run, with the residue set
    found there). Segments where the observed count *drops* as alpha grows
    are listed in ``non_monotone_segments`` instead of being hidden.
    """

    k: int
    sigma_s: float
    epsilon: Fraction
    alpha_max: Fraction
    intervals: tuple
    samples: tuple
    non_monotone_segments: tuple

    def to_document(self, outliers=()):
        interval, alpha_star = select_alpha_star(self)
        return {
            "k": self.k,
            "sigma_s": float(self.sigma_s),
            "epsilon": float(self.epsilon),
            "alpha_max": float(self.alpha_max),
            "intervals": [
                {
                    "alpha_low": float(iv.alpha_low),
                    "alpha_high": float(iv.alpha_high),
                    "residue_count": iv.residue_count,
                    "sm": iv.sm,
                }
                for iv in self.intervals
            ],
            "alpha_star": float(alpha_star),
            "outliers": sorted(outliers),
            "non_monotone_segments": [
                [float(a), float(b)] for a, b in self.non_monotone_segments
            ],
        }


def interval_measure(interval, sigma_s: float) -> float:
    """Score of a constant interval: exp(-min/sigma_s) - exp(-max/sigma_s).

    Rewards intervals that start close to the origin yet persist long;
    degenerate intervals score 0. Values lie in [0, 1)."""
    if sigma_s <= 0:
        raise ValueError("sigma_s must be positive")
    if isinstance(interval, ProfileInterval):
        lo, hi = interval.alpha_low, interval.alpha_high
    else:
        lo, hi = interval
    lo, hi = float(lo), float(hi)
    if lo > hi:
        raise ValueError(f"degenerate interval [{lo}, {hi}]")
    return math.exp(-lo / sigma_s) - math.exp(-hi / sigma_s)


def auto_alpha_max(tree: WeightedTree, k: int, start=Fraction(1)) -> Fraction:
    """Upper end of the profile bracket: double alpha geometrically until
    the residue count is unchanged over two consecutive doublings."""
    b = as_fraction(start)
    counts = [residue_at(tree, k, b)[0]]
    while b < ALPHA_MAX_CAP:
        b = b * 2
        counts.append(residue_at(tree, k, b)[0])
        if len(counts) >= 3 and counts[-1] == counts[-2] == counts[-3]:
            break
    return b


def outlier_profile(tree: WeightedTree, k: int, alpha_max=None,
                    epsilon=DEFAULT_EPSILON, sigma_s=DEFAULT_SIGMA_S) -> OutlierProfile:
    """Locate the steps of the residue-count function on [0, alpha_max].

    Recursive bisection: an interval is split while its endpoints disagree
    on the residue count and it is wider than epsilon. Each breakpoint is
    therefore pinned to within epsilon. Intervals between breakpoints are
    scored with interval_measure.
    """
    epsilon = as_fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if alpha_max is None:
        alpha_max = auto_alpha_max(tree, k)
    alpha_max = as_fraction(alpha_max)
    if alpha_max <= 0:
        raise ValueError("alpha_max must be positive")

    samples = {}

    def sample(a: Fraction) -> int:
        if a not in samples:
            count, reduced = residue_at(tree, k, a)
            samples[a] = ProfileSample(a, count, reduced.residue)
        return samples[a].residue_count

    def refine(a: Fraction, b: Fraction):
        if b - a <= epsilon or sample(a) == sample(b):
            return
        mid = (a + b) / 2
        sample(mid)
        refine(a, mid)
        refine(mid, b)

    sample(Fraction(0))
    sample(alpha_max)
    refine(Fraction(0), alpha_max)
    ordered = tuple(samples[a] for a in sorted(samples))

    non_monotone = tuple(
        (s0.alpha, s1.alpha)
        for s0, s1 in zip(ordered, ordered[1:])
        if s1.residue_count < s0.residue_count
    )

    # Constant runs; each new count starts its interval at the first alpha
    # observed with that count, so the true breakpoint sits within epsilon.
    intervals = []
    run_start = Fraction(0)
    run_count = ordered[0].residue_count
    for s in ordered[1:]:
        if s.residue_count != run_count:
            intervals.append((run_start, s.alpha, run_count))
            run_start = s.alpha
            run_count = s.residue_count
    intervals.append((run_start, alpha_max, run_count))
    scored = tuple(
        ProfileInterval(lo, hi, count, interval_measure((lo, hi), sigma_s))
        for lo, hi, count in intervals
    )
    return OutlierProfile(
        k=k,
        sigma_s=sigma_s,
        epsilon=epsilon,
        alpha_max=alpha_max,
        intervals=scored,
        samples=ordered,
        non_monotone_segments=non_monotone,
    )


def select_alpha_star(profile: OutlierProfile):
    """Interval with the largest score (ties to the earlier one) and its
    left endpoint, the suggested outlier-extraction scale."""
    if not profile.intervals:
        raise ValueError("empty profile")
    best = profile.intervals[0]
    for iv in profile.intervals[1:]:
        if iv.sm > best.sm:
            best = iv
    return best, best.alpha_low


def outlier_set(tree: WeightedTree, k: int, alpha, profile=None,
                alpha_max=None, epsilon=DEFAULT_EPSILON) -> frozenset:
    """Vertices in the residue at every evaluated scale >= alpha.

    This approximates the exact outlier set (which quantifies over all
    minimizers and all scales) on the profile's evaluation grid; alpha
    itself is always evaluated. A profile built beforehand can be passed in
    to reuse its grid."""
    alpha = as_fraction(alpha)
    if profile is None:
        profile = outlier_profile(tree, k, alpha_max=alpha_max, epsilon=epsilon)
    result = None
    for s in profile.samples:
        if s.alpha == alpha:
            result = s.residue
            break
    if result is None:
        result = residue_at(tree, k, alpha)[1].residue
    for s in profile.samples:
        if s.alpha >= alpha:
            result = result & s.residue
    return frozenset(result)
