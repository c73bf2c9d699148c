"""Deterministic random instances for fuzz campaigns and tests.

Values are drawn from dyadic grids (k/64 and friends) so that exact
comparisons stay exact; tolerance paths are exercised by the measure
families whose evaluation genuinely rounds (distortion, lambda).
Everything is keyed by (seed, index) through the stable hash in
:func:`nonadd.core.rng_for`.
"""

from __future__ import annotations

import math
import random
from typing import Callable

import numpy as np

from .core import EXTENDED, FiniteSpace, Fn, INF, NONNEG, UNIT, ValueScale, rng_for
from .measures import (
    MonotoneMeasure,
    generate_measure,
    lambda_sugeno_random,
)
from .operators import BinaryOp
from .relations import is_comonotone, is_star_associated
from .results import DomainError


def random_values(rng: random.Random, n: int, scale: ValueScale = UNIT, *,
                  grid: int = 64, zero_rate: float = 0.15,
                  inf_rate: float = 0.0, span: float = 4.0) -> list[float]:
    """Dyadic-grid values inside the scale, with optional planted zeros and
    (on a closed infinite scale) infinities."""
    out = []
    top = scale.upper
    for _ in range(n):
        u = rng.random()
        if u < zero_rate:
            out.append(0.0)
        elif inf_rate and math.isinf(top) and scale.closed and u < zero_rate + inf_rate:
            out.append(INF)
        elif math.isinf(top):
            out.append(rng.randrange(0, int(span * grid) + 1) / grid)
        else:
            k = rng.randrange(0, grid + 1)
            v = top * k / grid
            if not scale.closed and v >= top:
                v = top * (grid - 1) / grid
            out.append(v)
    return out


def random_fn(rng: random.Random, n: int, scale: ValueScale = UNIT, **kw) -> Fn:
    return Fn(random_values(rng, n, scale, **kw), scale)


def comonotone_pair(rng: random.Random, n: int, scale: ValueScale = UNIT, *,
                    max_sum: float | None = None, levels: int = 6) -> tuple[Fn, Fn]:
    """Two nondecreasing reparametrizations of one rank vector (ties kept).

    With ``max_sum`` the two level ladders are scaled so every pointwise sum
    stays at or below it.
    """
    ranks = [rng.randrange(0, levels) for _ in range(n)]
    top = scale.upper if not math.isinf(scale.upper) else 4.0

    def ladder() -> list[float]:
        incs = [rng.randrange(0, 9) for _ in range(levels)]
        tot = sum(incs) or 1
        cap = top if max_sum is None else max_sum / 2.0
        acc, out = 0.0, []
        for inc in incs:
            acc += inc / tot * cap
            out.append(min(acc, cap))
        return out

    la, lb = ladder(), ladder()
    f = Fn([la[r] for r in ranks], scale)
    g = Fn([lb[r] for r in ranks], scale)
    return f, g


def anti_monotone_pair(rng: random.Random, n: int, scale: ValueScale = UNIT) -> tuple[Fn, Fn]:
    f = sorted(random_values(rng, n, scale))
    g = sorted(random_values(rng, n, scale), reverse=True)
    return Fn(f, scale), Fn(g, scale)


def star_associated_pair(rng: random.Random, n: int, star: BinaryOp,
                         scale: ValueScale = UNIT, kind: str = "comonotone",
                         retries: int = 40) -> tuple[Fn, Fn]:
    """A pair satisfying the subset-infimum factorization for ``star``.

    ``comonotone`` works for any nondecreasing right-continuous operator;
    ``indicator`` and ``two_block`` are the annihilator-based constructions
    that are star-associated without being comonotone; ``any`` draws
    unconstrained pairs (valid when star is min).  Construction is
    re-verified and resampled on failure.
    """
    for attempt in range(retries):
        local = random.Random(rng.randrange(1 << 62) + attempt)
        if kind == "any":
            f, g = random_fn(local, n, scale), random_fn(local, n, scale)
        elif kind == "comonotone":
            f, g = comonotone_pair(local, n, scale)
        elif kind == "indicator":
            # one-block second factor; needs x star 0 = 0
            f = random_fn(local, n, scale, zero_rate=0.1)
            b = local.randrange(1, 33) / 32.0 * (scale.upper if not math.isinf(scale.upper) else 1.0)
            mask = local.randrange(1, (1 << n) - 1)
            g = Fn.indicator(n, mask, b, scale)
        elif kind == "two_block":
            # two disjoint blocks plus a free remainder; needs both annihilators
            if n < 3:
                raise DomainError("two_block construction needs at least 3 points")
            pts = list(range(n))
            local.shuffle(pts)
            cut1 = 1 + local.randrange(n - 2)
            cut2 = cut1 + 1 + local.randrange(n - cut1 - 1)
            B, C = pts[:cut1], pts[cut1:cut2]
            top = scale.upper if not math.isinf(scale.upper) else 2.0
            b = local.randrange(1, 33) / 32.0 * top
            c = local.randrange(1, 33) / 32.0 * top
            fv = [0.0] * n
            gv = [0.0] * n
            for i in B:
                fv[i] = b
                gv[i] = b
            for i in C:
                fv[i] = c
            for i in pts[cut2:]:
                gv[i] = c
            f, g = Fn(fv, scale), Fn(gv, scale)
        else:
            raise DomainError(f"unknown construction kind {kind!r}")
        if is_star_associated(f, g, star, seed=0).holds:
            if kind in ("indicator", "two_block") and is_comonotone(f, g).holds:
                continue  # want the non-comonotone witnesses to stay interesting
            return f, g
    raise DomainError(f"could not build a star-associated pair (kind={kind!r})")


# ---------------------------------------------------------------------------
# measures
# ---------------------------------------------------------------------------

_SUBADDITIVE_FAMILIES = ("possibility", "distortion_concave", "lambda", "additive")


def subadditive_measure(seed: int, index: int, n: int) -> MonotoneMeasure:
    """Rotating mix of subadditive families, deterministic per (seed, index)."""
    family = _SUBADDITIVE_FAMILIES[index % len(_SUBADDITIVE_FAMILIES)]
    sub_seed = rng_for(seed, "subadditive", index).randrange(1 << 30)
    if family == "possibility":
        return generate_measure(sub_seed, "possibility", n)
    if family == "distortion_concave":
        return generate_measure(sub_seed, "distortion_concave", n)
    if family == "lambda":
        return lambda_sugeno_random(sub_seed, n)
    return generate_measure(sub_seed, "non_maxitive", n)  # additive, hence subadditive


def monotone_measure(seed: int, index: int, n: int) -> MonotoneMeasure:
    """Rotating mix of general monotone families (not necessarily subadditive)."""
    fams = ("monotonized_random", "possibility", "distortion_concave", "non_maxitive")
    family = fams[index % len(fams)]
    sub_seed = rng_for(seed, "monotone", index).randrange(1 << 30)
    return generate_measure(sub_seed, family, n)


def non_subadditive_measure(seed: int, n: int) -> tuple[MonotoneMeasure, tuple[int, int]]:
    """Monotone measure with a planted pair violating subadditivity.

    A small monotonized base (at most 0.3) is raised to 1 on every superset
    of a planted disjoint union, so the union exceeds the sum of its parts.
    """
    rng = rng_for(seed, "non-subadditive", n)
    if n < 2:
        raise DomainError("need at least two points")
    pts = list(range(n))
    rng.shuffle(pts)
    cut = 1 + rng.randrange(max(n - 1, 1))
    a_mask = sum(1 << i for i in pts[:cut]) or 1
    b_mask = sum(1 << i for i in pts[cut:]) or (1 << pts[-1])
    if a_mask & b_mask:
        b_mask = ((1 << n) - 1) ^ a_mask or 1 << pts[-1]
    base = generate_measure(rng.randrange(1 << 30), "monotonized_random", n)
    tab = base.table() * 0.3
    union = a_mask | b_mask
    idx = np.arange(1 << n, dtype=np.int64)
    covers = (idx & union) == union
    tab = np.where(covers, 1.0, tab)
    mu = MonotoneMeasure.explicit(FiniteSpace(n), tab, rounding=True)
    return mu, (a_mask, b_mask)


def measure_with_null_atoms(seed: int, n: int, null_count: int = 1) -> MonotoneMeasure:
    """Subadditive possibility measure with some zero-density points."""
    rng = rng_for(seed, "null-atoms", n)
    dens = [rng.randrange(1, 65) / 64.0 for _ in range(n)]
    pts = list(range(n))
    rng.shuffle(pts)
    for i in pts[:min(null_count, n - 1)]:
        dens[i] = 0.0
    return MonotoneMeasure.possibility(FiniteSpace(n), dens)


def signed_vector(rng: random.Random, n: int, span: float = 4.0, grid: int = 8) -> list[float]:
    return [rng.randrange(-int(span * grid), int(span * grid) + 1) / grid for _ in range(n)]
