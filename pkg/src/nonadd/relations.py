"""Decidable relation classes for pairs of functions on a finite space.

``comonotone`` and the level-set relations are exhaustively decidable.
Star-association quantifies over all nonempty subsets, so it is exhaustive
up to 14 points and switches to seeded random subsets beyond that; every
verdict records which mode produced it.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .core import Fn, level_mask_gt, rng_for, subset_infima, expand_masks
from .measures import MonotoneMeasure
from .operators import BinaryOp
from .results import DomainError, RelationVerdict

_STAR_EXHAUSTIVE_CAP = 14


def _pair_domain(f: Fn, g: Fn, domain: int | None) -> int:
    if len(f) != len(g):
        raise DomainError("functions must live on the same space")
    full = (1 << len(f)) - 1
    if domain is None:
        return full
    if not isinstance(domain, int) or not 0 <= domain <= full:
        raise DomainError(f"invalid domain bitmask {domain!r}")
    return domain


def is_comonotone(f: Fn, g: Fn, domain: int | None = None) -> RelationVerdict:
    """No point pair on which f and g move in opposite directions."""
    domain = _pair_domain(f, g, domain)
    pts = [i for i in range(len(f)) if domain >> i & 1]
    fv = np.array([f[i] for i in pts])
    gv = np.array([g[i] for i in pts])
    df = fv[:, None] - fv[None, :]
    dg = gv[:, None] - gv[None, :]
    with np.errstate(invalid="ignore"):
        bad = df * dg < 0
    bad &= ~np.isnan(df * dg)
    if bad.any():
        i, j = np.argwhere(bad)[0]
        return RelationVerdict("comonotone", False,
                               {"point_x": pts[int(i)], "point_y": pts[int(j)],
                                "f": [float(fv[i]), float(fv[j])],
                                "g": [float(gv[i]), float(gv[j])]})
    return RelationVerdict("comonotone", True)


def is_star_associated(f: Fn, g: Fn, star: BinaryOp, domain: int | None = None,
                       *, samples: int = 10_000, seed: int = 0,
                       tol: float = 1e-12) -> RelationVerdict:
    """Subset infima of the pointwise star-combination must factor through
    the star of the two subset infima, for every nonempty subset.
    """
    domain = _pair_domain(f, g, domain)
    pts = [i for i in range(len(f)) if domain >> i & 1]
    if not pts:
        return RelationVerdict("star_associated", True)
    fv = [f[i] for i in pts]
    gv = [g[i] for i in pts]
    sv = [float(star.fn(a, b)) for a, b in zip(fv, gv)]

    if len(pts) <= _STAR_EXHAUSTIVE_CAP:
        inf_f = subset_infima(fv)[1:]
        inf_g = subset_infima(gv)[1:]
        inf_s = subset_infima(sv)[1:]
        combined = star.grid(inf_f, inf_g)
        diff = np.abs(combined - inf_s)
        diff = np.where(np.isnan(diff), 0.0, diff)  # both infinite
        bad = diff > tol
        if bad.any():
            j = int(np.argwhere(bad)[0][0])
            orig = int(expand_masks(pts)[j + 1])
            return RelationVerdict("star_associated", False,
                                   {"subset": orig,
                                    "inf_combined": float(inf_s[j]),
                                    "star_of_infs": float(combined[j])},
                                   mode="exhaustive")
        return RelationVerdict("star_associated", True, mode="exhaustive")

    rng = rng_for(seed, "star_associated", domain)
    k = len(pts)
    for _ in range(samples):
        mask = rng.getrandbits(k)
        if mask == 0:
            mask = 1 + rng.getrandbits(k - 1)
        sel = [i for i in range(k) if mask >> i & 1]
        mf = min(fv[i] for i in sel)
        mg = min(gv[i] for i in sel)
        ms = min(sv[i] for i in sel)
        combined = float(star.fn(mf, mg))
        if not (np.isinf(combined) and np.isinf(ms)) and abs(combined - ms) > tol:
            orig = 0
            for i in sel:
                orig |= 1 << pts[i]
            return RelationVerdict("star_associated", False,
                                   {"subset": orig, "inf_combined": ms,
                                    "star_of_infs": combined},
                                   mode="sampled")
    return RelationVerdict("star_associated", True, mode="sampled")


def _threshold_grid(values: Sequence[float]) -> list[float]:
    return sorted(set([0.0] + [float(v) for v in values]))


def is_mu_subadditive(f: Fn, g: Fn, boxplus: BinaryOp, mu: MonotoneMeasure,
                      domain: int | None = None, tol: float = 1e-12) -> RelationVerdict:
    """Union level-set measure dominated by the boxplus-combination of the
    individual level-set measures, at every threshold pair.

    Level sets only change at realized values, so the realized grid plus 0
    decides the relation exactly.
    """
    domain = _pair_domain(f, g, domain)
    fa = _threshold_grid([f[i] for i in range(len(f)) if domain >> i & 1])
    gb = _threshold_grid([g[i] for i in range(len(g)) if domain >> i & 1])
    for a in fa:
        mask_f = level_mask_gt(f.values, a, domain)
        mu_f = mu(mask_f)
        for b in gb:
            mask_g = level_mask_gt(g.values, b, domain)
            union = mu(mask_f | mask_g)
            bound = float(boxplus.fn(mu_f, mu(mask_g)))
            if union > bound + tol:
                return RelationVerdict("mu_subadditive", False,
                                       {"a": a, "b": b, "mu_union": union,
                                        "bound": bound})
    return RelationVerdict("mu_subadditive", True)


def is_pqd(f: Fn, g: Fn, mu: MonotoneMeasure, tol: float = 1e-12) -> RelationVerdict:
    """Positive quadrant dependence: joint strict level sets dominate the
    product of the marginal ones on the realized threshold grid."""
    if len(f) != len(g):
        raise DomainError("functions must live on the same space")
    domain = (1 << len(f)) - 1
    for t in _threshold_grid(f.values):
        mask_f = level_mask_gt(f.values, t, domain)
        mu_f = mu(mask_f)
        for s in _threshold_grid(g.values):
            mask_g = level_mask_gt(g.values, s, domain)
            joint = mu(mask_f & mask_g)
            prod = mu_f * mu(mask_g)
            if joint < prod - tol:
                return RelationVerdict("pqd", False,
                                       {"t": t, "s": s, "mu_joint": joint,
                                        "mu_product": prod})
    return RelationVerdict("pqd", True)
