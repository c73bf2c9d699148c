"""Named operator-level inequality conditions, checked on grids or on
explicitly supplied value tuples.

Each condition is the scalar inequality that is equivalent to (or sufficient
for) one of the integral inequalities in :mod:`nonadd.theorems`.  A check
sweeps the scale's standard grid (spacing 1/64 for up to three free
variables, 1/16 when four variables are free) or evaluates exactly the
supplied values; witnesses are the lexicographically first violating tuple,
margins the extreme slack/violation over the sweep.

Registry ids:

====================== =========================================================
mh_upper               three-map condition for the upper-integral inequality
mh_sugeno              its min-based specialization with rescaling maps
mh_product_power       product-operator power-map family (params p1, p2, p3)
counterexample_premise the premise satisfied by the refuting counterexample
semicopula_sum_split   S(a+b, c) <= S(a, c) + S(b, c)
sum_split              (a+b) o c <= (a o c) + (b o c)
distributive_scaling   x o (y+z) <= x o y + x o z and (ax) o y <= a^q (x o y)^r
mh_lower               four-variable condition for the lower-integral inequality
mh_lower_join          its join-based specialization
dual_star_split        (a * b) o_h c <= (a o_h c) * (b o_h c)
dual_star_split_pair   (a * b) o_h (c [+] d) <= (a o_h c) * (b o_h d)
unit_section_order     1 o x <= y < 1 implies x <= y
====================== =========================================================
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .core import INF, ValueScale, UNIT
from .operators import BinaryOp, PhiMap
from .results import CheckResult, DomainError

_DEFAULT_SPACING = 1.0 / 64.0
_PAIR_SPACING = 1.0 / 16.0


class _Acc:
    """Accumulates violations/slacks across chunked grid sweeps."""

    def __init__(self, tol: float):
        self.tol = tol
        self.min_slack = INF
        self.max_viol = 0.0
        self.witness: dict | None = None

    def add(self, lhs, rhs, coords: dict, valid=None):
        lhs = np.asarray(lhs, dtype=float)
        rhs = np.asarray(rhs, dtype=float)
        lhs, rhs = np.broadcast_arrays(lhs, rhs)
        ok = np.ones(lhs.shape, dtype=bool) if valid is None else np.broadcast_to(valid, lhs.shape)
        with np.errstate(invalid="ignore"):
            viol = ok & (lhs > rhs + self.tol)
            slack = rhs - lhs
        finite = ok & np.isfinite(slack)
        if finite.any():
            self.min_slack = min(self.min_slack, float(slack[finite].min()))
        if viol.any():
            gap = np.where(viol & np.isfinite(slack), -slack, 0.0)
            local_max = float(gap.max()) if np.isfinite(slack[viol]).any() else INF
            self.max_viol = max(self.max_viol, local_max)
            if self.witness is None:
                idx = tuple(np.argwhere(viol)[0])
                wit = {}
                for name, arr in coords.items():
                    a = np.broadcast_to(np.asarray(arr, dtype=float), lhs.shape)
                    wit[name] = float(a[idx])
                wit["lhs"] = float(lhs[idx])
                wit["rhs"] = float(rhs[idx])
                self.witness = wit

    def result(self, mode: str) -> CheckResult:
        if self.witness is None:
            return CheckResult(True, margin=self.min_slack, mode=mode)
        return CheckResult(False, margin=self.max_viol, witness=self.witness, mode=mode)


def _as_values(scale: ValueScale, values, spacing: float) -> np.ndarray:
    if values is None:
        return scale.grid(spacing)
    arr = np.asarray([float(v) for v in values], dtype=float)
    for v in arr:
        if not scale.contains(float(v)):
            raise DomainError(f"supplied value {v!r} outside {scale.describe()}")
    return np.unique(arr)


def _in_scale(scale: ValueScale, arr) -> np.ndarray:
    arr = np.asarray(arr, dtype=float)
    return arr <= scale.upper if scale.closed else arr < scale.upper


def _mode(*value_lists) -> str:
    return "explicit" if any(v is not None for v in value_lists) else "grid"


# ---------------------------------------------------------------------------
# individual conditions
# ---------------------------------------------------------------------------

def cond_mh_upper(star: BinaryOp, combiner: BinaryOp,
                  circs: Sequence[BinaryOp], phis: Sequence[PhiMap],
                  scale: ValueScale = UNIT, c_values=None,
                  a_values=None, b_values=None,
                  tol: float = 1e-12, spacing: float = _DEFAULT_SPACING) -> CheckResult:
    c1, c2, c3 = circs
    p1, p2, p3 = phis
    a = _as_values(scale, a_values, spacing)
    b = _as_values(scale, b_values, spacing)
    cs = _as_values(scale, c_values, spacing)
    A, B = a[:, None], b[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    f1 = p1.forward(sAB)
    f2A = p2.forward(A)
    f3B = p3.forward(B)
    acc = _Acc(tol)
    for c in cs:
        lhs = p1.inverse(c1.grid(f1, np.full_like(f1, c)))
        rhs = combiner.grid(p2.inverse(c2.grid(f2A, np.full_like(f2A, c))),
                            p3.inverse(c3.grid(f3B, np.full_like(f3B, c))))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result(_mode(c_values, a_values, b_values))


def cond_mh_sugeno(star: BinaryOp, phis: Sequence[PhiMap],
                   scale: ValueScale = UNIT, c_values=None,
                   tol: float = 1e-12, spacing: float = _DEFAULT_SPACING) -> CheckResult:
    p1, p2, p3 = phis
    g = scale.grid(spacing)
    cs = _as_values(scale, c_values, spacing)
    A, B = g[:, None], g[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    acc = _Acc(tol)
    for c in cs:
        lhs = np.minimum(sAB, float(p1.inverse(c)))
        rhs = star.grid(np.minimum(A, float(p2.inverse(c))),
                        np.minimum(B, float(p3.inverse(c))))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result(_mode(c_values))


def cond_mh_product_power(p1: float, p2: float, p3: float, c_values=None,
                          tol: float = 1e-12,
                          spacing: float = _DEFAULT_SPACING) -> CheckResult:
    """Power-map family on the unit scale; holds iff p1 <= p2 and p1 <= p3."""
    for p in (p1, p2, p3):
        if p <= 0:
            raise DomainError("exponents must be positive")
    g = UNIT.grid(spacing)
    cs = _as_values(UNIT, c_values, spacing)
    A, B = g[:, None], g[None, :]
    acc = _Acc(tol)
    for c in cs:
        w1, w2, w3 = c ** (1.0 / p1), c ** (1.0 / p2), c ** (1.0 / p3)
        expr = A * (w2 - w1) + B * (w3 - w1) + A * B * (w1 - w2 * w3)
        acc.add(-expr, np.zeros_like(expr), {"a": A, "b": B, "c": c})
    return acc.result(_mode(c_values))


def cond_counterexample_premise(semicopula: BinaryOp, star: BinaryOp,
                                tol: float = 1e-12,
                                spacing: float = _DEFAULT_SPACING) -> CheckResult:
    S = semicopula
    g = UNIT.grid(spacing)
    A, B = g[:, None], g[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(UNIT, sAB)
    acc = _Acc(tol)
    for c in g:
        cc = np.full_like(sAB, c)
        lhs = S.grid(sAB, cc)
        rhs = np.minimum(star.grid(S.grid(A, np.full_like(A, c)), B),
                         star.grid(A, S.grid(B, np.full_like(B, c))))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result("grid")


def cond_semicopula_sum_split(semicopula: BinaryOp, tol: float = 1e-12,
                              spacing: float = _DEFAULT_SPACING) -> CheckResult:
    S = semicopula
    g = UNIT.grid(spacing)
    A, B = g[:, None], g[None, :]
    valid = A + B <= 1.0 + 1e-15
    acc = _Acc(tol)
    for c in g:
        cc = np.full_like(A + B, c)
        lhs = S.grid(np.minimum(A + B, 1.0), cc)
        rhs = S.grid(A, np.full_like(A, c)) + S.grid(B, np.full_like(B, c))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result("grid")


def cond_sum_split(op: BinaryOp, scale: ValueScale = UNIT, c_values=None,
                   tol: float = 1e-12, spacing: float = _DEFAULT_SPACING) -> CheckResult:
    g = scale.grid(spacing)
    cs = _as_values(scale, c_values, spacing)
    A, B = g[:, None], g[None, :]
    s = A + B
    valid = _in_scale(scale, s)
    acc = _Acc(tol)
    for c in cs:
        lhs = op.grid(np.where(valid, s, 0.0), np.full_like(s, c))
        rhs = op.grid(A, np.full_like(A, c)) + op.grid(B, np.full_like(B, c))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result(_mode(c_values))


def cond_distributive_scaling(op: BinaryOp, q: float, r: float,
                              scale: ValueScale = UNIT, tol: float = 1e-12,
                              spacing: float = _DEFAULT_SPACING) -> CheckResult:
    """Subadditive second sections plus the power-scaling bound."""
    if q <= 0 or r <= 0:
        raise DomainError("scaling exponents must be positive")
    g = scale.grid(spacing)
    X, Y = g[:, None], g[None, :]
    opXY = op.grid(X, Y)
    acc = _Acc(tol)
    for z in g:
        s = Y + z
        valid = _in_scale(scale, s)
        lhs = op.grid(X, np.where(valid, s, 0.0))
        rhs = opXY + op.grid(X, np.full_like(X, z))
        acc.add(lhs, rhs, {"x": X, "y": Y, "z": z}, valid)
    for a in (1.5, 2.0, 4.0, 16.0, 256.0):
        s = a * X
        valid = _in_scale(scale, s)
        lhs = op.grid(np.where(valid, s, 0.0), Y)
        with np.errstate(invalid="ignore"):
            rhs = (a ** q) * np.power(opXY, r)
        acc.add(lhs, rhs, {"scale_factor": np.full_like(X, a), "x": X, "y": Y}, valid)
    return acc.result("grid")


def cond_mh_lower(star: BinaryOp, combiner: BinaryOp, boxplus: BinaryOp,
                  circs: Sequence[BinaryOp], phis: Sequence[PhiMap],
                  scale: ValueScale = UNIT, cd_values=None,
                  a_values=None, b_values=None,
                  tol: float = 1e-12, spacing: float = _PAIR_SPACING) -> CheckResult:
    c1, c2, c3 = circs
    p1, p2, p3 = phis
    a = _as_values(scale, a_values, spacing)
    b = _as_values(scale, b_values, spacing)
    if cd_values is None:
        cg = scale.grid(spacing)
        cd_pairs = [(float(c), float(d)) for c in cg for d in cg]
    else:
        cd_pairs = [(float(c), float(d)) for c, d in cd_values]
    A, B = a[:, None], b[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    f1 = p1.forward(sAB)
    f2A = p2.forward(A)
    f3B = p3.forward(B)
    acc = _Acc(tol)
    for c, d in cd_pairs:
        combined = float(boxplus.fn(c, d))
        lhs = p1.inverse(c1.grid(f1, np.full_like(f1, combined)))
        rhs = combiner.grid(p2.inverse(c2.grid(f2A, np.full_like(f2A, c))),
                            p3.inverse(c3.grid(f3B, np.full_like(f3B, d))))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c, "d": d}, valid)
    return acc.result(_mode(cd_values, a_values, b_values))


def cond_mh_lower_join(star: BinaryOp, phis: Sequence[PhiMap],
                       scale: ValueScale = UNIT, cd_values=None,
                       tol: float = 1e-12, spacing: float = _PAIR_SPACING) -> CheckResult:
    p1, p2, p3 = phis
    g = scale.grid(spacing)
    if cd_values is None:
        cd_pairs = [(float(c), float(d)) for c in g for d in g]
    else:
        cd_pairs = [(float(c), float(d)) for c, d in cd_values]
    A, B = g[:, None], g[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    acc = _Acc(tol)
    for c, d in cd_pairs:
        lhs = np.maximum(sAB, max(float(p1.inverse(c)), float(p1.inverse(d))))
        rhs = star.grid(np.maximum(A, float(p2.inverse(c))),
                        np.maximum(B, float(p3.inverse(d))))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c, "d": d}, valid)
    return acc.result(_mode(cd_values))


def cond_dual_star_split(star: BinaryOp, op_h: BinaryOp,
                         scale: ValueScale = UNIT, c_values=None,
                         tol: float = 1e-12, spacing: float = _DEFAULT_SPACING) -> CheckResult:
    g = scale.grid(spacing)
    cs = _as_values(scale, c_values, spacing)
    A, B = g[:, None], g[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    acc = _Acc(tol)
    for c in cs:
        cc = np.full_like(sAB, c)
        lhs = op_h.grid(sAB, cc)
        rhs = star.grid(op_h.grid(A, np.full_like(A, c)), op_h.grid(B, np.full_like(B, c)))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c}, valid)
    return acc.result(_mode(c_values))


def cond_dual_star_split_pair(star: BinaryOp, op_h: BinaryOp, boxplus: BinaryOp,
                              scale: ValueScale = UNIT, cd_values=None,
                              tol: float = 1e-12, spacing: float = _PAIR_SPACING) -> CheckResult:
    g = scale.grid(spacing)
    if cd_values is None:
        cd_pairs = [(float(c), float(d)) for c in g for d in g]
    else:
        cd_pairs = [(float(c), float(d)) for c, d in cd_values]
    A, B = g[:, None], g[None, :]
    sAB = star.grid(A, B)
    valid = _in_scale(scale, sAB)
    acc = _Acc(tol)
    for c, d in cd_pairs:
        combined = float(boxplus.fn(c, d))
        lhs = op_h.grid(sAB, np.full_like(sAB, combined))
        rhs = star.grid(op_h.grid(A, np.full_like(A, c)), op_h.grid(B, np.full_like(B, d)))
        acc.add(lhs, rhs, {"a": A, "b": B, "c": c, "d": d}, valid)
    return acc.result(_mode(cd_values))


def cond_unit_section_order(op: BinaryOp, scale: ValueScale = UNIT,
                            tol: float = 1e-12,
                            spacing: float = _DEFAULT_SPACING) -> CheckResult:
    """1 o x <= y for y in (0, 1) must force x <= y."""
    if not scale.contains(1.0):
        raise DomainError("unit section condition needs 1 in the scale")
    xg = scale.grid(spacing)
    yg = UNIT.grid(spacing)
    yg = yg[(yg > 0.0) & (yg < 1.0)]
    X, Y = xg[:, None], yg[None, :]
    sect = op.grid(np.ones_like(X), X)
    premise = np.broadcast_to(sect, (len(xg), len(yg))) <= Y + tol
    acc = _Acc(tol)
    lhs = np.where(premise, X * np.ones_like(Y), 0.0)
    rhs = np.where(premise, Y * np.ones_like(X), INF)
    acc.add(lhs, rhs, {"x": X, "y": Y, "unit_section": sect * np.ones_like(Y)}, premise)
    return acc.result("grid")


CONDITIONS = {
    "mh_upper": cond_mh_upper,
    "mh_sugeno": cond_mh_sugeno,
    "mh_product_power": cond_mh_product_power,
    "counterexample_premise": cond_counterexample_premise,
    "semicopula_sum_split": cond_semicopula_sum_split,
    "sum_split": cond_sum_split,
    "distributive_scaling": cond_distributive_scaling,
    "mh_lower": cond_mh_lower,
    "mh_lower_join": cond_mh_lower_join,
    "dual_star_split": cond_dual_star_split,
    "dual_star_split_pair": cond_dual_star_split_pair,
    "unit_section_order": cond_unit_section_order,
}


def check_condition(cond: str, **kwargs) -> CheckResult:
    """Dispatch a named condition check.  Unknown names raise DomainError."""
    try:
        fn = CONDITIONS[cond]
    except KeyError:
        raise DomainError(f"unknown condition {cond!r}; known: {sorted(CONDITIONS)}") from None
    return fn(**kwargs)
