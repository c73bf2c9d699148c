"""Binary operators on a value scale, their algebraic-law checkers, the
increasing rescaling maps, and decreasing duality maps.

Operators carry *declared* flags (nondecreasing, annihilators, neutral
element, continuity).  A declaration is only trusted after
:func:`check_operator_property` verifies it on the scale's standard grid;
theorem verifiers call :func:`verify_flags` so that an operator with a
false declaration can never support a vacuous confirmation.

Continuity flags are verified along decreasing dyadic sequences only, so a
passing continuity check is sampled evidence, not a proof; every verdict
records its mode.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import INF, ValueScale, UNIT, vinv, vmul, xmul
from .results import CheckResult, DomainError, HypothesisError

OPERATOR_FLAGS = (
    "nondecreasing",
    "right_continuous",
    "left_continuous_second",
    "zero_left_annihilator",
    "zero_right_annihilator",
    "neutral_one",
    "commutative",
)


@dataclass(frozen=True, eq=False)
class BinaryOp:
    """An evaluable binary operator with declared algebraic flags.

    ``fn`` is the scalar evaluation; ``grid_fn`` (optional) must accept
    numpy arrays and is used by grid sweeps.  ``_verified`` caches flag
    verification per scale.
    """

    name: str
    fn: Callable[[float, float], float]
    flags: frozenset
    grid_fn: Callable | None = None
    params: dict = field(default_factory=dict)
    _verified: dict = field(default_factory=dict, repr=False)

    def grid(self, a, b):
        if self.grid_fn is not None:
            return np.asarray(self.grid_fn(a, b), dtype=float)
        ufn = np.frompyfunc(self.fn, 2, 1)
        return np.asarray(ufn(a, b), dtype=float)

    def describe(self) -> dict:
        out = {"name": self.name}
        if self.params:
            out.update(self.params)
        return out


def op_eval(op: BinaryOp, a: float, b: float, scale: ValueScale | None = None) -> float:
    """Evaluate an operator on two scalars, optionally checking membership."""
    if scale is not None:
        for v in (a, b):
            if not scale.contains(v):
                raise DomainError(f"argument {v!r} outside the scale {scale.describe()}")
    return float(op.fn(float(a), float(b)))


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

_CONTINUOUS = frozenset({"nondecreasing", "right_continuous", "left_continuous_second"})


def minimum() -> BinaryOp:
    return BinaryOp(
        "min",
        lambda a, b: a if a <= b else b,
        _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator",
                       "neutral_one", "commutative"},
        grid_fn=np.minimum,
    )


def join() -> BinaryOp:
    return BinaryOp(
        "max",
        lambda a, b: a if a >= b else b,
        _CONTINUOUS | {"commutative"},
        grid_fn=np.maximum,
    )


def product() -> BinaryOp:
    return BinaryOp(
        "product",
        xmul,
        _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator",
                       "neutral_one", "commutative"},
        grid_fn=vmul,
    )


def lukasiewicz() -> BinaryOp:
    """The Lukasiewicz t-norm (a + b - 1)_+ on the unit scale."""
    return BinaryOp(
        "lukasiewicz",
        lambda a, b: max(a + b - 1.0, 0.0),
        _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator",
                       "neutral_one", "commutative"},
        grid_fn=lambda a, b: np.maximum(np.asarray(a) + np.asarray(b) - 1.0, 0.0),
    )


def bounded_sum() -> BinaryOp:
    """(a + b) clipped at 1; the standard nilpotent join on the unit scale."""
    return BinaryOp(
        "bounded_sum",
        lambda a, b: min(a + b, 1.0),
        _CONTINUOUS | {"commutative"},
        grid_fn=lambda a, b: np.minimum(np.asarray(a) + np.asarray(b), 1.0),
    )


def plain_sum() -> BinaryOp:
    return BinaryOp(
        "sum",
        lambda a, b: a + b,
        _CONTINUOUS | {"commutative"},
        grid_fn=lambda a, b: np.asarray(a, dtype=float) + np.asarray(b, dtype=float),
    )


def prob_sum() -> BinaryOp:
    """a + b - ab on the unit scale."""
    return BinaryOp(
        "prob_sum",
        lambda a, b: a + b - a * b,
        _CONTINUOUS | {"commutative"},
        grid_fn=lambda a, b: np.asarray(a) + np.asarray(b) - np.asarray(a) * np.asarray(b),
    )


def marshall_olkin(alpha: float, beta: float) -> BinaryOp:
    """The two-parameter family min(x^(1-alpha) y, x y^(1-beta)).

    Reduces to the product at alpha = beta = 0 and to min at alpha = beta = 1.
    """
    if not (0.0 <= alpha <= 1.0 and 0.0 <= beta <= 1.0):
        raise DomainError("marshall_olkin parameters must lie in [0, 1]")
    flags = _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator", "neutral_one"}
    if alpha == beta:
        flags = flags | {"commutative"}
    return BinaryOp(
        f"marshall_olkin({alpha},{beta})",
        lambda a, b: min(a ** (1.0 - alpha) * b, a * b ** (1.0 - beta)),
        flags,
        grid_fn=lambda a, b: np.minimum(
            np.power(a, 1.0 - alpha) * np.asarray(b, dtype=float),
            np.asarray(a, dtype=float) * np.power(b, 1.0 - beta),
        ),
        params={"alpha": alpha, "beta": beta},
    )


def power_product(q: float) -> BinaryOp:
    """(ab)^q; for 0 < q < 1 a modified product with subadditive sections."""
    if q <= 0:
        raise DomainError("power_product exponent must be positive")
    flags = _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator", "commutative"}
    if q == 1.0:
        flags = flags | {"neutral_one"}
    return BinaryOp(
        f"power_product({q})",
        lambda a, b: xmul(a, b) ** q,
        flags,
        grid_fn=lambda a, b: np.power(vmul(a, b), q),
        params={"q": q},
    )


def power_min(p: float, u: float = 1.0) -> BinaryOp:
    """min(a^p, b^u); the min-type metric combiner family."""
    if p <= 0 or u <= 0:
        raise DomainError("exponents must be positive")
    return BinaryOp(
        f"power_min({p},{u})",
        lambda a, b: min(a ** p, b ** u),
        _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator"},
        grid_fn=lambda a, b: np.minimum(np.power(a, p), np.power(b, u)),
        params={"p": p, "u": u},
    )


def power_prod(p: float, u: float = 1.0) -> BinaryOp:
    """a^p * b^u; the product-type metric combiner family."""
    if p <= 0 or u <= 0:
        raise DomainError("exponents must be positive")
    return BinaryOp(
        f"power_prod({p},{u})",
        lambda a, b: xmul(a ** p, b ** u),
        _CONTINUOUS | {"zero_left_annihilator", "zero_right_annihilator"},
        grid_fn=lambda a, b: vmul(np.power(a, p), np.power(b, u)),
        params={"p": p, "u": u},
    )


def from_callable(name: str, fn: Callable, flags=(), grid_fn=None, params=None) -> BinaryOp:
    return BinaryOp(name, fn, frozenset(flags), grid_fn=grid_fn, params=params or {})


OPERATOR_FACTORIES: dict[str, Callable[..., BinaryOp]] = {
    "min": minimum,
    "max": join,
    "product": product,
    "lukasiewicz": lukasiewicz,
    "bounded_sum": bounded_sum,
    "sum": plain_sum,
    "prob_sum": prob_sum,
    "marshall_olkin": marshall_olkin,
    "power_product": power_product,
    "power_min": power_min,
    "power_prod": power_prod,
}


# ---------------------------------------------------------------------------
# increasing rescalings and decreasing duality maps
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class PhiMap:
    """An increasing bijection of the scale onto itself (array-safe)."""

    name: str
    forward: Callable
    inverse: Callable
    params: dict = field(default_factory=dict)

    def validate_on(self, scale: ValueScale, tol: float = 1e-12) -> None:
        g = scale.grid()
        fwd = np.asarray(self.forward(g), dtype=float)
        back = np.asarray(self.inverse(fwd), dtype=float)
        finite = np.isfinite(g)
        err = np.abs(back[finite] - g[finite])
        rel = err / np.maximum(1.0, np.abs(g[finite]))
        if rel.size and rel.max() > tol:
            raise DomainError(f"{self.name}: inverse(forward) drifts by {rel.max():.3e}")
        if (np.isinf(g) != np.isinf(fwd)).any() or (np.isinf(g) != np.isinf(back)).any():
            raise DomainError(f"{self.name}: must fix the infinite endpoint")
        d = np.diff(fwd[finite])
        if d.size and d.min() <= 0:
            raise DomainError(f"{self.name}: forward map is not strictly increasing")
        if abs(float(self.forward(0.0))) > tol:
            raise DomainError(f"{self.name}: must map 0 to 0")

    def describe(self) -> dict:
        out = {"name": self.name}
        out.update(self.params)
        return out


def phi_identity() -> PhiMap:
    return PhiMap("identity", lambda x: np.asarray(x, dtype=float),
                  lambda x: np.asarray(x, dtype=float))


def phi_power(p: float) -> PhiMap:
    if p <= 0:
        raise DomainError("power map exponent must be positive")
    return PhiMap(
        f"power({p})",
        lambda x: np.power(np.asarray(x, dtype=float), p),
        lambda x: np.power(np.asarray(x, dtype=float), 1.0 / p),
        params={"p": p},
    )


PHI_FACTORIES = {"identity": phi_identity, "power": phi_power}


@dataclass(frozen=True, eq=False)
class DualityMap:
    """A decreasing bijection h of a closed scale with h(0) > 0 and h(m) = 0."""

    name: str
    forward: Callable
    inverse: Callable

    def validate_on(self, scale: ValueScale, tol: float = 1e-12) -> None:
        if not scale.closed:
            raise DomainError("duality maps need a closed scale")
        g = scale.grid()
        fwd = np.asarray(self.forward(g), dtype=float)
        back = np.asarray(self.inverse(fwd), dtype=float)
        # decreasing, endpoint exchange, and round trip
        order = np.argsort(g)
        fo = fwd[order]
        finite_pairs = np.isfinite(fo[:-1]) & np.isfinite(fo[1:])
        if (np.diff(fo)[finite_pairs] >= 0).any():
            raise DomainError(f"{self.name}: must be strictly decreasing")
        if float(self.forward(0.0)) <= 0:
            raise DomainError(f"{self.name}: h(0) must be positive")
        if float(self.forward(scale.upper)) != 0.0:
            raise DomainError(f"{self.name}: h(upper) must be 0")
        both = np.isfinite(g) & np.isfinite(back)
        err = np.abs(back[both] - g[both]) / np.maximum(1.0, np.abs(g[both]))
        if err.size and err.max() > tol:
            raise DomainError(f"{self.name}: inverse round trip drifts by {err.max():.3e}")

    def describe(self) -> dict:
        return {"name": self.name}


def one_minus() -> DualityMap:
    fn = lambda x: 1.0 - np.asarray(x, dtype=float)
    return DualityMap("one_minus", fn, fn)


def reciprocal() -> DualityMap:
    return DualityMap("reciprocal", vinv, vinv)


DUALITY_FACTORIES = {"one_minus": one_minus, "reciprocal": reciprocal}


def op_dual(op: BinaryOp, h: DualityMap) -> BinaryOp:
    """The conjugate operator a, b -> h_inverse(h(a) op h(b)).

    Monotonicity survives conjugation by a decreasing bijection; cheap exact
    flags (annihilators, neutral element, commutativity) are probed on a
    coarse grid and declared only when they hold there.  Applying an
    involutive h twice yields an operator grid-equal to the original.
    """

    def fn(a: float, b: float) -> float:
        return float(h.inverse(op.fn(float(h.forward(a)), float(h.forward(b)))))

    def grid_fn(a, b):
        return np.asarray(h.inverse(op.grid(h.forward(a), h.forward(b))), dtype=float)

    flags = {"nondecreasing"} if "nondecreasing" in op.flags else set()
    probe = np.array([0.0, 0.25, 0.5, 0.75, 1.0])
    vals = grid_fn(probe[:, None], probe[None, :])
    if np.allclose(vals[0, :], 0.0, atol=1e-12):
        flags.add("zero_left_annihilator")
    if np.allclose(vals[:, 0], 0.0, atol=1e-12):
        flags.add("zero_right_annihilator")
    if np.allclose(vals[4, :], probe, atol=1e-12) and np.allclose(vals[:, 4], probe, atol=1e-12):
        flags.add("neutral_one")
    if np.allclose(vals, vals.T, atol=1e-12, equal_nan=True):
        flags.add("commutative")
    return BinaryOp(f"{op.name}_dual_{h.name}", fn, frozenset(flags), grid_fn=grid_fn,
                    params={"base": op.name, "h": h.name})


# ---------------------------------------------------------------------------
# flag verification
# ---------------------------------------------------------------------------

def check_operator_property(op: BinaryOp, flag: str, scale: ValueScale = UNIT,
                            tol: float = 1e-12) -> CheckResult:
    """Verify one algebraic flag on the scale's standard grid.

    Monotonicity and the exact pointwise laws are checked on the full grid;
    the two continuity flags are probed along decreasing dyadic sequences
    and reported with mode ``"sampled"``.
    """
    if flag not in OPERATOR_FLAGS:
        raise DomainError(f"unknown operator flag {flag!r}")
    g = scale.grid()

    if flag == "nondecreasing":
        vals = op.grid(g[:, None], g[None, :])
        for axis in (0, 1):
            with np.errstate(invalid="ignore"):
                d = np.diff(vals, axis=axis)
            d = np.where(np.isnan(d), 0.0, d)  # inf to inf steps
            if (d < -tol).any():
                i, j = np.argwhere(d < -tol)[0]
                a1, b1 = (g[i], g[j]) if axis == 0 else (g[i], g[j])
                wi = {"axis": int(axis), "a": float(g[i]), "b": float(g[j]),
                      "step_to": float(g[i + 1]) if axis == 0 else float(g[j + 1]),
                      "drop": float(-d[i, j])}
                return CheckResult(False, float(-d[d < -tol].max()), wi, mode="grid")
        return CheckResult(True, mode="grid")

    if flag in ("right_continuous", "left_continuous_second"):
        coarse = g[np.isfinite(g)]
        coarse = coarse[:: max(1, len(coarse) // 9)]
        worst = 0.0
        for a in coarse:
            for b in coarse:
                if flag == "right_continuous":
                    if not (scale.contains(a + 2.0 ** -8) and scale.contains(b + 2.0 ** -8)):
                        continue
                    base = op.fn(a, b)
                    seq = [op.fn(a + 2.0 ** -k, b + 2.0 ** -k) for k in range(8, 27, 6)]
                else:
                    if b < 2.0 ** -8:
                        continue
                    base = op.fn(a, b)
                    seq = [op.fn(a, b - 2.0 ** -k) for k in range(8, 27, 6)]
                last = seq[-1]
                if math.isinf(base) and math.isinf(last):
                    continue
                gap = abs(last - base)
                lim = max(1e-7, 1e-7 * abs(base))
                if gap > lim:
                    return CheckResult(False, gap,
                                       {"a": float(a), "b": float(b), "limit": float(last),
                                        "value": float(base)},
                                       mode="sampled")
                worst = max(worst, gap)
        return CheckResult(True, margin=worst, mode="sampled")

    if flag in ("zero_left_annihilator", "zero_right_annihilator"):
        vals = op.grid(np.zeros_like(g), g) if flag == "zero_left_annihilator" \
            else op.grid(g, np.zeros_like(g))
        bad = np.abs(vals) > tol
        if bad.any():
            j = int(np.argmax(np.abs(vals)))
            return CheckResult(False, float(np.abs(vals).max()),
                               {"other": float(g[j]), "value": float(vals[j])}, mode="grid")
        return CheckResult(True, mode="grid")

    if flag == "neutral_one":
        if not scale.contains(1.0):
            raise DomainError("neutral_one needs 1 in the scale")
        left = op.grid(np.ones_like(g), g)
        right = op.grid(g, np.ones_like(g))
        for side, vals in (("left", left), ("right", right)):
            diff = np.abs(vals - g)
            diff = np.where(np.isnan(diff), 0.0, diff)
            if (diff > tol).any():
                j = int(np.argmax(diff))
                return CheckResult(False, float(diff.max()),
                                   {"side": side, "y": float(g[j]), "value": float(vals[j])},
                                   mode="grid")
        return CheckResult(True, mode="grid")

    # commutative
    vals = op.grid(g[:, None], g[None, :])
    diff = np.abs(vals - vals.T)
    diff = np.where(np.isnan(diff), 0.0, diff)
    if (diff > tol).any():
        i, j = np.argwhere(diff > tol)[0]
        return CheckResult(False, float(diff.max()),
                           {"a": float(g[i]), "b": float(g[j]),
                            "ab": float(vals[i, j]), "ba": float(vals[j, i])}, mode="grid")
    return CheckResult(True, mode="grid")


def verify_flags(op: BinaryOp, required, scale: ValueScale = UNIT) -> None:
    """Admission gate: every required flag must be declared and must pass.

    Results are cached per (flag, scale).  Raises :class:`HypothesisError`
    on a missing declaration or a failed check.
    """
    for flag in required:
        if flag not in op.flags:
            raise HypothesisError(f"operator {op.name!r} does not declare {flag!r}")
        key = (flag, scale.upper, scale.closed)
        res = op._verified.get(key)
        if res is None:
            res = check_operator_property(op, flag, scale)
            op._verified[key] = res
        if not res.holds:
            raise HypothesisError(
                f"operator {op.name!r} fails declared flag {flag!r} on {scale.describe()}",
                detail=res,
            )


def check_top_absorbing(op: BinaryOp, scale: ValueScale, tol: float = 1e-12) -> CheckResult:
    """Grid check of m op y = y op m = m at the scale's top element."""
    if not scale.closed:
        raise DomainError("top absorption needs a closed scale")
    m = scale.upper
    g = scale.grid()
    left = op.grid(np.full_like(g, m), g)
    right = op.grid(g, np.full_like(g, m))
    for side, vals in (("left", left), ("right", right)):
        if math.isinf(m):
            bad = ~np.isinf(vals)
        else:
            bad = np.abs(vals - m) > tol
        if bad.any():
            j = int(np.argmax(bad))
            return CheckResult(False, INF if math.isinf(m) else float(np.abs(vals - m).max()),
                               {"side": side, "y": float(g[j]), "value": float(vals[j])},
                               mode="grid")
    return CheckResult(True, mode="grid")
