"""Second-order descent iterations built on spectral reflection.

The central update perturbs the Hessian by one of a fixed list of shifts
delta, scaled by a power of the gradient norm, picks the first shift that
makes the perturbed matrix comfortably invertible, and then steps against
the gradient through the *reflected* inverse (eigenvalues replaced by their
absolute values).  Near a nondegenerate critical point the shift term
vanishes fast enough to preserve Newton's quadratic rate, while the
reflection turns saddles into repellers instead of attractors.

Also here: the backtracking variant (shift floor plus Armijo halving, which
buys monotone function values), classical Newton, randomly damped Newton,
and a two-way backtracking gradient descent, all driven by one loop with a
shared trace format.
"""

import csv
import json
import time
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

import numpy as np

from .errors import (DomainError, InvalidInputError, NoConvergenceError,
                     NoValidDeltaError, SingularMatrixError,
                     StalledLineSearchError)

# Step failures that end a run with a "numerical-error" status instead of
# propagating: everything that floating-point evaluation or the update rule
# can legitimately hit at a bad point.
_STEP_FAILURES = (NoValidDeltaError, SingularMatrixError,
                  StalledLineSearchError, NoConvergenceError, DomainError,
                  OverflowError, ZeroDivisionError, FloatingPointError)
from .objectives.base import Objective
from .objectives.stochastic import StochasticObjective, sample_batch_objective
from .spectral import eigh, reflect_inverse_apply

# A shifted matrix counts as invertible when its smallest eigenvalue
# magnitude clears this fraction of the largest.  Purely relative: scaling
# the objective by a constant cannot change which shift is selected.
EPS_SING_RTOL = 1e-13

# Iterates further out than this are declared divergent.
X_DIVERGENCE_CAP = 1e10

_MAX_HALVINGS = 100
_MAX_RANDOM_DRAWS = 100
_GD_MAX_GROWS = 100
_GD_MAX_SHRINKS = 200


@dataclass(frozen=True)
class DeltaSchedule:
    """The shift candidates and the gradient-norm scaling they multiply.

    h_mode "power" uses h(t) = t^(1+alpha); "capped" uses min(1, t^(1+alpha)),
    which keeps shifts bounded far from critical points.  A callable h_mode
    is used as-is.  selection "sequential" tries ``deltas`` in order;
    "random-per-iteration" draws fresh candidates uniformly from
    ``random_interval`` each iteration.
    """

    deltas: tuple = (0.0, 1.0, -1.0)
    alpha: float = 1.0
    h_mode: object = "capped"
    selection: str = "sequential"
    random_interval: tuple = (-2.0, 2.0)

    def __post_init__(self):
        deltas = tuple(float(d) for d in np.atleast_1d(self.deltas))
        if not deltas:
            raise InvalidInputError("delta schedule needs at least one shift")
        if not np.all(np.isfinite(deltas)):
            raise InvalidInputError("shifts must be finite")
        if len(set(deltas)) != len(deltas):
            raise InvalidInputError(f"shifts must be distinct, got {deltas}")
        object.__setattr__(self, "deltas", deltas)
        if not (self.alpha > 0):
            raise InvalidInputError("alpha must be positive")
        if isinstance(self.h_mode, str) and self.h_mode not in ("power",
                                                                "capped"):
            raise InvalidInputError(
                f"h_mode must be 'power', 'capped' or callable, "
                f"got {self.h_mode!r}")
        if self.selection not in ("sequential", "random-per-iteration"):
            raise InvalidInputError(f"unknown selection {self.selection!r}")
        lo, hi = self.random_interval
        if not lo < hi:
            raise InvalidInputError("random_interval must be increasing")

    @cached_property
    def min_gap(self):
        """Smallest spacing between two shifts (0.0 for a single shift)."""
        ds = sorted(self.deltas)
        if len(ds) < 2:
            return 0.0
        return float(min(b - a for a, b in zip(ds, ds[1:])))

    def h(self, t):
        """The shift scale as a function of the gradient norm."""
        t = float(t)
        if callable(self.h_mode):
            return float(self.h_mode(t))
        v = t ** (1.0 + self.alpha)
        return min(1.0, v) if self.h_mode == "capped" else v


@dataclass(frozen=True)
class StopCriteria:
    max_iter: int = 1000
    grad_tol: float = 1e-10
    step_tol: float = 1e-20
    f_divergence_cap: float = 1e100

    def __post_init__(self):
        if self.max_iter < 1:
            raise InvalidInputError("max_iter must be >= 1")
        if min(self.grad_tol, self.step_tol, self.f_divergence_cap) < 0:
            raise InvalidInputError("tolerances must be nonnegative")


@dataclass
class IterationRecord:
    """State after one update (index 0 is the initial point)."""

    index: int
    x: np.ndarray
    f: float
    grad_norm: float
    delta_used: float | None
    step_norm: float
    ls_backtracks: int
    wall_ns: int


@dataclass
class Trace:
    records: list
    termination: str
    seed: int | None = None

    @property
    def iterations(self):
        return len(self.records) - 1

    @property
    def final_x(self):
        return self.records[-1].x

    @property
    def final_f(self):
        return self.records[-1].f

    @property
    def final_grad_norm(self):
        return self.records[-1].grad_norm

    def to_csv(self, path):
        """Write per-iteration rows plus a JSON sidecar with the outcome."""
        path = Path(path)
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["iter", "f", "grad_norm", "delta", "step_norm",
                        "ls_backtracks", "wall_ns"])
            for r in self.records:
                w.writerow([r.index, repr(r.f), repr(r.grad_norm),
                            "" if r.delta_used is None else repr(r.delta_used),
                            repr(r.step_norm), r.ls_backtracks, r.wall_ns])
        sidecar = {
            "termination": self.termination,
            "iterations": self.iterations,
            "final_x": [float(v) for v in self.final_x],
            "final_f": self.final_f,
            "final_grad_norm": self.final_grad_norm,
            "seed": self.seed,
        }
        path.with_suffix(".json").write_text(json.dumps(sidecar, indent=2))
        return path


def select_delta(hessian, grad_norm, sched=None, rng=None, floor=False):
    """Pick the first acceptable shift; return (delta, A, decomposition).

    The shifted matrix and its spectral decomposition are returned so the
    caller never recomputes them.  With ``floor=True`` the acceptance bar is
    min |eig| >= min_gap/2 * h(grad_norm) (the spacing argument: of any
    m+1 distinct shifts at most m can land an eigenvalue inside the band, so
    some shift always clears it); otherwise it is the relative
    EPS_SING_RTOL test.
    """
    sched = sched or DeltaSchedule()
    H = np.asarray(hessian, dtype=float)
    hval = sched.h(grad_norm)
    eye = np.eye(H.shape[0])

    if sched.selection == "random-per-iteration":
        if rng is None:
            rng = np.random.default_rng()
        lo, hi = sched.random_interval
        candidates = (float(rng.uniform(lo, hi))
                      for _ in range(_MAX_RANDOM_DRAWS))
    else:
        candidates = iter(sched.deltas)

    tried = []
    for delta in candidates:
        A = H + (delta * hval) * eye
        dec = eigh(A)
        mags = np.abs(dec.eigenvalues)
        amin, amax = float(mags.min()), float(mags.max())
        if floor:
            ok = amin > 0.0 and amin >= 0.5 * sched.min_gap * hval
        else:
            ok = amin > EPS_SING_RTOL * amax
        if ok:
            return delta, A, dec
        tried.append(delta)
    raise NoValidDeltaError(
        f"no shift produced an invertible matrix (tried {tried})")


def _grad_and_norm(obj, x):
    g = obj.gradient(x)
    return g, float(np.linalg.norm(g))


def _partial_record(x, f, grad_norm, delta, step_norm, backtracks):
    return IterationRecord(-1, x, f, grad_norm, delta, step_norm,
                           backtracks, 0)


def nqn_step(obj, x, sched=None, rng=None, state=None):
    """One shifted-reflected-Newton update; returns (x_next, record)."""
    sched = sched or DeltaSchedule()
    g, gn = _grad_and_norm(obj, x)
    delta, _, dec = select_delta(obj.hessian(x), gn, sched, rng)
    w = reflect_inverse_apply(dec, g)
    x1 = x - w
    f1 = obj.value(x1)
    _, gn1 = _grad_and_norm(obj, x1)
    return x1, _partial_record(x1, f1, gn1, delta,
                               float(np.linalg.norm(w)), 0)


def nqn_backtracking_step(obj, x, sched=None, rng=None, state=None):
    """Shifted-reflected update with an eigenvalue floor and Armijo halving.

    The floor keeps |A^-1| bounded by 2/(min_gap*h); halving the step until
    f(x - beta*w) <= f(x) - beta/2 * <w, grad f> then guarantees descent.
    """
    sched = sched or DeltaSchedule()
    g, gn = _grad_and_norm(obj, x)
    f0 = obj.value(x)
    delta, _, dec = select_delta(obj.hessian(x), gn, sched, rng, floor=True)
    w = reflect_inverse_apply(dec, g)
    wg = float(w @ g)            # nonnegative by construction
    beta = 1.0
    for halvings in range(_MAX_HALVINGS + 1):
        x1 = x - beta * w
        f1 = obj.value(x1)
        if f1 - f0 <= -0.5 * beta * wg:
            _, gn1 = _grad_and_norm(obj, x1)
            return x1, _partial_record(x1, f1, gn1, delta,
                                       beta * float(np.linalg.norm(w)),
                                       halvings)
        beta *= 0.5
    raise StalledLineSearchError(
        f"no Armijo step after {_MAX_HALVINGS} halvings (f={f0!r})")


def newton_step(obj, x, sched=None, rng=None, state=None):
    """Classical Newton through the same spectral path (signed eigenvalues)."""
    g, gn = _grad_and_norm(obj, x)
    dec = eigh(obj.hessian(x))
    mags = np.abs(dec.eigenvalues)
    if float(mags.min()) <= EPS_SING_RTOL * float(mags.max()):
        raise SingularMatrixError("singular Hessian in Newton update")
    E = dec.eigenvectors
    w = E @ ((E.T @ g) / dec.eigenvalues)
    x1 = x - w
    f1 = obj.value(x1)
    _, gn1 = _grad_and_norm(obj, x1)
    return x1, _partial_record(x1, f1, gn1, None,
                               float(np.linalg.norm(w)), 0)


def random_damping_newton_step(obj, x, sched=None, rng=None, state=None):
    """Newton step scaled by a fresh uniform damping factor in (0, 2)."""
    if rng is None:
        rng = np.random.default_rng()
    g, gn = _grad_and_norm(obj, x)
    dec = eigh(obj.hessian(x))
    mags = np.abs(dec.eigenvalues)
    if float(mags.min()) <= EPS_SING_RTOL * float(mags.max()):
        raise SingularMatrixError("singular Hessian in damped Newton update")
    E = dec.eigenvectors
    damping = float(rng.uniform(0.0, 2.0))
    w = damping * (E @ ((E.T @ g) / dec.eigenvalues))
    x1 = x - w
    f1 = obj.value(x1)
    _, gn1 = _grad_and_norm(obj, x1)
    return x1, _partial_record(x1, f1, gn1, damping,
                               float(np.linalg.norm(w)), 0)


def backtracking_gd_step(obj, x, sched=None, rng=None, state=None):
    """Two-way backtracking gradient descent with an unbounded start.

    The learning rate carries over between iterations; each iteration may
    grow it (divide by 0.7 while the Armijo test keeps passing, up to
    max(1, grad_norm^-1/2)) or shrink it (multiply by 0.7 until the test
    passes).  Armijo test: f(x - lr*g) - f(x) <= -lr/2 * |g|^2.
    """
    state = state if state is not None else {}
    g, gn = _grad_and_norm(obj, x)
    f0 = obj.value(x)
    gg = gn * gn

    def armijo(lr):
        return obj.value(x - lr * g) - f0 <= -0.5 * lr * gg

    cap = max(1.0, gn ** -0.5) if gn > 0 else 1.0
    lr = min(float(state.get("lr", 1.0)), cap)
    backtracks = 0
    if armijo(lr):
        for _ in range(_GD_MAX_GROWS):
            trial = lr / 0.7
            if trial > cap or not armijo(trial):
                break
            lr = trial
    else:
        for backtracks in range(1, _GD_MAX_SHRINKS + 1):
            lr *= 0.7
            if armijo(lr):
                break
        else:
            raise StalledLineSearchError(
                f"no Armijo learning rate after {_GD_MAX_SHRINKS} shrinks")
    state["lr"] = lr
    x1 = x - lr * g
    f1 = obj.value(x1)
    _, gn1 = _grad_and_norm(obj, x1)
    return x1, _partial_record(x1, f1, gn1, lr, lr * gn, backtracks)


METHODS = {
    "nqn": nqn_step,
    "nqn-backtracking": nqn_backtracking_step,
    "newton": newton_step,
    "random-damping-newton": random_damping_newton_step,
    "backtracking-gd": backtracking_gd_step,
}

_USES_DELTAS = ("nqn", "nqn-backtracking")


def _classify(rec, stop):
    """Termination decision for the newest record, or None to continue."""
    bad = not np.isfinite(rec.grad_norm) or np.isnan(rec.f) \
        or np.any(np.isnan(rec.x))
    if bad:
        return "numerical-error: non-finite iterate"
    if rec.f > stop.f_divergence_cap or np.isinf(rec.f) \
            or float(np.linalg.norm(rec.x)) > X_DIVERGENCE_CAP:
        return "diverged"
    if rec.grad_norm <= stop.grad_tol:
        return "converged"
    if rec.index > 0 and rec.step_norm <= stop.step_tol:
        return "converged"
    return None


def run(method, obj, x0, sched=None, stop=None, seed=None):
    """Drive one method from x0 until a stopping rule fires; returns a Trace.

    ``obj`` may be a StochasticObjective, in which case update k works on
    the mini-batch drawn for step index k-1 and each record's f/grad_norm
    are evaluated on the batch the *next* step will see.
    """
    if method not in METHODS:
        raise InvalidInputError(
            f"unknown method {method!r}; have {sorted(METHODS)}")
    step = METHODS[method]
    sched = sched or DeltaSchedule()
    stop = stop or StopCriteria()
    rng = np.random.default_rng(seed)
    state = {}

    stochastic = isinstance(obj, StochasticObjective)
    dim = obj.dim
    x = np.asarray(x0, dtype=float).reshape(-1).copy()
    if x.size != dim:
        raise InvalidInputError(f"x0 has size {x.size}, objective dim {dim}")
    if method in _USES_DELTAS and sched.selection == "sequential" \
            and len(sched.deltas) < dim + 1:
        warnings.warn(
            f"{len(sched.deltas)} shifts for dimension {dim}: the "
            f"always-invertible guarantee needs dim+1 distinct shifts",
            RuntimeWarning, stacklevel=2)

    cur = sample_batch_objective(obj, 0) if stochastic else obj
    try:
        f0 = cur.value(x)
        g0, gn0 = _grad_and_norm(cur, x)
    except _STEP_FAILURES as exc:
        raise InvalidInputError(f"objective undefined at x0: {exc}") from exc
    records = [IterationRecord(0, x.copy(), f0, gn0, None, 0.0, 0, 0)]
    termination = _classify(records[0], stop)

    k = 0
    while termination is None and k < stop.max_iter:
        k += 1
        t0 = time.perf_counter_ns()
        try:
            x, rec = step(cur, x, sched, rng, state)
        except _STEP_FAILURES as exc:
            termination = f"numerical-error: {exc}"
            break
        rec.wall_ns = time.perf_counter_ns() - t0
        rec.index = k
        if stochastic:
            cur = sample_batch_objective(obj, k)
            rec.f = cur.value(rec.x)
            _, rec.grad_norm = _grad_and_norm(cur, rec.x)
        records.append(rec)
        termination = _classify(rec, stop)
    if termination is None:
        termination = "max-iter"
    return Trace(records=records, termination=termination, seed=seed)
