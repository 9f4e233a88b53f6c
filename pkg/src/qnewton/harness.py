"""Batch experiment runner: cartesian method x start grids with persisted traces.

An experiment is declared as data (JSON or ExperimentSpec), expanded into
method x initial-point runs on a small worker pool, and reduced to one
ResultRow per run — the same columns the published comparison tables use
(iterations / f / grad norm / time / outcome).  Every run's full trace is
written next to the summary so any row can be replayed in detail.
"""

import hashlib
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

from .errors import InvalidInputError
from .fixtures import (ABBBA_STARTS, GRIEWANK15_X0, ROSENBROCK2_X0,
                       ROSENBROCK30_X0, STOCHASTIC_GRIEWANK_DIM,
                       STOCHASTIC_GRIEWANK_SEED, STOCHASTIC_GRIEWANK_X0,
                       STYBLINSKI100_X0)
from .objectives import make_benchmark, make_stochastic_griewank
from .optimizers import METHODS, DeltaSchedule, StopCriteria, run

_MAX_WORKERS = 4

_SCHED_KEYS = ("deltas", "alpha", "h_mode", "selection", "random_interval")
_STOP_KEYS = ("max_iter", "grad_tol", "step_tol", "f_divergence_cap")


def results_root():
    """Default directory for experiment outputs (QNEWTON_RESULTS overrides)."""
    return Path(os.environ.get("QNEWTON_RESULTS", "results"))


@dataclass(frozen=True)
class MethodConfig:
    method: str
    sched: DeltaSchedule = field(default_factory=DeltaSchedule)
    stop: StopCriteria | None = None    # per-method override, else spec stop

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidInputError(
                f"unknown method {self.method!r}; have {sorted(METHODS)}")


@dataclass(frozen=True)
class ExperimentSpec:
    name: str
    objective: str                       # catalog name or stochastic-griewank
    params: dict = field(default_factory=dict)
    initial_points: tuple = ()           # tuple of float tuples
    methods: tuple = ()                  # tuple of MethodConfig
    stop: StopCriteria = field(default_factory=StopCriteria)
    seed: int | None = None
    out_dir: str | None = None           # default: results_root()/name

    def __post_init__(self):
        if not self.methods:
            raise InvalidInputError("experiment needs at least one method")
        if not self.initial_points:
            raise InvalidInputError(
                "experiment needs at least one initial point")

    @staticmethod
    def from_json(text):
        """Build a spec from a JSON document (see README for the schema)."""
        doc = json.loads(text)
        return build_spec(
            name=doc.get("name", doc["objective"]),
            objective=doc["objective"],
            params=doc.get("params", {}),
            initial_points=doc.get("initial_points"),
            methods=doc.get("methods", ["nqn"]),
            stop=doc.get("stop", {}),
            seed=doc.get("seed"),
            out_dir=doc.get("out_dir"),
        )

    def to_json(self):
        def method_doc(mc):
            d = {"method": mc.method,
                 "deltas": list(mc.sched.deltas),
                 "alpha": mc.sched.alpha,
                 "selection": mc.sched.selection}
            if isinstance(mc.sched.h_mode, str):
                d["h_mode"] = mc.sched.h_mode
            if mc.stop is not None:
                d.update({k: getattr(mc.stop, k) for k in _STOP_KEYS})
            return d

        return json.dumps({
            "name": self.name,
            "objective": self.objective,
            "params": self.params,
            "initial_points": [list(p) for p in self.initial_points],
            "methods": [method_doc(m) for m in self.methods],
            "stop": {k: getattr(self.stop, k) for k in _STOP_KEYS},
            "seed": self.seed,
            "out_dir": self.out_dir,
        }, indent=2)


def _resolve_objective(spec):
    params = dict(spec.params)
    if spec.objective == "stochastic-griewank":
        return make_stochastic_griewank(
            dim=int(params.get("dim", STOCHASTIC_GRIEWANK_DIM)),
            batch_size=int(params.get("batch_size", 500)),
            sigma=float(params.get("sigma", np.sqrt(0.1))),
            seed=int(params.get("seed",
                                spec.seed if spec.seed is not None
                                else STOCHASTIC_GRIEWANK_SEED)))
    dim = params.pop("dim", None)
    return make_benchmark(spec.objective, dim=dim, params=params)


def build_spec(name, objective, params=None, initial_points=None,
               methods=("nqn",), stop=None, seed=None, out_dir=None):
    """Assemble an ExperimentSpec from loosely typed pieces.

    ``initial_points`` is either an iterable of points or a dict
    {count, box: [lo, hi], seed} drawn uniformly; ``methods`` entries are
    method-id strings or dicts with schedule/stop overrides; ``stop`` is a
    StopCriteria or a dict of its fields.
    """
    params = dict(params or {})
    if isinstance(stop, dict):
        stop = StopCriteria(**{k: stop[k] for k in _STOP_KEYS if k in stop})
    stop = stop or StopCriteria()

    probe = _resolve_objective(ExperimentSpec(
        name=name, objective=objective, params=params,
        initial_points=((0.0,),), methods=(MethodConfig("nqn"),)))
    dim = probe.dim

    if initial_points is None:
        raise InvalidInputError("initial_points is required")
    if isinstance(initial_points, dict):
        rng = np.random.default_rng(initial_points.get("seed", seed))
        lo, hi = initial_points.get("box", (-2.0, 2.0))
        count = int(initial_points.get("count", 1))
        pts = rng.uniform(lo, hi, size=(count, dim))
    else:
        pts = np.atleast_2d(np.asarray(list(initial_points), dtype=float))
    if pts.shape[1] != dim:
        raise InvalidInputError(
            f"initial points have dim {pts.shape[1]}, objective has {dim}")

    configs = []
    for entry in methods:
        if isinstance(entry, str):
            configs.append(MethodConfig(entry))
            continue
        entry = dict(entry)
        mid = entry.pop("method")
        sched_kwargs = {k: entry.pop(k) for k in _SCHED_KEYS if k in entry}
        if "deltas" in sched_kwargs:
            sched_kwargs["deltas"] = tuple(sched_kwargs["deltas"])
        stop_kwargs = {k: entry.pop(k) for k in _STOP_KEYS if k in entry}
        if entry:
            raise InvalidInputError(f"unknown method keys {sorted(entry)}")
        configs.append(MethodConfig(
            mid, sched=DeltaSchedule(**sched_kwargs),
            stop=replace(stop, **stop_kwargs) if stop_kwargs else None))

    return ExperimentSpec(
        name=name, objective=objective, params=params,
        initial_points=tuple(tuple(float(v) for v in p) for p in pts),
        methods=tuple(configs), stop=stop, seed=seed, out_dir=out_dir)


@dataclass(frozen=True)
class ResultRow:
    method: str
    objective: str
    x0: str                  # short content digest of the start vector
    iterations: int
    final_f: float
    final_grad_norm: float
    wall_seconds: float
    termination: str


def x0_digest(x0):
    data = np.ascontiguousarray(np.asarray(x0, dtype=float)).tobytes()
    return hashlib.sha1(data).hexdigest()[:10]


def _one_run(spec, obj, cfg, x0, job_index, out_path):
    digest = x0_digest(x0)
    seed = None if spec.seed is None else spec.seed + job_index
    t0 = time.perf_counter()
    try:
        trace = run(cfg.method, obj, np.asarray(x0), sched=cfg.sched,
                    stop=cfg.stop or spec.stop, seed=seed)
        wall = time.perf_counter() - t0
        trace.to_csv(out_path / f"{cfg.method}-{digest}.csv")
        return ResultRow(cfg.method, spec.objective, digest,
                         trace.iterations, trace.final_f,
                         trace.final_grad_norm, wall, trace.termination)
    except Exception as exc:  # a failed run is a row, never a batch abort
        wall = time.perf_counter() - t0
        return ResultRow(cfg.method, spec.objective, digest, 0,
                         float("nan"), float("nan"), wall, f"error: {exc}")


def run_experiment(spec):
    """Execute the full method x initial-point grid; rows in spec order."""
    obj = _resolve_objective(spec)
    out_path = Path(spec.out_dir) if spec.out_dir else results_root() / spec.name
    out_path.mkdir(parents=True, exist_ok=True)
    (out_path / "experiment.json").write_text(spec.to_json())

    jobs = [(cfg, x0) for cfg in spec.methods for x0 in spec.initial_points]
    with ThreadPoolExecutor(max_workers=_MAX_WORKERS) as pool:
        futures = [pool.submit(_one_run, spec, obj, cfg, x0, i, out_path)
                   for i, (cfg, x0) in enumerate(jobs)]
        rows = [f.result() for f in futures]

    report = emit_report(rows, "csv")
    (out_path / "rows.csv").write_text(report)
    return rows


_COLUMNS = ("method", "objective", "x0", "iterations", "final_f",
            "final_grad_norm", "wall_seconds", "termination")


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def emit_report(rows, format="csv"):
    """Render ResultRows as CSV or a markdown table (6 significant digits)."""
    cells = [[_fmt(getattr(r, c)) for c in _COLUMNS] for r in rows]
    if format == "csv":
        lines = [",".join(_COLUMNS)]
        lines += [",".join(f'"{c}"' if "," in c else c for c in row)
                  for row in cells]
        return "\n".join(lines) + "\n"
    if format in ("markdown", "markdown-table"):
        widths = [max(len(col), *(len(row[i]) for row in cells), 1)
                  if cells else len(col)
                  for i, col in enumerate(_COLUMNS)]
        def line(vals):
            return "| " + " | ".join(v.ljust(w)
                                     for v, w in zip(vals, widths)) + " |"
        out = [line(_COLUMNS),
               "|" + "|".join("-" * (w + 2) for w in widths) + "|"]
        out += [line(row) for row in cells]
        return "\n".join(out) + "\n"
    raise InvalidInputError(f"unknown report format {format!r}")


# --------------------------------------------------------------------------
# named reproduction suites
# --------------------------------------------------------------------------

_ALL_METHODS = ("nqn", "nqn-backtracking", "newton", "random-damping-newton",
                "backtracking-gd")


def _suite_rosenbrock2():
    return build_spec("rosenbrock2", "rosenbrock", {"dim": 2},
                      [ROSENBROCK2_X0], _ALL_METHODS,
                      stop={"max_iter": 1000}, seed=1)


def _suite_rosenbrock30():
    return build_spec("rosenbrock30", "rosenbrock", {"dim": 30},
                      [ROSENBROCK30_X0], _ALL_METHODS,
                      stop={"max_iter": 200}, seed=1)


def _suite_styblinski100():
    return build_spec("styblinski100", "styblinski-tang", {"dim": 100},
                      [STYBLINSKI100_X0],
                      ("nqn", "newton", "backtracking-gd"),
                      stop={"max_iter": 50}, seed=1)


def _suite_griewank15():
    return build_spec("griewank15", "griewank", {"dim": 15},
                      [GRIEWANK15_X0], _ALL_METHODS,
                      stop={"max_iter": 100}, seed=1)


def _suite_protein_abbba():
    return build_spec("protein-abbba", "protein",
                      {"sequence": "ABBBA"}, list(ABBBA_STARTS), ("nqn",),
                      stop={"max_iter": 5000}, seed=1)


def _suite_stochastic_griewank():
    return build_spec("stochastic-griewank", "stochastic-griewank",
                      {"dim": STOCHASTIC_GRIEWANK_DIM, "batch_size": 500,
                       "sigma": float(np.sqrt(0.1)),
                       "seed": STOCHASTIC_GRIEWANK_SEED},
                      [STOCHASTIC_GRIEWANK_X0], ("nqn",),
                      stop={"max_iter": 50}, seed=STOCHASTIC_GRIEWANK_SEED)


SUITES = {
    "rosenbrock2": _suite_rosenbrock2,
    "rosenbrock30": _suite_rosenbrock30,
    "styblinski100": _suite_styblinski100,
    "griewank15": _suite_griewank15,
    "protein-abbba": _suite_protein_abbba,
    "stochastic-griewank": _suite_stochastic_griewank,
}


def suite_spec(name):
    key = str(name).strip().lower()
    if key not in SUITES:
        raise InvalidInputError(
            f"unknown suite {name!r}; have {sorted(SUITES)}")
    return SUITES[key]()
