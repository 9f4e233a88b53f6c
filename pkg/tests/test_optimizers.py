"""Step rules, shift selection, the run driver, and trace serialization."""

import csv
import json
import warnings

import numpy as np
import pytest
from numpy.testing import assert_allclose

from qnewton.errors import InvalidInputError, NoValidDeltaError
from qnewton.objectives import Objective, make_benchmark
from qnewton.optimizers import (DeltaSchedule, StopCriteria, backtracking_gd_step,
                                newton_step, nqn_backtracking_step, nqn_step,
                                random_damping_newton_step, run, select_delta)
from qnewton.fixtures import ROSENBROCK2_X0


def quadratic_1d():
    return Objective(1, lambda x: 0.5 * x[0] ** 2,
                     gradient=lambda x: np.array([x[0]]),
                     hessian=lambda x: np.array([[1.0]]),
                     name="half-square", smooth=True)


# ---------------------------------------------------------------------------
# DeltaSchedule / StopCriteria
# ---------------------------------------------------------------------------

def test_schedule_validation():
    with pytest.raises(InvalidInputError):
        DeltaSchedule(deltas=(0.0, 0.0, 1.0))
    with pytest.raises(InvalidInputError):
        DeltaSchedule(deltas=())
    with pytest.raises(InvalidInputError):
        DeltaSchedule(alpha=0.0)
    with pytest.raises(InvalidInputError):
        DeltaSchedule(h_mode="exotic")
    with pytest.raises(InvalidInputError):
        DeltaSchedule(selection="alphabetical")
    with pytest.raises(InvalidInputError):
        DeltaSchedule(selection="random-per-iteration", random_interval=(2, 2))


def test_schedule_min_gap_and_h():
    sched = DeltaSchedule(deltas=(0.0, 1.0, -1.0), alpha=1.0)
    assert sched.min_gap == 1.0
    assert DeltaSchedule(deltas=(0.5,)).min_gap == 0.0
    assert sched.h(2.0) == 1.0                      # capped at 1
    assert sched.h(0.5) == 0.25
    power = DeltaSchedule(h_mode="power")
    assert power.h(2.0) == 4.0
    custom = DeltaSchedule(h_mode=lambda t: 42.0)
    assert custom.h(123.0) == 42.0


def test_stop_criteria_validation():
    with pytest.raises(InvalidInputError):
        StopCriteria(max_iter=0)
    with pytest.raises(InvalidInputError):
        StopCriteria(grad_tol=-1e-3)


# ---------------------------------------------------------------------------
# select_delta
# ---------------------------------------------------------------------------

def test_select_delta_invertible_takes_zero():
    delta, A, dec = select_delta(np.array([[2.0]]), 3.7)
    assert delta == 0.0
    assert_allclose(A, [[2.0]])
    assert_allclose(dec.eigenvalues, [2.0])


def test_select_delta_singular_hand_case():
    sched = DeltaSchedule(h_mode="power", alpha=1.0)
    delta, A, _ = select_delta(np.array([[0.0]]), 2.0, sched)
    assert delta == 1.0
    assert_allclose(A, [[4.0]])
    # capped scaling shifts by min(1, 4) = 1 instead
    delta, A, _ = select_delta(np.array([[0.0]]), 2.0, DeltaSchedule())
    assert delta == 1.0
    assert_allclose(A, [[1.0]])


def test_select_delta_floor_mode_hand_case():
    delta, A, dec = select_delta(np.diag([0.0, 5.0]), 1.0, floor=True)
    assert delta == 1.0
    assert_allclose(sorted(dec.eigenvalues), [1.0, 6.0])


def test_select_delta_exhaustion():
    # eigenvalue spread so wide that no shift clears the relative bar
    with pytest.raises(NoValidDeltaError) as err:
        select_delta(np.diag([0.0, 1e15]), 1.0)
    assert "tried" in str(err.value)


def test_select_delta_random_mode_seeded():
    sched = DeltaSchedule(selection="random-per-iteration")
    rng1 = np.random.default_rng(7)
    rng2 = np.random.default_rng(7)
    d1, _, _ = select_delta(np.array([[0.0]]), 1.0, sched, rng=rng1)
    d2, _, _ = select_delta(np.array([[0.0]]), 1.0, sched, rng=rng2)
    assert d1 == d2 and d1 != 0.0


def test_select_delta_floor_always_succeeds_on_singular_input():
    rng = np.random.default_rng(12)
    deltas = (0.0, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 4.0, -4.0)
    for _ in range(200):
        n = int(rng.integers(1, 9))
        B = rng.uniform(-10, 10, (n, n))
        A = 0.5 * (B + B.T)
        # zero out one eigenvalue to force a genuinely singular matrix
        lam, V = np.linalg.eigh(A)
        lam[int(rng.integers(0, n))] = 0.0
        H = (V * lam) @ V.T
        H = 0.5 * (H + H.T)
        sched = DeltaSchedule(deltas=deltas[:n + 1])
        gn = float(10.0 ** rng.uniform(-6, 2))
        delta, _, dec = select_delta(H, gn, sched, floor=True)
        assert np.min(np.abs(dec.eigenvalues)) \
            >= 0.5 * sched.min_gap * sched.h(gn)


# ---------------------------------------------------------------------------
# single steps
# ---------------------------------------------------------------------------

def test_nqn_step_quadratic_exact():
    x1, rec = nqn_step(quadratic_1d(), np.array([1.0]))
    assert x1[0] == 0.0
    assert rec.delta_used == 0.0


def test_nqn_step_saddle_escape():
    obj = make_benchmark("saddle")
    x1, rec = nqn_step(obj, np.array([0.3, 0.7]))
    assert_allclose(x1, [0.0, 1.4], atol=0)
    assert rec.delta_used == 0.0


def test_nqn_backtracking_quadratic_full_step():
    x1, rec = nqn_backtracking_step(quadratic_1d(), np.array([1.0]))
    assert x1[0] == 0.0
    assert rec.ls_backtracks == 0


def test_newton_step_quadratic():
    obj = make_benchmark("ex12")  # x^2 + y^2 + 4xy, critical point at 0
    x1, _ = newton_step(obj, np.array([1.3, -0.4]))
    assert_allclose(x1, [0.0, 0.0], atol=1e-12)


def test_newton_cycles_on_quartic():
    trace = run("newton", make_benchmark("ex10"), np.array([0.0]),
                stop=StopCriteria(max_iter=6))
    xs = [float(r.x[0]) for r in trace.records]
    assert xs == [0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0]
    assert trace.termination == "max-iter"


def test_random_damping_equals_newton_when_forced():
    class Unit:
        def uniform(self, lo, hi):
            return 1.0

    obj = make_benchmark("rosenbrock", 2)
    x = np.array([0.3, -0.2])
    x_newton, _ = newton_step(obj, x)
    x_damped, rec = random_damping_newton_step(obj, x, rng=Unit())
    assert np.array_equal(x_newton, x_damped)
    assert rec.delta_used == 1.0


def test_random_damping_contracts_to_saddle_along_ray():
    obj = make_benchmark("saddle")
    x0 = np.array([1.0, 0.8])
    trace = run("random-damping-newton", obj, x0, seed=3,
                stop=StopCriteria(max_iter=200))
    assert trace.termination == "converged"
    assert np.linalg.norm(trace.final_x) <= 1e-10
    for rec in trace.records:
        cross = rec.x[0] * x0[1] - rec.x[1] * x0[0]
        assert abs(cross) <= 1e-9 * max(1.0, np.linalg.norm(rec.x))


def test_backtracking_gd_quadratic_unit_step():
    state = {}
    x1, rec = backtracking_gd_step(quadratic_1d(), np.array([1.0]),
                                   state=state)
    assert x1[0] == 0.0
    assert state["lr"] == 1.0
    assert rec.ls_backtracks == 0


def test_backtracking_gd_grows_to_cap_on_shallow_slope():
    obj = Objective(1, lambda x: 0.01 * x[0],
                    gradient=lambda x: np.array([0.01]), name="shallow")
    state = {}
    backtracking_gd_step(obj, np.array([0.0]), state=state)
    cap = 0.01 ** -0.5
    assert 1.0 < state["lr"] <= cap


def test_backtracking_gd_learning_rate_persists():
    obj = make_benchmark("rosenbrock", 2)
    state = {}
    x = np.asarray(ROSENBROCK2_X0, dtype=float)
    backtracking_gd_step(obj, x, state=state)
    first = state["lr"]
    backtracking_gd_step(obj, x, state=state)
    assert state["lr"] != 1.0 or first != 1.0


def test_backtracking_gd_stall_reported():
    obj = Objective(1, lambda x: abs(x[0]),
                    gradient=lambda x: np.array([np.sign(x[0])]),
                    name="kink")
    trace = run("backtracking-gd", obj, np.array([1e-40]),
                stop=StopCriteria(max_iter=5))
    assert trace.termination.startswith("numerical-error")
    assert "shrink" in trace.termination


# ---------------------------------------------------------------------------
# run driver
# ---------------------------------------------------------------------------

def test_zero_gradient_start_is_fixed_point():
    obj = make_benchmark("rosenbrock", 2)
    for method in ("nqn", "nqn-backtracking", "newton",
                   "random-damping-newton", "backtracking-gd"):
        trace = run(method, obj, np.array([1.0, 1.0]), seed=0)
        assert trace.iterations == 0
        assert trace.termination == "converged"
        assert np.array_equal(trace.final_x, [1.0, 1.0])


def test_trace_shape_and_indices():
    trace = run("nqn", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0))
    assert trace.termination == "converged"
    assert trace.iterations == len(trace.records) - 1
    assert [r.index for r in trace.records] == list(range(len(trace.records)))
    assert trace.records[0].delta_used is None
    assert trace.records[0].step_norm == 0.0
    assert trace.final_grad_norm <= 1e-10


def test_step_tol_stop_fires_after_first_update():
    trace = run("nqn", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0),
                stop=StopCriteria(step_tol=1e10))
    assert trace.iterations == 1
    assert trace.termination == "converged"


def test_divergence_cap_on_initial_value():
    trace = run("nqn", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0),
                stop=StopCriteria(f_divergence_cap=1e-5))
    assert trace.iterations == 0
    assert trace.termination == "diverged"


def test_nonsmooth_power_escapes():
    # On |x|^(4/3) the update is x -> -2x, so the iterates double away from
    # the minimum.  With closed-form derivatives that crosses the divergence
    # bar; the catalog entry differentiates by finite differences, whose
    # second-difference noise floor (~|f| eps / h^2) caps the escape around
    # |x| ~ 1e4, where it oscillates until the iteration budget runs out.
    analytic = Objective(
        1, lambda x: abs(x[0]) ** (4.0 / 3.0),
        gradient=lambda x: np.array(
            [(4.0 / 3.0) * np.sign(x[0]) * abs(x[0]) ** (1.0 / 3.0)]),
        hessian=lambda x: np.array(
            [[(4.0 / 9.0) * abs(x[0]) ** (-2.0 / 3.0)]]))
    trace = run("nqn", analytic, np.array([1.0]),
                stop=StopCriteria(max_iter=300))
    assert trace.termination == "diverged"

    trace = run("nqn", make_benchmark("ex01"), np.array([1.0]),
                stop=StopCriteria(max_iter=300))
    assert trace.termination in ("diverged", "max-iter")
    tail = [abs(float(r.x[0])) for r in trace.records[10:]]
    assert min(tail) > 1e3


def test_numerical_error_status_on_shift_exhaustion():
    obj = Objective(2, lambda x: float(x[0]),
                    gradient=lambda x: np.array([1.0, 0.0]),
                    hessian=lambda x: np.diag([0.0, 1e15]), name="spread")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        trace = run("nqn", obj, np.array([0.0, 0.0]))
    assert trace.termination.startswith("numerical-error: no shift")


def test_driver_warns_on_small_delta_set():
    obj = make_benchmark("rosenbrock", 3)
    with pytest.warns(RuntimeWarning, match="dim"):
        run("nqn", obj, np.array([0.9, 0.9, 0.9]),
            stop=StopCriteria(max_iter=2))


def test_no_warning_when_schedule_covers_dimension():
    obj = make_benchmark("rosenbrock", 2)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        run("nqn", obj, np.asarray(ROSENBROCK2_X0))


def test_monotone_descent_backtracking_variant():
    trace = run("nqn-backtracking", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0))
    fs = [r.f for r in trace.records]
    assert all(b <= a for a, b in zip(fs, fs[1:]))
    assert trace.termination == "converged"


def test_bitwise_determinism():
    obj = make_benchmark("rosenbrock", 5)
    x0 = np.array([-1.2, 0.7, 2.0, -0.3, 1.1])
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        t1 = run("nqn", obj, x0, seed=1)
        t2 = run("nqn", obj, x0, seed=1)
        t3 = run("random-damping-newton", obj, x0, seed=9)
        t4 = run("random-damping-newton", obj, x0, seed=9)
    for a, b in ((t1, t2), (t3, t4)):
        assert a.termination == b.termination
        assert [r.f for r in a.records] == [r.f for r in b.records]
        assert all(np.array_equal(ra.x, rb.x)
                   for ra, rb in zip(a.records, b.records))


def test_random_schedule_selection_converges():
    sched = DeltaSchedule(selection="random-per-iteration")
    trace = run("nqn", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0), sched=sched, seed=4)
    assert trace.termination == "converged"
    assert all(r.delta_used is None or r.delta_used != 0.0
               for r in trace.records[1:])


def test_unknown_method_rejected():
    with pytest.raises(InvalidInputError):
        run("sgd", make_benchmark("rosenbrock", 2), np.zeros(2))


def test_dimension_mismatch_rejected():
    with pytest.raises(InvalidInputError):
        run("nqn", make_benchmark("rosenbrock", 2), np.zeros(3))


def test_undefined_start_rejected():
    obj = make_benchmark("protein:AAAA")
    with pytest.raises(InvalidInputError):
        run("nqn", obj, np.array([0.3, np.pi]))


def test_trace_csv_roundtrip(tmp_path):
    trace = run("nqn", make_benchmark("rosenbrock", 2),
                np.asarray(ROSENBROCK2_X0))
    path = trace.to_csv(tmp_path / "trace.csv")
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["iter", "f", "grad_norm", "delta", "step_norm",
                       "ls_backtracks", "wall_ns"]
    assert len(rows) == len(trace.records) + 1
    for row, rec in zip(rows[1:], trace.records):
        assert int(row[0]) == rec.index
        assert float(row[1]) == rec.f          # repr round-trips exactly
        assert float(row[2]) == rec.grad_norm
        assert (row[3] == "") == (rec.delta_used is None)
    sidecar = json.loads((tmp_path / "trace.json").read_text())
    assert sidecar["termination"] == trace.termination
    assert sidecar["final_f"] == trace.final_f
    assert_allclose(sidecar["final_x"], trace.final_x)
