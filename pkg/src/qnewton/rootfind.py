"""Root finding for univariate meromorphic functions via minimization.

A complex function g becomes the real objective f(x, y) = |g(x+iy)|^2.  The
Cauchy-Riemann identities collapse f's gradient and Hessian to three complex
quantities (conj(g)*g', |g'|^2, conj(g)*g''), so exact derivatives come for
free once g' and g'' are supplied.  Minimizing f with the shifted-reflected
Newton update walks to f = 0 — a root of g — and the terminal point is then
classified: roots of f=|g|^2 keep f=0, while other critical points are
saddles of f whenever g*g'' is nonzero there, which is what lets the method
escape them.
"""

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidInputError
from .objectives.base import Objective
from .optimizers import DeltaSchedule, StopCriteria, Trace, run

ROOT_TOL = 1e-8
POLE_GUARD = 1e50


@dataclass(frozen=True)
class MeroFunction:
    """g with its first two complex derivatives and a near-pole threshold."""

    g: object
    g1: object
    g2: object
    pole_guard: float = POLE_GUARD
    name: str = ""

    def eval_all(self, z):
        return complex(self.g(z)), complex(self.g1(z)), complex(self.g2(z))


@dataclass
class RootResult:
    z: complex
    f_value: float
    classification: str        # root-of-g | saddle-of-f | degenerate | diverged
    trace: Trace

    def to_json(self):
        return json.dumps({
            "z": [self.z.real, self.z.imag],
            "f": self.f_value,
            "classification": self.classification,
            "iterations": self.trace.iterations,
            "termination": self.trace.termination,
        }, indent=2)


def _check_pole(m, z, val):
    if not (cmath.isfinite(val) and abs(val) < m.pole_guard):
        raise DomainError(f"near a pole of g at z={z}",
                          point=np.array([z.real, z.imag]))


def mero_objective(m):
    """The dim-2 Objective f(x, y) = |g(x+iy)|^2 with exact derivatives.

    With w = conj(g)*g': grad f = (2 Re w, -2 Im w).  With s = |g'|^2 and
    t = conj(g)*g'': Hess f = [[2(s + Re t), -2 Im t], [-2 Im t, 2(s - Re t)]].
    Both follow from u_y = -v_x, v_y = u_x applied to f = u^2 + v^2.
    """

    def value(x):
        z = complex(x[0], x[1])
        gv = complex(m.g(z))
        _check_pole(m, z, gv)
        return float(gv.real ** 2 + gv.imag ** 2)

    def grad(x):
        z = complex(x[0], x[1])
        gv = complex(m.g(z))
        _check_pole(m, z, gv)
        w = gv.conjugate() * complex(m.g1(z))
        return np.array([2.0 * w.real, -2.0 * w.imag])

    def hess(x):
        z = complex(x[0], x[1])
        gv = complex(m.g(z))
        _check_pole(m, z, gv)
        g1 = complex(m.g1(z))
        s = g1.real ** 2 + g1.imag ** 2
        t = gv.conjugate() * complex(m.g2(z))
        return np.array([[2.0 * (s + t.real), -2.0 * t.imag],
                         [-2.0 * t.imag, 2.0 * (s - t.real)]])

    return Objective(2, value, grad, hess,
                     name=m.name or "mero-squared-modulus", smooth=True)


def classify_critical_point(m, z, tol=ROOT_TOL):
    """Label a (near-)critical point of f = |g|^2.

    |g| <= tol: a root of g.  Otherwise a zero of g' with g*g'' != 0 is a
    saddle of f (the Hessian there has determinant -|g*g''|^2 < 0); anything
    else is reported degenerate rather than guessed.
    """
    z = complex(z)
    gv, g1, g2 = m.eval_all(z)
    if abs(gv) <= tol:
        return "root-of-g"
    if abs(g1) <= tol and abs(gv * g2) > tol:
        return "saddle-of-f"
    return "degenerate"


def find_root(m, z0, method="nqn", sched=None, stop=None, seed=None,
              root_tol=ROOT_TOL):
    """Minimize |g|^2 from z0 with the chosen method and classify the end."""
    z0 = complex(z0)
    obj = mero_objective(m)
    trace = run(method, obj, np.array([z0.real, z0.imag]),
                sched=sched, stop=stop, seed=seed)
    zf = complex(trace.final_x[0], trace.final_x[1])
    if trace.termination == "diverged":
        classification = "diverged"
    else:
        classification = classify_critical_point(m, zf, root_tol)
    return RootResult(z=zf, f_value=trace.final_f,
                      classification=classification, trace=trace)


# --------------------------------------------------------------------------
# evaluators
# --------------------------------------------------------------------------

def poly_mero(coeffs, name=""):
    """Polynomial from coefficients, highest degree first (Horner triple)."""
    coeffs = [complex(c) for c in coeffs]
    if not coeffs:
        raise InvalidInputError("empty coefficient list")

    def triple(z):
        b = 0j  # value
        d = 0j  # first derivative
        e = 0j  # half the second derivative
        for c in coeffs:
            e = e * z + d
            d = d * z + b
            b = b * z + c
        return b, d, 2.0 * e

    return MeroFunction(g=lambda z: triple(z)[0],
                        g1=lambda z: triple(z)[1],
                        g2=lambda z: triple(z)[2],
                        name=name or "poly")


def poly_from_roots(root_mults, name=""):
    """Polynomial in factored form: product of (z - r)^k pairs.

    Evaluating factor-by-factor (Leibniz for the derivative triple) stays
    accurate near a high-multiplicity root, where the expanded-coefficient
    form loses everything to cancellation.
    """
    root_mults = [(complex(r), int(k)) for r, k in root_mults]

    def triple(z):
        v, d1, d2 = 1.0 + 0j, 0j, 0j
        for r, k in root_mults:
            w = z - r
            u = w ** k
            u1 = k * w ** (k - 1)
            u2 = k * (k - 1) * w ** (k - 2) if k > 1 else 0j
            v, d1, d2 = (v * u,
                         v * u1 + d1 * u,
                         v * u2 + 2.0 * d1 * u1 + d2 * u)
        return v, d1, d2

    return MeroFunction(g=lambda z: triple(z)[0],
                        g1=lambda z: triple(z)[1],
                        g2=lambda z: triple(z)[2],
                        name=name or "poly-factored")


def zeta_partial(n_terms, name=""):
    """Partial sum of the zeta series: g(z) = sum_{n=1}^{N} n^(-z)."""
    if n_terms < 1:
        raise InvalidInputError("need at least one term")
    lns = np.log(np.arange(1, n_terms + 1, dtype=float))

    def g(z):
        return complex(np.sum(np.exp(-lns * z)))

    def g1(z):
        return complex(np.sum(-lns * np.exp(-lns * z)))

    def g2(z):
        return complex(np.sum(lns * lns * np.exp(-lns * z)))

    return MeroFunction(g=g, g1=g1, g2=g2,
                        name=name or f"zeta-partial-{n_terms}")


def _exp_poly(coeffs):
    """p(z) = sum_k coeffs[k] * exp(-k z) with derivative triple."""
    ks = np.arange(len(coeffs), dtype=float)
    cs = np.asarray(coeffs, dtype=float)

    def triple(z):
        e = np.exp(-ks * z)
        return (complex(np.sum(cs * e)),
                complex(np.sum(-ks * cs * e)),
                complex(np.sum(ks * ks * cs * e)))

    return triple


def exp_rational_derivative(p_coeffs, q_coeffs, name=""):
    """g = (p/q)' for polynomials p, q in exp(-z), with g' and g'' baked.

    With N = p'q - pq':  g = N/q^2,  g' = (N'q - 2Nq')/q^3  and, setting
    M = N'q - 2Nq',  g'' = (M'q - 3Mq')/q^4 where M' = N''q - N'q' - 2Nq''.
    N' = p''q - pq'' and N'' = p'''q + p''q' - p'q'' - pq''' close the set,
    so four derivatives of p and q suffice.
    """
    kp = np.arange(len(p_coeffs), dtype=float)
    cp = np.asarray(p_coeffs, dtype=float)
    kq = np.arange(len(q_coeffs), dtype=float)
    cq = np.asarray(q_coeffs, dtype=float)

    def derivs(ks, cs, z, upto):
        e = np.exp(-ks * z)
        return [complex(np.sum(((-ks) ** j) * cs * e)) for j in range(upto + 1)]

    def triple(z):
        p0, p1, p2, p3 = derivs(kp, cp, z, 3)
        q0, q1, q2, q3 = derivs(kq, cq, z, 3)
        if q0 == 0:
            raise ZeroDivisionError(f"q(z) = 0 at z={z}")
        N = p1 * q0 - p0 * q1
        N1 = p2 * q0 - p0 * q2
        N2 = p3 * q0 + p2 * q1 - p1 * q2 - p0 * q3
        M = N1 * q0 - 2.0 * N * q1
        M1 = N2 * q0 - N1 * q1 - 2.0 * N * q2
        return (N / q0 ** 2,
                M / q0 ** 3,
                (M1 * q0 - 3.0 * M * q1) / q0 ** 4)

    return MeroFunction(g=lambda z: triple(z)[0],
                        g1=lambda z: triple(z)[1],
                        g2=lambda z: triple(z)[2],
                        name=name or "exp-rational-derivative")


# The printed z^18 in the degree-8 slot of this coefficient list is a typo:
# the exponents otherwise descend 16..0, so the term is taken as z^8.
G1_COEFFS = (1250162561, 385455882, 845947696, 240775148, 247926664,
             64249356, 41018752, 9490840, 4178260, 837860, 267232, 44184,
             10416, 1288, 242, 16, 2)

G3_P = (1.0, -1.005, 0.525, -0.475, -0.045)
G3_Q = (0.0, 2.27, -2.19, 1.86, -0.38)

G4_ROOTS = ((0.0, 1), (1.0, 2), (2.0, 3), (5.0, 5))


def builtin(name):
    """The named test functions g1..g6."""
    key = str(name).strip().lower()
    if key == "g1":
        return poly_mero(G1_COEFFS, name="g1")
    if key == "g2":
        return poly_mero((1.0, 0.0, 1.0), name="g2")
    if key == "g3":
        return exp_rational_derivative(G3_P, G3_Q, name="g3")
    if key == "g4":
        # factored evaluation: expanded coefficients lose ~1e-13 of relative
        # accuracy near the multiplicity-5 root at z=5
        return poly_from_roots(G4_ROOTS, name="g4")
    if key == "g5":
        return zeta_partial(101, name="g5")
    if key == "g6":
        return zeta_partial(1001, name="g6")
    raise InvalidInputError(f"unknown builtin {name!r} (have g1..g6)")


def parse_poly_coeffs(text):
    """Comma-separated coefficients, highest degree first; `a+bi` allowed."""
    out = []
    for tok in str(text).split(","):
        tok = tok.strip().replace(" ", "")
        if not tok:
            raise InvalidInputError("empty coefficient")
        try:
            out.append(complex(tok.replace("i", "j")))
        except ValueError as exc:
            raise InvalidInputError(f"bad coefficient {tok!r}") from exc
    return out
