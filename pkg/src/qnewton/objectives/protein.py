"""Planar bead-chain energy with two monomer species.

A chain of n beads is parametrized by its n-2 interior bend angles
theta_2 … theta_{n-1}.  The energy couples a bending term with a
Lennard-Jones-style pair term over all non-adjacent bead pairs, with a pair
coupling that depends on the two species (A = +1, B = -1):

    E(theta) = sum_i (1 - cos theta_i) / 4
             + sum_{j >= i+2} 4 * (r_ij^-12 - C(xi_i, xi_j) * r_ij^-6)

    C(a, b)  = (1 + a + b + 5ab) / 8     -> AA: 1, BB: 0.5, AB/BA: -0.5

The pair separations accumulate unit steps whose headings are the running
partial sums of the intervening bend angles:

    r_ij^2 = [ sum_{k=i+1}^{j-1} cos(theta_{i+1} + … + theta_k) ]^2
           + [ sum_{k=i+1}^{j-1} sin(theta_{i+1} + … + theta_k) ]^2

so the closest pairs (j = i+2) always sit at distance 1 and only the bend
term moves them; this is what pins the three-bead energies (AAA relaxes to
0, BAB to 2).
"""

import numpy as np

from ..errors import DomainError, InvalidInputError
from .base import Objective

_MIN_SEPARATION = 1e-12

SPECIES = {"A": 1.0, "B": -1.0}


def parse_sequence(seq):
    """Translate a string like 'ABBBA' into +1/-1 species values."""
    seq = str(seq).strip().upper()
    if len(seq) < 3:
        raise InvalidInputError("sequence needs at least 3 beads")
    try:
        return np.array([SPECIES[c] for c in seq])
    except KeyError as exc:
        raise InvalidInputError(f"sequence may only contain A/B, got {seq!r}") \
            from exc


def pair_coupling(a, b):
    """Species-dependent attraction strength C(a, b) = (1 + a + b + 5ab)/8."""
    return (1.0 + a + b + 5.0 * a * b) / 8.0


def protein_energy(theta, xi):
    """Total chain energy for bend angles theta and species vector xi.

    ``theta[k]`` is the bend at interior bead k+2 (1-based); ``xi`` holds one
    +1/-1 entry per bead.
    """
    theta = np.asarray(theta, dtype=float)
    xi = np.asarray(xi, dtype=float)
    n = xi.size
    if theta.size != n - 2:
        raise InvalidInputError(
            f"expected {n - 2} bend angles for {n} beads, got {theta.size}")
    total = float(np.sum(1.0 - np.cos(theta))) / 4.0

    # For bead i (1-based), the heading after k intervening angles is the
    # prefix sum theta_{i+1} + ... + theta_k; cumulative cos/sin sums give
    # the displacement to every j > i+1 in one sweep.
    for i in range(1, n - 1):
        ang = np.cumsum(theta[i - 1:])
        cs = np.cumsum(np.cos(ang))
        sn = np.cumsum(np.sin(ang))
        r2 = cs * cs + sn * sn            # index m -> pair (i, i+2+m)
        if np.any(r2 < _MIN_SEPARATION ** 2):
            raise DomainError("beads collided (zero separation)", point=theta)
        c = pair_coupling(xi[i - 1], xi[i + 1:])
        r6 = r2 ** 3
        total += float(np.sum(4.0 * (1.0 / (r6 * r6) - c / r6)))
    return total


def protein_objective(sequence):
    """Objective over the n-2 bend angles of the given A/B sequence.

    Derivatives are finite-difference: the pair term's dependence on the
    accumulated angles makes the closed-form Hessian error-prone for no
    practical gain at these sizes.
    """
    xi = parse_sequence(sequence)
    seq = str(sequence).strip().upper()
    dim = xi.size - 2

    def value(theta):
        return protein_energy(theta, xi)

    return Objective(dim, value, name=f"protein:{seq}")
