"""Pinned initial points for the reproduction experiments.

These exact vectors are the published starting points of the desk-scale
benchmark tables; shipping them verbatim makes the comparison runs
bit-reproducible instead of seed-dependent.
"""

import numpy as np

# Rosenbrock, dimension 30 (f(x0) ~ 7.35e7)
ROSENBROCK30_X0 = np.array([
    0.26010457, -10.91803423, 2.98112261, -15.95313456, -2.78250859,
    -0.77467653, -2.02113182, 9.10887908, -10.45035903, 11.94967756,
    -1.24926898, -2.13950642, 7.20804014, 1.0291962, 0.06391697,
    2.71562242, -11.41484204, 10.59539405, 12.95776531, 11.13258434,
    8.16230421, -17.21206152, -4.0493811, -19.69634293, 14.25263482,
    3.19319406, 11.45059677, 18.89542157, 19.44495031, -3.66913821])

# Styblinski-Tang, dimension 100 (drawn once from the unit box)
STYBLINSKI100_X0 = np.array([
    -0.15359941, -0.59005902, 0.45366905, -0.94873933, 0.52152264,
    -0.02738085, 0.17599868, 0.36736119, 0.30861332, 0.90622707,
    0.10472251, -0.74494753, 0.67337336, -0.21703503, -0.17819413,
    -0.14024491, -0.93297061, 0.63585997, -0.34774991, -0.02915787,
    -0.17318147, -0.04669807, 0.03478713, -0.21959983, 0.54296245,
    0.71978214, -0.50010954, -0.69673303, 0.583932, -0.38138978,
    -0.85625076, 0.20134663, -0.71309977, -0.61278167, 0.86638939,
    0.45731164, -0.32956812, 0.64553452, -0.89968231, 0.79641384,
    0.44785232, 0.38489415, -0.51330669, 0.81273771, -0.54611157,
    -0.87101225, -0.72997209, -0.16185048, 0.38042508, -0.63330049,
    0.71930612, -0.33714448, -0.24835364, -0.78859559, -0.07531072,
    0.19087508, -0.95964552, -0.72759281, 0.13079216, 0.6982817,
    0.54827214, 0.70860856, -0.51314115, -0.54742142, 0.73180924,
    -0.28666226, 0.89588517, 0.35797497, -0.21406766, -0.05558283,
    0.89932563, -0.16479757, -0.29753867, 0.5090385, 0.95156811,
    0.8701501, 0.62499125, -0.22215331, 0.8355082, -0.83695582,
    -0.96214862, -0.22495384, -0.30823426, 0.55635375, 0.38262606,
    -0.60688932, -0.04303575, 0.59260985, 0.5887739, -0.00570958,
    -0.502354, 0.50740011, -0.08916369, 0.62672251, 0.13993309,
    -0.92816931, 0.50047918, 0.856543, 0.99560466, -0.44254687])

# Griewank, dimension 15, deterministic table ("Point 1")
GRIEWANK15_X0 = np.full(15, 10.0)

# Rosenbrock, dimension 2 (appendix start)
ROSENBROCK2_X0 = np.array([0.55134554, 0.75134554])

# Bead-chain ABBBA: the three published starts (bend angles)
ABBBA_SEQUENCE = "ABBBA"
ABBBA_STARTS = (
    np.array([-0.0534927, 1.61912758, 2.9567358]),
    np.array([1.80953527, -1.74233202, 2.45974152]),
    np.array([1.07689387, 2.97081771, 0.800213082]),
)

# Stochastic Griewank cell: dimension 10, start (10,…,10)
STOCHASTIC_GRIEWANK_DIM = 10
STOCHASTIC_GRIEWANK_X0 = np.full(10, 10.0)
STOCHASTIC_GRIEWANK_SEED = 42

# Root-finding starts (complex plane)
ROOT_STARTS = {
    "g1": complex(6.58202917, -7.93929341),
    "g2": complex(4.0963223, -8.0935966),
    "g2-point2": complex(0.317, -0.15),
    "g3": complex(-0.227, 1.115),
    "g4": complex(4.48270522, 3.79095724),
    "g5": complex(-8.5209648, 1.28480016),
    "g6": complex(9.76536427, -4.15647151),
}
