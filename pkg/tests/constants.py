P1 = {"rank": 1, "rays": [[1], [-1]], "maxcones": [[0], [1]]}

P2 = {"rank": 2, "rays": [[-1, -1], [1, 0], [0, 1]], "maxcones": [[1, 2], [0, 1], [0, 2]]}

P1XP1 = {
    "rank": 2,
    "rays": [[1, 0], [-1, 0], [0, 1], [0, -1]],
    "maxcones": [[0, 2], [2, 1], [1, 3], [3, 0]],
}


def hirzebruch(a: int) -> dict:
    """F_a with x0 <-> e1, x1 <-> e2, x2 <-> -e1 + a e2, x3 <-> -e2."""
    return {
        "rank": 2,
        "rays": [[1, 0], [0, 1], [-1, a], [0, -1]],
        "maxcones": [[0, 1], [1, 2], [2, 3], [3, 0]],
    }


# Weighted projective plane P(1,1,2): complete but cone [0, 1] has |det| = 2.
WEIGHTED_P112 = {
    "rank": 2,
    "rays": [[-1, -2], [1, 0], [0, 1]],
    "maxcones": [[1, 2], [0, 1], [0, 2]],
}

# Two cones whose interiors overlap.
OVERLAPPING = {"rank": 2, "rays": [[1, 0], [0, 1], [1, 1], [-1, 0]], "maxcones": [[0, 1], [2, 3]]}

# P^2 with one maximal cone missing.
P2_MISSING_CONE = {"rank": 2, "rays": [[-1, -1], [1, 0], [0, 1]], "maxcones": [[1, 2], [0, 1]]}

# Complete simplicial fan in rank 3 with no strictly convex support function.
NON_PROJECTIVE = {
    "rank": 3,
    "rays": [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
        [-1, -1, -1],
        [2, 1, 1],
        [1, 2, 1],
        [1, 1, 2],
    ],
    "maxcones": [
        [4, 5, 6],
        [0, 1, 5],
        [0, 5, 4],
        [1, 2, 6],
        [1, 6, 5],
        [2, 0, 4],
        [2, 4, 6],
        [0, 1, 3],
        [1, 2, 3],
        [0, 2, 3],
    ],
}

# (x0 + x1) d/dx1 on P^1.
P1_SHIFT_TERMS = [[], [([1, 0], 1), ([0, 1], 1)]]

# x1 d/dx0 - x0 d/dx1 on P^1 over F_3: D^3 = 2 D.
P1_ROTATION_TERMS = [[([0, 1], 1)], [([1, 0], 2)]]

# x0 d/dx1 on P^1: D^p = 0.
P1_NILPOTENT_TERMS = [[], [([1, 0], 1)]]

P2_QUOTIENT_RAYS = [[-1, -2], [1, 0], [0, 1]]
P2_QUOTIENT_DETERMINANTS = [1, 2, 1]
P2_PROFILE_P2 = (1, 2, 4, 6, 9)
P1_SHIFT_PROFILE = (1, 1, 2, 2, 3, 3, 4)
