# Published values used where the algorithm does not apply.

# Pythagoras number P(O) of Q(sqrt(-d)): 2 and 3 for the listed d, 4 otherwise
PYTHAGORAS_TWO = frozenset({1, 2, 3, 7, 11})
PYTHAGORAS_THREE = frozenset({5, 6, 15, 19, 23, 27})

# g_d(1) for the nine class-number-one fields
CLASS_NUMBER_ONE_G = {1: 2, 2: 2, 3: 2, 7: 2, 11: 2, 19: 3, 43: 4, 67: 4, 163: 4}

# Class number 2 or 3: g_d(1) equals P(O) except for these fields
SMALL_CLASS_NUMBER_G_OVERRIDES = {907: 5}

# Class numbers decided by table lookup rather than by the 4-versus-5 algorithm
TABLE_CLASS_NUMBERS = frozenset({1, 2, 3})

G_SOURCE_TABLE = "table"
G_SOURCE_ALGORITHM = "algorithm"
