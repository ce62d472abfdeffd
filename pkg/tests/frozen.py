"""Values computed once by ``oracles.py`` (or measured once, where noted)
and pinned as regression targets."""

SQUARES_MOD_13 = (0, 1, 3, 4, 9, 10, 12)
SQRT_3_MOD_13 = 4

AFFINE_COUNTS = {(5, 1, 2): 8, (13, 1, 2): 8, (17, 1, 3): 24, (29, 1, 2): 40, (5, 1, 0): 4}
CLASS_COUNTS = {(13, 2): 16, (17, 2): 16, (29, 3): 24}
NONSUMMABLE_WITNESS = {(13, 2): ((4, 5), (4, 5)), (17, 2): ((3, 5), (3, 5)), (29, 3): ((4, 6), (8, 12))}
DELTA_ZERO_PAIRS_13_1_4 = 64

# measured from the computed certificate: largest total degree of an
# assoc_generic cofactor
ASSOC_GENERIC_DEGREE_BOUND = 14
