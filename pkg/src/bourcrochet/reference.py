"""Published stitch tables, embedded so validation runs offline."""

# small Enneper models (m=2) stopped at the first intersection, W = 0.5 cm; stitches N per round l = 1..len
SMALL_COLUMNS = {
    0.4: (5, 11, 18, 25, 34, 43, 53, 63, 74, 85, 96, 107, 119, 131, 143, 155, 167, 180),
    0.45: (6, 12, 20, 29, 39, 49, 61, 73, 85, 97, 110, 123, 136, 150, 164, 178, 192),
    0.5: (6, 14, 23, 33, 44, 56, 69, 82, 96, 110, 124, 139, 154, 169, 184, 200),
}
# printed totals; these differ from the column sums (1509, 1524, 1503)
SMALL_TOTALS = {0.4: 1512, 0.45: 1525, 0.5: 1504}
SMALL_WIDTH = 0.5
SMALL_FINISHED_WIDTH_CM = 13.0

# large intersecting model, H = 0.45 cm, W = 0.5 cm
LARGE_GAUGE = (0.45, 0.5)
LARGE_LEAD = (6, 14, 24, 35, 46, 59, 72, 86, 100)
LARGE_LEAD_DELTA = (None, 8, 10, 11, 11, 13, 13, 14, 14)
# per quarter: round, n_inner, move_in, inc_inner, n_outer, inc_outer
LARGE_SCHEDULE = (
    (10, 2, 2, 0, 26, 3),
    (11, 7, 4, 1, 25, 3),
    (12, 10, 2, 1, 26, 3),
    (13, 12, 1, 1, 27, 2),
    (14, 15, 1, 2, 28, 2),
    (15, 17, 1, 1, 29, 2),
    (16, 20, 1, 2, 31, 3),
    (17, 22, 1, 1, 32, 2),
    (18, 25, 1, 2, 33, 2),
    (19, 27, 1, 1, 35, 3),
    (20, 30, 1, 2, 36, 2),
    (21, 32, 1, 1, 37, 2),
    (22, 34, 0, 2, 39, 2),
    (23, 37, 1, 2, 40, 2),
    (24, 39, 0, 2, 42, 2),
    (25, 42, 1, 2, 43, 2),
    (26, 44, 0, 2, 44, 1),
)
LARGE_TOTAL = 4394
LARGE_FINAL_SECTION = 44
LARGE_FINISHED_WIDTH_CM = 20.0
