"""Published counts and generator matrices used as expected values."""

# (n, ka, kb): (|L_a|, |L_b|, #codes, qsd), keyed by the printed (ka, kb)
TABLE_H23 = {
    (2, 1, 1): (1, 3, 3, True),
    (3, 1, 1): (1, 5, 9, False), (3, 1, 2): (1, 5, 9, False),
    (4, 1, 1): (2, 8, 27, False), (4, 1, 2): (2, 16, 66, False), (4, 1, 3): (2, 8, 27, False),
    (4, 2, 1): (1, 8, 12, False), (4, 2, 2): (1, 16, 30, True), (4, 2, 3): (1, 8, 12, False),
    (5, 1, 1): (2, 11, 54, False), (5, 1, 2): (2, 39, 289, False), (5, 1, 3): (2, 39, 289, False),
    (5, 1, 4): (2, 11, 54, False), (5, 2, 1): (1, 11, 33, False), (5, 2, 2): (1, 39, 220, False),
    (5, 2, 3): (1, 39, 220, False), (5, 2, 4): (1, 11, 33, False),
    (6, 1, 1): (3, 15, 109, False), (6, 1, 2): (3, 87, 1143, False), (6, 1, 3): (3, 168, 2640, False),
    (6, 1, 4): (3, 87, 1143, False), (6, 1, 5): (3, 15, 109, False), (6, 2, 1): (3, 15, 145, False),
    (6, 2, 2): (3, 87, 2003, False), (6, 2, 3): (3, 168, 5096, False), (6, 2, 4): (3, 87, 2003, False),
    (6, 2, 5): (3, 15, 145, False), (6, 3, 1): (1, 15, 31, False), (6, 3, 2): (1, 87, 404, False),
    (6, 3, 3): (1, 168, 1032, True), (6, 3, 4): (1, 87, 404, False), (6, 3, 5): (1, 15, 31, False),
    (7, 1, 1): (3, 19, 185, False), (7, 1, 2): (3, 176, 3822, False), (7, 1, 3): (3, 644, 20458, False),
    (7, 1, 4): (3, 644, 20458, False), (7, 1, 5): (3, 176, 3822, False), (7, 1, 6): (3, 19, 185, False),
    (7, 2, 1): (3, 19, 333, False), (7, 2, 2): (3, 176, 11400, False), (7, 2, 3): (3, 644, 76968, False),
    (7, 2, 4): (3, 644, 76968, False), (7, 2, 5): (3, 176, 11400, False), (7, 2, 6): (3, 19, 333, False),
    (7, 3, 1): (2, 19, 118, False), (7, 3, 2): (2, 176, 4074, False), (7, 3, 3): (2, 644, 29998, False),
    (7, 3, 4): (2, 644, 29998, False), (7, 3, 5): (2, 176, 4074, False), (7, 3, 6): (2, 19, 118, False),
}

TABLE_H32 = {
    (3, 1, 1): (3, 2, 8, False), (3, 2, 1): (3, 2, 8, False),
    (4, 1, 1): (4, 2, 18, False), (4, 2, 1): (6, 2, 35, False), (4, 3, 1): (4, 2, 18, False),
    (4, 1, 2): (4, 1, 7, False), (4, 2, 2): (6, 1, 13, True), (4, 3, 2): (4, 1, 7, False),
    (5, 1, 1): (5, 2, 28, False), (5, 2, 1): (10, 2, 99, False), (5, 3, 1): (10, 2, 99, False),
    (5, 4, 1): (5, 2, 28, False), (5, 1, 2): (5, 1, 15, False), (5, 2, 2): (10, 1, 57, False),
    (5, 3, 2): (10, 1, 57, False), (5, 4, 2): (5, 1, 15, False),
    (6, 1, 1): (6, 6, 78, False), (6, 2, 1): (16, 6, 360, False), (6, 3, 1): (22, 6, 603, False),
    (6, 4, 1): (16, 6, 360, False), (6, 5, 1): (6, 6, 78, False), (6, 1, 2): (6, 4, 75, False),
    (6, 2, 2): (16, 4, 469, False), (6, 3, 2): (22, 4, 866, False), (6, 4, 2): (16, 4, 469, False),
    (6, 5, 2): (6, 4, 75, False),
    (7, 1, 1): (7, 6, 132, False), (7, 2, 1): (23, 6, 963, False), (7, 3, 1): (43, 6, 2623, False),
    (7, 4, 1): (43, 6, 2623, False), (7, 5, 1): (23, 6, 963, False), (7, 6, 1): (7, 6, 132, False),
    (7, 1, 2): (7, 10, 354, False), (7, 2, 2): (23, 10, 3999, False), (7, 3, 2): (43, 10, 13675, False),
    (7, 4, 2): (43, 10, 13675, False), (7, 5, 2): (23, 10, 3999, False), (7, 6, 2): (7, 10, 354, False),
    (7, 1, 3): (7, 2, 78, False), (7, 2, 3): (23, 2, 939, False), (7, 3, 3): (43, 2, 3405, False),
    (7, 4, 3): (43, 2, 3405, False), (7, 5, 3): (23, 2, 939, False), (7, 6, 3): (7, 2, 78, False),
}


def rows_for(table: dict, n: int) -> dict:
    return {k: v for k, v in table.items() if k[0] == n}


# the 13 (Ca, s(Cb)) pairs of the H32 quasi self-dual codes of length 4
H32_QSD4_PAIRS = [
    (("1101", "0010"), ("1011", "0112")), (("1101", "0010"), ("1022", "0112")),
    (("0101", "0011"), ("1011", "0112")), (("0101", "0011"), ("1012", "0111")),
    (("1100", "0011"), ("1011", "0112")), (("1001", "0010"), ("1011", "0112")),
    (("1001", "0010"), ("1022", "0112")), (("1001", "0010"), ("1012", "0111")),
    (("1001", "0010"), ("1021", "0122")), (("1000", "0001"), ("1011", "0112")),
    (("1000", "0001"), ("1012", "0111")), (("1011", "0111"), ("1011", "0112")),
    (("1011", "0111"), ("1022", "0121")),
]

# ternary components s(Cb) of the 30 H23 quasi self-dual codes of length 4, with Ca = <1010, 0101>
H23_QSD4_CA = ("1010", "0101")
H23_QSD4_CB = [
    ("1220", "0001"), ("1210", "0001"), ("1200", "0012"), ("1020", "0102"), ("1002", "0102"),
    ("1020", "0100"), ("1000", "0120"), ("1022", "0101"), ("1001", "0122"), ("1012", "0110"),
    ("1201", "0012"), ("1020", "0122"), ("1011", "0100"), ("1010", "0101"), ("1001", "0110"),
    ("1002", "0011"), ("0102", "0011"), ("1020", "0101"), ("1001", "0120"), ("1011", "0120"),
    ("1020", "0111"), ("1000", "0011"), ("1010", "0001"), ("1010", "0121"), ("1021", "0110"),
    ("1021", "0120"), ("1020", "0121"), ("1022", "0112"), ("1000", "0100"), ("0100", "0001"),
]
