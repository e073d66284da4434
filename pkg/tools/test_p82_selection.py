"""Dev harness: run the P8^2 candidate selection under each sign variant
of the n=3 tables to pin the convention bits."""

import itertools
import sys

sys.path.insert(0, "src")

from vmorse import lattice, petrovskii
from vmorse.petrovskii import EVEN, ODD


def p8_matrix(X, Y, Z, W):
    assert W % 2 == 0 and (Z + W) % 2 == 0
    zw = -(Z + W) // 2
    w2 = -W // 2
    return [
        [-2, 0, 0, 1, 0, 1, X, zw],
        [0, -2, 0, 0, 1, 1, X, zw],
        [0, 0, -2, 0, 0, 1, Y, w2],
        [1, 0, 0, -2, 0, 0, 0, Z],
        [0, 1, 0, 0, -2, 0, 0, Z],
        [1, 1, 1, 0, 0, -2, 0, W],
        [X, X, Y, 0, 0, 0, -2, 0],
        [zw, zw, w2, Z, Z, W, 0, -2],
    ]


IDX = (1, 1, 1, 2, 2, 2, 2, 1)
NEG = 6
CANDS = [(0, y, 0, w) for y in (1, -1) for w in (2, -2)]


def run(b_ev_sign, b_odd_sign, a_ev_sign=-1, a_odd_sign=-1):
    # rewrite the n=3 tables as +-1 times the n=1 tables
    for key in list(petrovskii._ANCHOR):
        if key[1] == 3:
            del petrovskii._ANCHOR[key]
    for key in list(petrovskii._WEIGHT):
        if key[1] == 3:
            del petrovskii._WEIGHT[key]
    for (cls, n4, u, s), v in list(petrovskii._ANCHOR.items()):
        if n4 == 1:
            sign = a_ev_sign if cls == EVEN else a_odd_sign
            petrovskii._ANCHOR[(cls, 3, u, s)] = sign * v
    for (cls, n4, u, s), v in list(petrovskii._WEIGHT.items()):
        if n4 == 1:
            sign = b_ev_sign if cls == EVEN else b_odd_sign
            petrovskii._WEIGHT[(cls, 3, u, s)] = sign * v

    survivors = []
    report = []
    for cand in CANDS:
        m = p8_matrix(*cand)
        free, tors = lattice.cokernel(lattice.as_matrix(m))
        ev = petrovskii.pairings_all_real(IDX, NEG, m, 3, EVEN)
        odd = petrovskii.pairings_all_real(IDX, NEG, m, 3, ODD)
        ev_ok, _ = lattice.image_membership(lattice.as_matrix(m), ev)
        odd_ok, _ = lattice.image_membership(lattice.as_matrix(m), odd)
        report.append((cand, (free, tors), ev, odd, ev_ok, odd_ok))
        if odd_ok and not ev_ok:
            survivors.append(cand)
    return survivors, report


for bev, bodd in itertools.product((1, -1), repeat=2):
    survivors, report = run(bev, bodd)
    print(f"B_ev sign {bev:+d}, B_odd sign {bodd:+d}: survivors {survivors}")
    if len(survivors) == 1:
        for cand, cok, ev, odd, ev_ok, odd_ok in report:
            print(
                "   ", cand, "coker", cok,
                "ev", ev, "in-im" if ev_ok else "OBSTRUCTED",
                "odd", odd, "in-im" if odd_ok else "OBSTRUCTED",
            )
