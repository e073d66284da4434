import random

import pytest

from vmorse import lattice
from vmorse.lattice import (
    as_matrix,
    cokernel,
    coset_invariants,
    det_unimodular,
    identity,
    image_membership,
    mat_mul,
    mat_vec,
    smith_normal_form,
    solve_diophantine,
)


def test_snf_identity():
    dec = smith_normal_form(identity(3))
    assert dec.divisors == (1, 1, 1)
    assert dec.verify(identity(3))


def test_snf_single_negative_generator():
    m = as_matrix([[-2]])
    dec = smith_normal_form(m)
    assert dec.divisors == (2,)
    assert cokernel(m) == (0, (2,))


def test_cokernel_zero_matrix():
    m = as_matrix([[0, 0], [0, 0]])
    assert cokernel(m) == (2, ())


def test_snf_random_fuzz():
    rng = random.Random(20240901)
    for _ in range(1000):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = as_matrix(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        )
        dec = smith_normal_form(m)
        assert dec.verify(m), m
        for i, row in enumerate(dec.d):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0


def test_image_membership_trivial_cases():
    m = as_matrix([[-2]])
    ok, w = image_membership(m, [0])
    assert ok and mat_vec(m, w) == (0,)
    ok, w = image_membership(m, [1])
    assert not ok and w is None
    ok, w = image_membership(m, [4])
    assert ok and w == (-2,)


def test_image_membership_vs_bruteforce():
    rng = random.Random(7)
    for _ in range(300):
        m = as_matrix([[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)])
        v = tuple(rng.randint(-3, 3) for _ in range(3))
        ok, w = image_membership(m, v)
        brute = False
        for a in range(-9, 10):
            for b in range(-9, 10):
                for c in range(-9, 10):
                    if mat_vec(m, (a, b, c)) == v:
                        brute = True
                        break
                if brute:
                    break
            if brute:
                break
        if ok:
            assert mat_vec(m, w) == v
        # brute force over a finite box can only certify membership,
        # not rule it out, unless the matrix has full rank with small
        # inverse; check one direction plus the witness equation.
        if brute:
            assert ok


def test_cokernel_transpose_has_same_divisors():
    rng = random.Random(99)
    for _ in range(200):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        m = as_matrix(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rows)]
        )
        a = smith_normal_form(m)
        b = smith_normal_form(tuple(zip(*m)))
        assert sorted(d for d in a.divisors if d) == sorted(
            d for d in b.divisors if d
        )


def test_solve_diophantine_no_solution():
    assert solve_diophantine(as_matrix([[2]]), [3]) is None


def test_solve_diophantine_identity():
    x0, kernel = solve_diophantine(identity(4), [3, -1, 0, 7])
    assert x0 == (3, -1, 0, 7)
    assert kernel == ()


def test_solve_diophantine_kernel_spans_solutions():
    rng = random.Random(11)
    for _ in range(200):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = as_matrix(
            [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
        )
        x = tuple(rng.randint(-3, 3) for _ in range(cols))
        b = mat_vec(a, x)
        sol = solve_diophantine(a, b)
        assert sol is not None
        x0, kernel = sol
        assert mat_vec(a, x0) == b
        for k in kernel:
            assert mat_vec(a, k) == (0,) * rows
        # the difference x - x0 must be an integer combination of kernel
        # vectors; verify by solving the small system over the kernel
        if kernel:
            kt = as_matrix(list(zip(*kernel)))
            diff = tuple(xi - yi for xi, yi in zip(x, x0))
            ok, _ = image_membership(kt, diff)
            assert ok
        else:
            assert x == x0


def test_det_unimodular():
    assert det_unimodular(identity(5)) == 1
    assert det_unimodular(as_matrix([[0, 1], [1, 0]])) == -1
    assert det_unimodular(as_matrix([[2, 0], [0, 3]])) == 6


def test_overflow_guard():
    big = 2 ** 62
    with pytest.raises(lattice.LatticeOverflow):
        as_matrix([[big * 4]])


def test_coset_invariants_zero_class():
    m = as_matrix([[2, 0], [0, 3]])
    assert coset_invariants(m, [0, 0]) == (1, 0)
    order, _ = coset_invariants(m, [1, 0])
    assert order == 2
    order, _ = coset_invariants(m, [0, 1])
    assert order == 3
    order, _ = coset_invariants(m, [1, 1])
    assert order == 6
