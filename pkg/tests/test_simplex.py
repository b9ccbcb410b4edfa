import random
from fractions import Fraction

import pytest

from oracles import vertex_enumeration_max
from tridecomp.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, linprog_exact


def test_small_max():
    # max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3  -> (3, 1), value 11
    res = linprog_exact([-3, -2], A_ub=[[1, 1], [1, 3], [1, 0]], b_ub=[4, 6, 3])
    assert res.status == OPTIMAL
    assert res.x == [3, 1] and res.fun == -11


def test_equality_phase_one():
    # min x + y s.t. x + 2y = 3, 2x + y = 3 -> (1, 1)
    res = linprog_exact([1, 1], A_eq=[[1, 2], [2, 1]], b_eq=[3, 3])
    assert res.status == OPTIMAL and res.x == [1, 1]


def test_redundant_equality():
    res = linprog_exact([1, 2], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.status == OPTIMAL and res.fun == 1


def test_infeasible():
    res = linprog_exact([1], A_eq=[[1]], b_eq=[-1])
    assert res.status == INFEASIBLE


def test_unbounded():
    res = linprog_exact([-1, 0], A_ub=[[0, 1]], b_ub=[1])
    assert res.status == UNBOUNDED


def test_negative_rhs_inequality():
    # x >= 2 written as -x <= -2
    res = linprog_exact([1], A_ub=[[-1]], b_ub=[-2])
    assert res.status == OPTIMAL and res.x == [2]


def test_degenerate_cycling_example():
    # Beale's example cycles under the textbook largest-coefficient rule
    c = [Fraction(-3, 4), 150, Fraction(-1, 50), 6]
    A = [[Fraction(1, 4), -60, Fraction(-1, 25), 9],
         [Fraction(1, 2), -90, Fraction(-1, 50), 3],
         [0, 0, 1, 0]]
    res = linprog_exact(c, A_ub=A, b_ub=[0, 0, 1])
    assert res.status == OPTIMAL
    assert res.fun == Fraction(-1, 20)


def test_shape_errors():
    with pytest.raises(ValueError):
        linprog_exact([1, 1], A_ub=[[1]], b_ub=[1])
    with pytest.raises(ValueError):
        linprog_exact([1], A_ub=[[1]], b_ub=[1, 2])


@pytest.mark.parametrize("seed", range(25))
def test_random_packing_against_vertex_enumeration(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 3), rng.randint(1, 3)
    A = [[rng.randint(0, 3) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(1, 5) for _ in range(m)]
    c = [rng.randint(-2, 4) for _ in range(n)]
    for j in range(n):  # keep it bounded
        A.append([int(j == k) for k in range(n)])
        b.append(rng.randint(1, 4))
    res = linprog_exact([-x for x in c], A_ub=A, b_ub=b)
    assert res.status == OPTIMAL
    assert -res.fun == vertex_enumeration_max(c, A, b)
