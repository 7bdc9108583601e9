import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plink.complexes import InvalidArgument, SimplicialComplex, chain_boundary
from plink.fixtures import annulus, cone, mobius, random_complex
from plink.homology import boundary_matrix
from plink.ohcp import (BUDGET_EXCEEDED, INFEASIBLE, OPTIMAL, UNBOUNDED,
                        LinearProgram, OHCPInstance, formulate, solve_ilp,
                        solve_lp_exact, solve_ohcp_ilp, solve_ohcp_lp,
                        verify_homologous)
from plink.tugraph import is_totally_unimodular

F = Fraction


def lp(obj, rows, rhs):
    return LinearProgram(objective=[F(v) for v in obj],
                         rows=[[F(v) for v in r] for r in rows],
                         rhs=[F(v) for v in rhs],
                         var_names=[f"z{i}" for i in range(len(obj))])


# -- exact LP solver ----------------------------------------------------------

def test_lp_simple_optimum():
    # min z0 + z1 s.t. z0 + z1 = 1 -> 1
    res = solve_lp_exact(lp([1, 1], [[1, 1]], [1]))
    assert res.status == OPTIMAL
    assert res.objective == 1


def test_lp_prefers_cheaper_variable():
    res = solve_lp_exact(lp([3, 1], [[1, 1]], [1]))
    assert res.objective == 1
    assert res.values == [F(0), F(1)]


def test_lp_fractional_optimum_is_exact():
    # min z0 s.t. 40 z0 = 17
    res = solve_lp_exact(lp([1], [[40]], [17]))
    assert res.objective == F(17, 40)


def test_lp_infeasible():
    res = solve_lp_exact(lp([1], [[0]], [1]))
    assert res.status == INFEASIBLE


def test_lp_unbounded():
    # min -z0 s.t. z0 - z1 = 0, both free to grow
    res = solve_lp_exact(lp([-1, 0], [[1, -1]], [0]))
    assert res.status == UNBOUNDED


def test_lp_negative_rhs_normalized():
    res = solve_lp_exact(lp([1, 1], [[-1, -1]], [-1]))
    assert res.objective == 1


def test_lp_redundant_rows():
    res = solve_lp_exact(lp([1, 1], [[1, 1], [2, 2]], [1, 2]))
    assert res.status == OPTIMAL
    assert res.objective == 1


@given(st.integers(0, 2000))
def test_lp_solution_is_feasible(seed):
    r = random.Random(seed)
    m, n = r.randint(1, 3), r.randint(2, 5)
    rows = [[F(r.randint(-3, 3)) for _ in range(n)] for _ in range(m)]
    rhs = [F(r.randint(-3, 3)) for _ in range(m)]
    obj = [F(r.randint(0, 4)) for _ in range(n)]
    res = solve_lp_exact(lp(obj, rows, rhs))
    if res.status == OPTIMAL:
        for row, b in zip(rows, rhs):
            assert sum(c * v for c, v in zip(row, res.values)) == b
        assert all(v >= 0 for v in res.values)
        assert res.objective == sum(
            c * v for c, v in zip(obj, res.values))


# -- branch and bound ---------------------------------------------------------

def test_ilp_rounds_up_fractional_lp():
    # min z0 + z1 s.t. 2 z0 + 2 z1 = 3: LP gives 3/2, no integer point
    res = solve_ilp(lp([1, 1], [[2, 2]], [3]))
    assert res.status == INFEASIBLE


def test_ilp_integral_lp_is_returned_unchanged():
    res = solve_ilp(lp([1, 1], [[1, 1]], [2]))
    assert res.objective == 2
    assert all(v.denominator == 1 for v in res.values)


def test_ilp_knapsack_style():
    # min 2a + 3b s.t. a + 2b = 3 -> integral best a=1, b=1 cost 5
    res = solve_ilp(lp([2, 3], [[1, 2]], [3]))
    assert res.objective == 5
    assert res.values == [F(1), F(1)]


def test_ilp_budget_exceeded():
    res = solve_ilp(lp([1, 1], [[2, 2]], [3]), budget=1)
    assert res.status == BUDGET_EXCEEDED


# -- OHCP ---------------------------------------------------------------------

def test_ohcp_instance_validates_chain():
    with pytest.raises(InvalidArgument):
        OHCPInstance(complex=mobius(5), p=1, chain={(0, 9): 1})


def test_ohcp_null_homologous_input_costs_zero():
    # boundary of a triangle is homologous to the empty chain
    cx = SimplicialComplex.from_maximal([(0, 1, 2)])
    sol = solve_ohcp_lp(OHCPInstance(
        complex=cx, p=1, chain={(0, 1): 1, (1, 2): 1, (0, 2): -1}))
    assert sol.status == OPTIMAL
    assert sol.objective == 0
    assert sol.chain == {}


def test_ohcp_certificate_identity():
    cx = annulus(4)
    chain = {(0, 1): 1, (1, 2): 1, (2, 3): 1, (0, 3): -1}  # inner rim
    sol = solve_ohcp_lp(OHCPInstance(complex=cx, p=1, chain=chain))
    assert sol.status == OPTIMAL
    diff = dict(sol.chain)
    for s, v in chain.items():
        diff[s] = diff.get(s, 0) - v
    diff = {s: v for s, v in diff.items() if v}
    assert diff == chain_boundary(sol.certificate)


def test_ohcp_respects_weights():
    # two homologous rims; make the input rim expensive
    cx = annulus(3)
    inner = {(0, 1): 1, (1, 2): 1, (0, 2): -1}
    weights = {e: (F(10) if e in inner else F(1)) for e in cx.edges}
    sol = solve_ohcp_lp(OHCPInstance(complex=cx, p=1, chain=inner,
                                     weights=weights))
    assert sol.status == OPTIMAL
    assert set(sol.chain) == {(3, 4), (4, 5), (3, 5)}


def test_ohcp_top_dimension_chain_has_no_certificate():
    cx = mobius(5)
    tri = cx.p_simplices(2)[0]
    sol = solve_ohcp_lp(OHCPInstance(complex=cx, p=2, chain={tri: 1}))
    assert sol.status == OPTIMAL
    assert sol.chain == {tri: 1}
    assert sol.certificate == {}


def test_ohcp_lp_equals_ilp_on_tu_complexes(rng):
    done = 0
    while done < 25:
        cx = random_complex(rng, n_vertices=6, max_dim=2, n_generators=4)
        if cx.dim < 2 or not cx.edges:
            continue
        if not is_totally_unimodular(boundary_matrix(cx, 2)).status:
            continue
        chain = {e: rng.choice([-1, 1]) for e in cx.edges
                 if rng.random() < 0.4}
        if not chain:
            continue
        inst = OHCPInstance(complex=cx, p=1, chain=chain)
        assert solve_ohcp_lp(inst).objective == solve_ohcp_ilp(inst).objective
        done += 1


def test_ohcp_ilp_budget_status():
    cx = mobius(5)
    sol = solve_ohcp_ilp(OHCPInstance(complex=cx, p=1, chain={(0, 2): 1}),
                         budget=1)
    assert sol.status in (BUDGET_EXCEEDED, OPTIMAL)


# -- homologousness verification ---------------------------------------------

def test_verify_homologous_rational_positive():
    cx = annulus(3)
    inner = {(0, 1): 1, (1, 2): 1, (0, 2): -1}
    outer = {(3, 4): 1, (4, 5): 1, (3, 5): -1}
    ok, cert = verify_homologous(cx, 1, inner, outer)
    assert ok
    diff = {s: outer.get(s, 0) - inner.get(s, 0)
            for s in set(inner) | set(outer)}
    diff = {s: v for s, v in diff.items() if v}
    assert chain_boundary(cert) == diff


def test_verify_homologous_negative():
    cx = annulus(3)
    inner = {(0, 1): 1, (1, 2): 1, (0, 2): -1}
    ok, cert = verify_homologous(cx, 1, inner, {})
    assert not ok and cert is None


def test_verify_homologous_integer_vs_rational():
    # a 2-torsion cycle in the projective plane: rationally null-homologous
    # (the double is a boundary), integrally not
    rp2 = SimplicialComplex.from_maximal([
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
        (1, 2, 4), (2, 4, 5), (2, 3, 5), (1, 3, 5), (1, 3, 4)])
    torsion_cycle = {(0, 1): 1, (1, 3): 1, (0, 3): -1}
    ok_rat, cert = verify_homologous(rp2, 1, {}, torsion_cycle, "rational")
    ok_int, _ = verify_homologous(rp2, 1, {}, torsion_cycle, "integer")
    assert ok_rat and not ok_int
    assert chain_boundary(cert) == torsion_cycle
    # reflexivity with an integer certificate
    ok, cert = verify_homologous(rp2, 1, torsion_cycle, torsion_cycle,
                                 "integer")
    assert ok and cert == {}


def test_verify_homologous_rejects_bad_mode():
    cx = annulus(3)
    with pytest.raises(InvalidArgument):
        verify_homologous(cx, 1, {}, {}, "real")


def test_verify_homologous_fractional_diff_never_integer():
    cx = SimplicialComplex.from_maximal([(0, 1, 2)])
    ok, cert = verify_homologous(cx, 1, {}, {(0, 1): F(1, 2)}, "integer")
    assert not ok
