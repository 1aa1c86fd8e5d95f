import json
import math
import random
from fractions import Fraction

import mpmath
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from rqv import certifier as C
from rqv.graph import GraphInputError
from rqv.interval import FLOAT, Interval

# symbolic oracles --------------------------------------------------------

_n, _m = sp.symbols("n m")
H = _m**2 * _n**2 * (_n - 1) - (2 * _m + _n**2 - 3 * _n + 2) ** 2 * (2 * _m - (_n - 1))
L = sp.diff(H, _m)


def test_h_and_l_match_symbolic_polynomials():
    assert sp.expand(H.subs(_m, _n + 8)) == sp.expand(45 * _n**3 - 657 * _n**2 + 288 * _n - 5508)
    assert sp.expand(L.subs(_m, _n + 8)) == sp.expand(14 * _n**3 - 154 * _n**2 + 68 * _n - 1872)
    assert sp.expand(sp.diff(L, _m)) == sp.expand(2 * _n**3 - 18 * _n**2 - 48 * _m + 56 * _n - 40)
    assert sp.diff(L, _m, 2) == -48
    rng = random.Random(4)
    for _ in range(50):
        n, m = rng.randint(1, 200), rng.randint(-50, 5000)
        assert C.h_value(n, m) == H.subs({_n: n, _m: m})
        assert C.l_value(n, m) == L.subs({_n: n, _m: m})
        assert C.l_prime(n, m) == sp.diff(L, _m).subs({_n: n, _m: m})


def test_endpoint_expansion_matches_symbolic():
    x = sp.symbols("x", positive=True)
    expr = sp.expand(L.subs({_n: x**2, _m: 2 * x**3}))
    want = 4*x**9 - 2*x**8 - 36*x**7 - 80*x**6 + 112*x**5 - 42*x**4 - 80*x**3 + 44*x**2 - 16
    assert sp.expand(expr - want) == 0


def test_h_example_value():
    assert C.h_value(18, 26) == 49248 == C.h_at_n_plus_8(18)


@given(st.integers(1, 300), st.integers(0, 10**5))
def test_exact_and_interval_paths_agree(n, m):
    exact = C.l_value(n, m)
    iv = C.l_at_real(n, FLOAT.num(m), FLOAT)
    assert iv.contains(exact)


@given(st.integers(15, 60), st.data())
def test_sign_of_h_matches_sign_of_f(n, data):
    m = data.draw(st.integers(n + 8, n * (n - 1) // 2))
    f = C.f_value(n, m)
    h = C.h_value(n, m)
    # A = m n sqrt(n-1) > 0 and B = (2m + n^2 - 3n + 2) sqrt(2m - n + 1) > 0
    if f.lo > 0:
        assert h > 0
    elif f.hi < 0:
        assert h < 0


# f grids -----------------------------------------------------------------


def test_f_examples():
    assert abs(C.f_value(15, 23).mid - 0.00349) < 1e-5 and C.f_value(15, 23).lo > 0
    assert C.f_value(13, 24).lo > 0 and C.f_value(14, 23).lo > 0
    with pytest.raises(GraphInputError):
        C.f_value(15, 7)


def test_f_matches_mpmath():
    with mpmath.workdps(50):
        for n, m in [(15, 23), (16, 40), (17, 136), (13, 24), (14, 23)]:
            ref = (mpmath.mpf(m) / mpmath.sqrt(2 * m - (n - 1)) - mpmath.sqrt(n - 1)
                   - mpmath.mpf(2 * m - 2 * (n - 1)) / (n * mpmath.sqrt(n - 1)))
            iv = C.f_value(n, m)
            assert mpmath.mpf(iv.lo) <= ref <= mpmath.mpf(iv.hi)


def test_reduce_f_grid():
    chk = C.certify_f_grid(C.REDUCE_F_GRID)
    assert chk.status == C.CERTIFIED and chk.witness == {"n": 15, "m": 23}
    assert chk.evaluated_points == sum(math.comb(n, 2) - n - 7 for n in (15, 16, 17))
    single = C.certify_f_grid([(15, (23, 23))])
    assert single.certified and abs(single.worst_margin.mid - 0.00349) < 1e-5


def test_lemma_1314_grid():
    chk = C.certify_f_grid(C.LEMMA_1314_GRID, "lemma_1314")
    assert chk.certified and chk.witness == {"n": 14, "m": 23}


def test_perturbed_f_fails_with_witness():
    chk = C.certify_f_grid(C.REDUCE_F_GRID, offset=-0.01)
    assert chk.status == C.FAILED and chk.worst_margin.hi < 0 and chk.witness == {"n": 15, "m": 23}


def test_undecidable_point_retried_then_reported():
    # 0.1 + 0.2 - 0.3 straddles zero in doubles but is exactly zero: strictly positive
    # cannot be decided at any finite precision
    pts = [({"x": 0}, lambda ar: ar.num(Fraction(1, 10)) + ar.num(Fraction(2, 10)) - ar.num(Fraction(3, 10)),
            C.STRICT)]
    chk = C.run_check("probe", {}, pts)
    assert chk.status == C.UNDECIDABLE


def test_extended_retry_resolves_tight_margin():
    # sqrt(2)^2 - 2 + 1e-17 > 0 is invisible to doubles
    tiny = Fraction(1, 10**17)
    pts = [({}, lambda ar: ar.sqrt(ar.num(2)) * ar.sqrt(ar.num(2)) - 2 + ar.num(tiny), C.STRICT)]
    assert C.run_check("probe", {}, pts).status == C.CERTIFIED


# h / l claims ------------------------------------------------------------


def test_identities():
    assert C.certify_h_identity().certified and C.certify_h_identity().evaluated_points >= 10
    assert C.certify_l_identity().certified


@pytest.mark.parametrize("n_max", [18, 25, 40])
def test_h_l_claims(n_max):
    chk = C.certify_h_l_claims(n_max)
    assert chk.certified and chk.grid["n"] == [18, n_max]
    assert C.certify_l_concave_endpoints(n_max).certified


def test_h_l_claims_require_n18():
    with pytest.raises(GraphInputError):
        C.certify_h_l_claims(17)


def test_endpoint_n18_positive():
    assert C.l_at_endpoint_expanded(18).lo > 0
    assert C._endpoint_floor_ceil(18) == (152, 153)


def test_h_increasing_n18():
    assert all(C.h_value(18, m + 1) > C.h_value(18, m) for m in range(26, 153))


# n = 12 / 13 -------------------------------------------------------------


def test_g12():
    assert C.g12_exact(66) == Fraction(11, 3)
    assert abs(C.g12_value(21).mid - 3.663637) < 1e-6
    assert C.g12_value(20).lo > 11 / 3
    chk = C.certify_g12()
    assert chk.certified and chk.worst_margin.lo > 0
    with pytest.raises(GraphInputError):
        C.g12_value(5)


def test_lb131_examples():
    lhs, rhs = C.lb131_lhs(13, 6), C.lb131_rhs(13, 10)
    assert abs(lhs.mid - 4.039050733677421) < 1e-12 and abs(rhs.mid - 3.952628765990515) < 1e-12
    assert C.certify_lb131(13, [(2, 9)]).certified
    assert C.default_lb131_pairs(13)[0] == (2, 9)


def test_lb131_grids():
    a, b = C.certify_lb131(13), C.certify_lb131(12)
    assert a.certified and a.witness == {"k": 9, "s": 7}
    assert b.certified and b.witness == {"k": 8, "s": 6}
    assert [k for k, _ in C.default_lb131_pairs(12)] == list(range(1, 9))


def test_lb131_errors():
    with pytest.raises(GraphInputError):
        C.certify_lb131(14)
    with pytest.raises(GraphInputError):
        C.certify_lb131(13, [(1, 11)])


def test_base13_k1():
    assert abs(C.base13_formula("p3").mid - 3.98949) < 1e-5
    assert abs(C.base13_formula("two_edges").mid - 4.125898) < 1e-6
    assert abs(C.lb131_rhs(13, 1).mid - 3.55292) < 1e-5
    chk = C.certify_base13_k1()
    assert chk.certified and chk.evaluated_points == 4
    with pytest.raises(GraphInputError):
        C.certify_base13_k1(12)


# remaining families ------------------------------------------------------


def test_min2():
    assert C.min2_margin(12, 10).lo > 0
    assert C.certify_min2().certified
    wide = C.certify_min2(range(9, 101))
    assert wide.witness == {"n": 9, "k": 10}


def test_largedegree():
    chk = C.certify_largedegree()
    assert chk.certified
    assert (13 - 2) + Fraction(13 + 9, 13 - 2) == 13


def test_t_bound_margin_matches_brute_force():
    for n in (12, 13, 20):
        for k in (1, 5, 10):
            for delta in range(2, n):
                best = max(min(Fraction(d + delta), d + Fraction(n + 2 * k + 1, d)) for d in range(1, delta + 1))
                assert C._t_bound_margin(n, k, delta, n) == n - best


def test_other_families():
    for fn in (C.certify_dense, C.certify_small, C.certify_lebasic_identity, C.certify_unicyclic_star):
        assert fn().certified


def test_determinism_and_json():
    a, b = C.certify_lb131(13), C.certify_lb131(13)
    assert (a.status, a.worst_margin, a.witness) == (b.status, b.worst_margin, b.witness)
    d = json.loads(a.to_json())
    assert set(d) >= {"lemma_id", "grid", "status", "worst_margin", "witness", "evaluated_points",
                      "wall_time_ms", "schema_version"}
    assert d["worst_margin"].keys() == {"lo", "hi"}


def test_empty_grid_rejected():
    with pytest.raises(GraphInputError):
        C.run_check("empty", {}, [])


def test_zero_kind_failure_ranks_worst():
    pts = [({"i": 0}, lambda ar: 1, C.STRICT), ({"i": 1}, lambda ar: Fraction(1, 2), C.ZERO)]
    chk = C.run_check("probe", {}, pts)
    assert chk.status == C.FAILED and chk.witness == {"i": 1}
    assert Interval.exact(Fraction(1, 2)).contains(chk.worst_margin.mid)
