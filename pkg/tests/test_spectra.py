import math
from fractions import Fraction

import pytest

from srgec import (
    block_graph,
    block_graph_params,
    bose_sts,
    claw_bound_holds,
    complement,
    complement_params,
    eigenvalue_matching_bound,
    feasibility_check,
    ferber_jain_holds,
    high_degree_threshold,
    hoffman_coclique_bound,
    latin_square_graph,
    latin_square_params,
    lattice,
    mu_bound_holds,
    cyclic_latin_square,
    srg_spectrum,
    steiner_complement_threshold,
    triangular,
    triangular_params,
)
from srgec.errors import (
    CompleteGraphError,
    InfeasibleError,
    NotApplicableError,
    ParameterRangeError,
)
from srgec.graph import SrgParams
from srgec.spectra import SqrtExt, bound_report, power_inequalities
from tests.conftest import brute_max_coclique

# the fifteen parameter sets of even order and degree at most 18
TABLE1 = [
    (10, 3, 0, 1),
    (16, 5, 0, 2),
    (16, 6, 2, 2),
    (26, 10, 3, 4),
    (28, 12, 6, 4),
    (36, 10, 4, 2),
    (36, 14, 4, 6),
    (36, 14, 7, 4),
    (36, 15, 6, 6),
    (40, 12, 2, 4),
    (50, 7, 0, 1),
    (56, 10, 0, 2),
    (64, 14, 6, 2),
    (64, 18, 2, 6),
    (100, 18, 8, 2),
]


@pytest.mark.parametrize("params", TABLE1)
def test_table_spectra_are_integral(params):
    spec = srg_spectrum(SrgParams(*params))
    assert spec.integral
    assert spec.r.denominator == 1 and spec.s.denominator == 1
    n, k, lam, mu = params
    assert k + spec.r * spec.s == mu
    assert 1 + spec.f + spec.g == n
    assert k + spec.f * spec.r + spec.g * spec.s == 0


@pytest.mark.parametrize(
    "params,expected",
    [
        ((10, 3, 0, 1), (1, -2, 5, 4)),
        ((26, 10, 3, 4), (2, -3, 13, 12)),
        ((16, 6, 2, 2), (2, -2, 6, 9)),
        ((64, 18, 2, 6), (2, -6, 45, 18)),
        ((100, 18, 8, 2), (8, -2, 18, 81)),
    ],
)
def test_known_spectra(params, expected):
    spec = srg_spectrum(SrgParams(*params))
    assert (spec.r, spec.s, spec.f, spec.g) == expected


def numpy_spectrum(g):
    numpy = pytest.importorskip("numpy")
    a = numpy.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1.0
    return numpy.linalg.eigvalsh(a)


@pytest.mark.parametrize(
    "maker",
    [
        lambda: complement(triangular(5)),
        lambda: lattice(4),
        lambda: triangular(8),
        lambda: latin_square_graph(cyclic_latin_square(4)),
    ],
)
def test_spectrum_matches_eigendecomposition(maker):
    from srgec import recognize_srg

    g = maker()
    params = recognize_srg(g)
    spec = srg_spectrum(params)
    eigs = sorted(numpy_spectrum(g))
    # smallest g values ~ s, middle f values ~ r, top value ~ k
    assert abs(eigs[-1] - params.k) < 1e-9
    for x in eigs[: spec.g]:
        assert abs(x - float(spec.s)) < 1e-9
    for x in eigs[spec.g : spec.g + spec.f]:
        assert abs(x - float(spec.r)) < 1e-9


# -- complement ------------------------------------------------------------------

def test_complement_params_examples():
    assert complement_params(SrgParams(10, 6, 3, 4)) == SrgParams(10, 3, 0, 1)
    assert complement_params(SrgParams(16, 6, 2, 2)) == SrgParams(16, 9, 4, 6)


def test_complement_params_involution():
    for params in TABLE1:
        p = SrgParams(*params)
        assert complement_params(complement_params(p)) == p


def test_complement_eigenvalue_relation():
    for params in TABLE1:
        p = SrgParams(*params)
        spec = srg_spectrum(p)
        cspec = srg_spectrum(complement_params(p))
        assert cspec.r == -1 - spec.s
        assert cspec.s == -1 - spec.r


# -- feasibility --------------------------------------------------------------------

def test_feasibility_petersen_params():
    assert feasibility_check(SrgParams(10, 3, 0, 1)).all_pass


def test_feasibility_catches_counting_identity():
    report = feasibility_check(SrgParams(10, 3, 1, 1))
    failed = {name for name, ok, _ in report.checks if not ok}
    assert "counting-identity" in failed


def test_feasibility_16_5_0_2():
    assert feasibility_check(SrgParams(16, 5, 0, 2)).all_pass


# -- family parameter formulas ---------------------------------------------------------

def test_triangular_params_t8():
    assert triangular_params(8) == SrgParams(28, 12, 6, 4)


def test_latin_square_params_lattice6():
    assert latin_square_params(6, 0) == SrgParams(36, 10, 4, 2)


def test_block_graph_params_sts15():
    assert block_graph_params(15, 3) == SrgParams(35, 18, 9, 9)
    assert block_graph(bose_sts(15)).n == 35


def test_block_graph_params_projective_plane():
    with pytest.raises(CompleteGraphError):
        block_graph_params(7, 3)


def test_block_graph_params_divisibility():
    with pytest.raises(InfeasibleError):
        block_graph_params(11, 3)


def test_triangular_params_range():
    with pytest.raises(ParameterRangeError):
        triangular_params(3)


# -- bounds ---------------------------------------------------------------------------

def test_hoffman_bound_lattice4_met_by_max_coclique():
    assert hoffman_coclique_bound(SrgParams(16, 6, 2, 2)) == Fraction(4)
    assert brute_max_coclique(lattice(4)) == 4


def test_hoffman_bound_petersen(petersen):
    assert hoffman_coclique_bound(SrgParams(10, 3, 0, 1)) == Fraction(4)
    assert brute_max_coclique(petersen) == 4


@pytest.mark.parametrize("m", range(2, 13))
def test_hoffman_bound_latin_square_is_m(m):
    for t in range(0, max(1, m - 2)):
        assert hoffman_coclique_bound(latin_square_params(m, t)) == m


@pytest.mark.parametrize(
    "params,bound",
    [((10, 3, 0, 1), 1), ((16, 6, 2, 2), 2), ((56, 10, 0, 2), 4)],
)
def test_matching_bound(params, bound):
    assert eigenvalue_matching_bound(SrgParams(*params)) == bound


def test_claw_bound_examples():
    # (10,3,0,1): r=1 vs (-2)(-1)(2)/2 - 1 = 1
    assert claw_bound_holds(SrgParams(10, 3, 0, 1))
    # (64,18,2,6): 2 vs (-6)(-5)(7)/2 - 1 = 104
    assert claw_bound_holds(SrgParams(64, 18, 2, 6))


def test_mu_bound_examples():
    # (10,3,0,1): 1 <= (-8)(-1) = 8
    assert mu_bound_holds(SrgParams(10, 3, 0, 1))


def test_ferber_jain_examples():
    assert ferber_jain_holds(SrgParams(100, 18, 8, 2))  # 8 < 18^0.9 = 13.49
    # true for the Petersen parameters too, yet the graph is class 2: the
    # predicate is advisory, the theorem is asymptotic
    assert ferber_jain_holds(SrgParams(10, 3, 0, 1))


def test_ferber_jain_needs_even_order():
    with pytest.raises(NotApplicableError):
        ferber_jain_holds(SrgParams(9, 4, 1, 2))


def test_high_degree_threshold_examples():
    res = high_degree_threshold(16, 9)
    assert res["csaba"] is True  # 9 >= 2*4 - 1
    assert res["cariolaro_hilton"] is False  # 9 < 13.168
    res = high_degree_threshold(10, 9)
    assert res["csaba"] and res["cariolaro_hilton"]
    res = high_degree_threshold(100, 49)
    assert res["csaba"] is True  # 49 >= 2*25 - 1
    assert res["cariolaro_hilton"] is False


def test_steiner_complement_threshold():
    assert steiner_complement_threshold(24, 2)
    assert not steiner_complement_threshold(23, 2)
    assert steiner_complement_threshold(54, 3)


def test_power_inequalities_petersen():
    res = power_inequalities(SrgParams(10, 3, 0, 1))
    assert res["r_lt_k_6_7"]  # 1^7 < 3^6
    assert res["neg_s_lt_2k_6_7"]  # 2^7 = 128 < 6^6


# -- conference case ----------------------------------------------------------------

def test_conference_spectrum_five_cycle():
    spec = srg_spectrum(SrgParams(5, 2, 0, 1))
    assert isinstance(spec.r, SqrtExt)
    assert spec.f == spec.g == 2
    golden = (-1 + math.sqrt(5)) / 2
    assert abs(float(spec.r) - golden) < 1e-12
    assert abs(float(spec.s) - (-1 - math.sqrt(5)) / 2) < 1e-12
    # k + r*s = mu exactly
    product = spec.r * spec.s + 2
    assert (product - 1).sign() == 0


def test_conference_bounds_are_exact():
    p = SrgParams(5, 2, 0, 1)
    assert eigenvalue_matching_bound(p) == math.floor((2 - (-1 + math.sqrt(5)) / 2 + 1) / 2)
    assert claw_bound_holds(p) == (
        float(srg_spectrum(p).r)
        <= float(srg_spectrum(p).s) * (float(srg_spectrum(p).s) + 1) * 1.0 - 1
    )


def test_infeasible_irrational_multiplicities():
    with pytest.raises(InfeasibleError):
        srg_spectrum(SrgParams(10, 3, 1, 1))


# -- SqrtExt unit behavior ------------------------------------------------------------

def test_sqrtext_comparisons_match_floats():
    vals = [
        SqrtExt(Fraction(a), Fraction(b, 2), 5)
        for a in range(-3, 4)
        for b in range(-3, 4)
    ]
    for x in vals:
        for y in vals:
            if abs(float(x) - float(y)) > 1e-9:
                assert (x < y) == (float(x) < float(y))
            else:
                # equal values: sign of the exact difference must be 0
                assert (x - y).sign() == 0


def test_sqrtext_floor():
    x = SqrtExt(Fraction(1, 2), Fraction(1, 2), 5)  # golden ratio ~ 1.618
    assert math.floor(x) == 1
    y = SqrtExt(Fraction(-1, 2), Fraction(-1, 2), 5)
    assert math.floor(y) == -2
    z = SqrtExt(Fraction(7, 2), Fraction(0), 5)
    assert math.floor(z) == 3


def test_bound_report_is_ordered_and_complete():
    rows = bound_report(SrgParams(16, 6, 2, 2))
    keys = [k for k, _ in rows]
    assert keys.index("eigenvalue-r") < keys.index("claw-bound")
    assert "ferber-jain" in keys
    assert "cariolaro-hilton-threshold" in keys
