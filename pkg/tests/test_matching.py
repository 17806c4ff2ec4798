import random

from srgec import (
    RngState,
    build_graph,
    complement,
    complete_multipartite,
    disjoint_pm_greedy,
    has_perfect_matching,
    is_connected,
    lattice,
    maximum_matching,
    random_perfect_matching,
    recognize_srg,
    triangular,
    tutte_berge_witness,
)
from srgec.matching import matching_is_valid, odd_components_without
from srgec.spectra import eigenvalue_matching_bound
from tests.conftest import (
    brute_max_matching_size,
    enumerate_perfect_matchings,
    random_graph,
)


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_maximum_matching_petersen_is_perfect(petersen):
    m = maximum_matching(petersen)
    assert m.size == 5
    assert matching_is_valid(petersen, m)


def test_maximum_matching_star():
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert maximum_matching(star).size == 1


def test_maximum_matching_seven_cycle():
    assert maximum_matching(cycle(7)).size == 3


def test_maximum_matching_equals_brute_force():
    rnd = random.Random(11)
    for _ in range(150):
        g = random_graph(rnd, rnd.randrange(0, 13), rnd.uniform(0.1, 0.9))
        m = maximum_matching(g)
        assert matching_is_valid(g, m)
        assert m.size == brute_max_matching_size(g)


def test_tutte_berge_witness_identity():
    rnd = random.Random(5)
    for _ in range(150):
        g = random_graph(rnd, rnd.randrange(1, 13), rnd.uniform(0.05, 0.95))
        m, witness = tutte_berge_witness(g)
        assert odd_components_without(g, witness) - len(witness) == g.n - 2 * m.size


def test_has_perfect_matching(petersen):
    assert has_perfect_matching(petersen)
    two_k3 = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    assert not has_perfect_matching(two_k3)
    assert has_perfect_matching(cycle(4))
    assert not has_perfect_matching(cycle(5))


# -- random extraction -----------------------------------------------------------

def test_random_pm_deterministic_per_seed(petersen):
    for seed in range(10):
        a = random_perfect_matching(petersen, RngState(seed))
        b = random_perfect_matching(petersen, RngState(seed))
        assert a == b


def test_random_pm_petersen_valid_and_diverse(petersen):
    all_pms = set(enumerate_perfect_matchings(petersen))
    assert len(all_pms) == 6  # brute-force enumeration
    seen = set()
    for seed in range(100):
        m = random_perfect_matching(petersen, RngState(seed))
        assert m is not None and m.edges in all_pms
        seen.add(m.edges)
    assert len(seen) >= 2


def test_random_pm_four_cycle():
    g = cycle(4)
    pms = set(enumerate_perfect_matchings(g))
    assert len(pms) == 2
    m = random_perfect_matching(g, RngState(0))
    assert m.edges in pms


def test_random_pm_none_for_odd_cycle():
    assert random_perfect_matching(cycle(5), RngState(1)) is None


def test_random_pm_every_matching_reachable():
    # over many seeds the four-cycle should produce both of its matchings
    g = cycle(4)
    seen = {random_perfect_matching(g, RngState(s)).edges for s in range(40)}
    assert len(seen) == 2


# -- greedy extraction -----------------------------------------------------------

def test_greedy_k4_gives_three():
    k4 = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    out = disjoint_pm_greedy(k4, RngState(3))
    assert len(out) == 3
    assert sorted(e for m in out for e in m.edges) == list(k4.edges)


def test_greedy_petersen_between_bound_and_class2(petersen):
    bound = eigenvalue_matching_bound(recognize_srg(petersen))
    for seed in range(8):
        out = disjoint_pm_greedy(petersen, RngState(seed))
        assert len(out) >= bound  # bound is 1
        assert len(out) < 3  # class 2: never a full factorization


def test_greedy_lattice4_meets_bound():
    g = lattice(4)
    bound = eigenvalue_matching_bound(recognize_srg(g))
    assert bound == 2
    for seed in range(5):
        assert len(disjoint_pm_greedy(g, RngState(seed))) >= bound


def test_connected_even_srgs_have_perfect_matchings():
    for g in (
        complement(triangular(5)),
        triangular(4),
        triangular(5),
        lattice(4),
        complete_multipartite(2, 3),
    ):
        assert is_connected(g) and g.n % 2 == 0
        assert has_perfect_matching(g)
