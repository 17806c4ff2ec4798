import pytest

from srgec import (
    Inconclusive,
    SearchConfig,
    batch_run,
    build_graph,
    classify,
    complete_multipartite,
    lattice,
    read_certificate,
    row_spread,
    to_graph6,
    triangular,
    verify_certificate,
)
from srgec.errors import RefusedError
from srgec.graph import complete_graph


def cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_classify_refuses_odd_order():
    with pytest.raises(RefusedError) as err:
        classify(cycle(5), SearchConfig())
    assert "odd" in err.value.reason


def test_classify_refuses_disconnected():
    two_k3 = build_graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    with pytest.raises(RefusedError) as err:
        classify(two_k3, SearchConfig())
    assert "disconnected" in err.value.reason


def test_classify_refuses_irregular():
    path = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(RefusedError) as err:
        classify(path, SearchConfig())
    assert "regular" in err.value.reason


def test_classify_petersen_class2(petersen):
    cert = classify(petersen, SearchConfig(seed=0, max_restarts=4))
    assert cert.cls == 2
    assert cert.method == "exact"
    assert cert.exact_attestation.outcome == "notcolorable"
    assert cert.exact_attestation.colors == 3
    assert len(cert.witness) == 4
    assert verify_certificate(petersen, cert)


def test_classify_triangular5_class1():
    g = triangular(5)
    cert = classify(g, SearchConfig(seed=0))
    assert cert.cls == 1
    assert cert.k == 6
    assert verify_certificate(g, cert)


def test_classify_lattice4_spread_uses_constructive_route():
    g = lattice(4)
    cert = classify(g, SearchConfig(seed=0), partition=row_spread(4))
    assert cert.cls == 1
    assert cert.method == "hoffman-complement"
    assert cert.seed is None
    assert verify_certificate(g, cert)


def test_classify_hoffman_route_direct():
    g = complete_multipartite(4, 4)
    from srgec.families import parts_partition

    cert = classify(
        g, SearchConfig(seed=0), partition=parts_partition(4, 4, "hoffman-coloring")
    )
    assert cert.method == "hoffman"
    assert verify_certificate(g, cert)


def test_classify_bipartite_uses_konig():
    g = complete_multipartite(2, 3)
    cert = classify(g, SearchConfig(seed=0))
    assert cert.method == "konig"
    assert verify_certificate(g, cert)


def test_classify_complete_uses_roundrobin():
    g = complete_graph(6)
    cert = classify(g, SearchConfig(seed=0))
    assert cert.method == "roundrobin"
    assert verify_certificate(g, cert)


def test_classify_inconclusive_when_heuristic_fails_and_graph_too_big(petersen):
    out = classify(
        petersen, SearchConfig(seed=0, max_restarts=2), exact_edge_limit=0
    )
    assert isinstance(out, Inconclusive)


def test_classify_class2_only_with_completed_proof(petersen):
    # budget too small for the exact stage: must NOT claim class 2
    out = classify(
        petersen,
        SearchConfig(seed=0, max_restarts=2),
        exact_node_budget=3,
    )
    assert isinstance(out, Inconclusive)


def test_classify_never_reports_class2_without_attestation(petersen, tmp_path):
    # audit emitted certificates by re-reading them
    from srgec import write_certificate

    cert = classify(petersen, SearchConfig(seed=0, max_restarts=3))
    reread = read_certificate(write_certificate(cert))
    assert reread.cls == 2
    assert reread.exact_attestation is not None
    assert reread.exact_attestation.outcome == "notcolorable"
    assert reread.witness is not None


# -- batch ----------------------------------------------------------------------------

def write_g6(path, *graphs):
    path.write_text("".join(to_graph6(g) + "\n" for g in graphs))


def test_batch_family_graphs_all_class1(tmp_path):
    names = []
    for idx, g in enumerate(
        [
            triangular(4),
            triangular(5),
            lattice(4),
            complete_multipartite(2, 3),
            complete_graph(4),
        ]
    ):
        p = tmp_path / f"g{idx}.g6"
        write_g6(p, g)
        names.append(str(p))
    summary = batch_run(names, SearchConfig(seed=5), jobs=1)
    assert summary.count("class1") == 5
    assert summary.ok
    for name in names:
        cert_file = tmp_path / (name.split("/")[-1] + ".cert")
        assert cert_file.exists()
        cert = read_certificate(cert_file.read_text())
        assert cert.cls == 1


def test_batch_petersen_class2(tmp_path, petersen):
    p = tmp_path / "pet.g6"
    write_g6(p, petersen)
    summary = batch_run([str(p)], SearchConfig(seed=0, max_restarts=3), jobs=1)
    assert summary.count("class2") == 1
    assert summary.ok


def test_batch_records_refusals(tmp_path):
    p = tmp_path / "c5.g6"
    write_g6(p, cycle(5))
    summary = batch_run([str(p)], SearchConfig(seed=0), jobs=1)
    assert summary.count("refused") == 1
    assert not summary.ok


def test_batch_records_unreadable_file(tmp_path):
    summary = batch_run([str(tmp_path / "missing.g6")], SearchConfig(seed=0))
    assert summary.count("error") == 1
    assert not summary.ok


def test_batch_reproducible_bytes(tmp_path, petersen):
    a = tmp_path / "a.g6"
    write_g6(a, lattice(4), triangular(4))
    b = tmp_path / "b.g6"
    write_g6(b, petersen)
    paths = [str(a), str(b)]
    batch_run(paths, SearchConfig(seed=11), jobs=1)
    first = [(p + ".cert", open(p + ".cert").read()) for p in paths]
    batch_run(paths, SearchConfig(seed=11), jobs=1)
    second = [(p + ".cert", open(p + ".cert").read()) for p in paths]
    assert first == second


def test_batch_multiline_file(tmp_path):
    p = tmp_path / "many.g6"
    write_g6(p, lattice(4), complete_graph(4), triangular(5))
    summary = batch_run([str(p)], SearchConfig(seed=2), jobs=1)
    assert summary.count("class1") == 3
    blocks = [
        blk for blk in (tmp_path / "many.g6.cert").read_text().split("\n\n") if blk.strip()
    ]
    assert len(blocks) == 3


def test_batch_jobs_match_serial(tmp_path):
    p = tmp_path / "set.g6"
    write_g6(p, lattice(4), triangular(4))
    batch_run([str(p)], SearchConfig(seed=13), jobs=1)
    serial = (tmp_path / "set.g6.cert").read_text()
    batch_run([str(p)], SearchConfig(seed=13), jobs=2)
    parallel = (tmp_path / "set.g6.cert").read_text()
    assert serial == parallel
