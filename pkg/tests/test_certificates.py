import pytest

from srgec import (
    SearchConfig,
    classify,
    lattice,
    read_certificate,
    verify_certificate,
    write_certificate,
)
from srgec.certificates import Certificate, ExactAttestation
from srgec.errors import GraphMismatchError, ParseError


@pytest.fixture
def petersen_cert(petersen):
    return classify(petersen, SearchConfig(seed=1, max_restarts=4))


@pytest.fixture
def lattice_cert():
    return classify(lattice(4), SearchConfig(seed=7))


def test_class2_round_trip(petersen_cert):
    text = write_certificate(petersen_cert)
    again = read_certificate(text)
    assert again == petersen_cert
    assert write_certificate(again) == text


def test_class1_round_trip(lattice_cert):
    text = write_certificate(lattice_cert)
    again = read_certificate(text)
    assert again == lattice_cert
    assert write_certificate(again) == text


def test_wall_ms_not_serialized(petersen_cert):
    assert "wall" not in write_certificate(petersen_cert)


def test_verify_valid_certs(petersen, petersen_cert, lattice_cert):
    assert verify_certificate(petersen, petersen_cert)
    assert verify_certificate(lattice(4), lattice_cert)


def test_verify_rejects_duplicated_factor_edge(lattice_cert):
    factors = list(lattice_cert.factors)
    # overwrite one factor with a copy of another: breaks the partition
    factors[1] = factors[0]
    bad = Certificate(
        lattice_cert.graph6,
        lattice_cert.n,
        lattice_cert.k,
        1,
        lattice_cert.method,
        lattice_cert.seed,
        factors=tuple(factors),
    )
    assert not verify_certificate(lattice(4), bad)


def test_verify_rejects_missing_factor(lattice_cert):
    bad = Certificate(
        lattice_cert.graph6,
        lattice_cert.n,
        lattice_cert.k,
        1,
        lattice_cert.method,
        lattice_cert.seed,
        factors=lattice_cert.factors[:-1],
    )
    assert not verify_certificate(lattice(4), bad)


def test_verify_graph_mismatch(petersen_cert):
    with pytest.raises(GraphMismatchError):
        verify_certificate(lattice(4), petersen_cert)


def test_parse_rejects_unsorted_edges(lattice_cert):
    text = write_certificate(lattice_cert)
    lines = text.splitlines()
    idx = next(i for i, ln in enumerate(lines) if ln.startswith("factor 0: "))
    head, body = lines[idx].split(": ", 1)
    tokens = body.split()
    lines[idx] = f"{head}: {' '.join(reversed(tokens))}"
    with pytest.raises(ParseError) as err:
        read_certificate("\n".join(lines) + "\n")
    assert err.value.line == idx + 1


def test_parse_rejects_bad_magic():
    with pytest.raises(ParseError) as err:
        read_certificate("NOPE 1\n")
    assert err.value.line == 1


def test_parse_rejects_unknown_method(lattice_cert):
    text = write_certificate(lattice_cert).replace("method: heuristic", "method: magic")
    with pytest.raises(ParseError) as err:
        read_certificate(text)
    assert err.value.line == 5


def test_parse_rejects_bad_seed(lattice_cert):
    text = write_certificate(lattice_cert).replace(
        f"seed: {lattice_cert.seed}", "seed: banana"
    )
    with pytest.raises(ParseError):
        read_certificate(text)


def test_parse_rejects_trailing_garbage(lattice_cert):
    text = write_certificate(lattice_cert) + "extra\n"
    with pytest.raises(ParseError):
        read_certificate(text)


def test_class2_witness_must_be_proper(petersen, petersen_cert):
    # move one witness edge into a conflicting class
    witness = [list(cls) for cls in petersen_cert.witness]
    moved = witness[0].pop()
    witness[1].append(moved)
    witness[1].sort()
    bad = Certificate(
        petersen_cert.graph6,
        petersen_cert.n,
        petersen_cert.k,
        2,
        "exact",
        None,
        exact_attestation=petersen_cert.exact_attestation,
        witness=tuple(tuple(cls) for cls in witness),
    )
    assert not verify_certificate(petersen, bad)


def test_class2_requires_attestation_at_k(petersen, petersen_cert):
    bad = Certificate(
        petersen_cert.graph6,
        petersen_cert.n,
        petersen_cert.k,
        2,
        "exact",
        None,
        exact_attestation=ExactAttestation(2, 1, "notcolorable"),
        witness=petersen_cert.witness,
    )
    assert not verify_certificate(petersen, bad)
