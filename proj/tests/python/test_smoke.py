"""Smoke tests for the pystanley extension module.

The heavy correctness checking lives in the C++ test suite; these tests
confirm the bindings expose the main operations faithfully and that the
brute-force verifiers are reachable from Python.
"""

import json

import pytest

import pystanley as ps

PROJECTIVE_PLANE_FACETS = [
    [1, 2, 4], [1, 2, 6], [1, 3, 4], [1, 3, 5], [1, 5, 6],
    [2, 3, 5], [2, 3, 6], [2, 4, 5], [3, 4, 6], [4, 5, 6],
]


def projective_plane():
    return ps.SimplicialComplex(6, [ps.IndexSet(f) for f in PROJECTIVE_PLANE_FACETS])


def pair_ideal():
    return ps.MonomialIdeal(3, [ps.Monomial([1, 1, 0]), ps.Monomial([0, 1, 1])])


def test_partition_of_the_projective_plane():
    partition = ps.janet_partition(projective_plane())
    assert len(partition.intervals()) == 11
    assert ps.r_vector(partition) == [2, 5, 3, 1]

    report = ps.check_nice(partition)
    assert report.nice is False
    assert [u.indices() for u in report.non_facet_uppers] == [[2, 3]]
    assert report.uncovered_facets == []
    assert ps.is_nice(partition) is False

    # Every face is covered exactly once.
    covered = sum(2 ** iv.rank() for iv in partition.intervals())
    assert covered == len(projective_plane().all_faces()) == 32


def test_decompositions_and_sdepth():
    ideal = pair_ideal()
    of_ideal = ps.janet_ideal(ideal)
    of_complement = ps.janet_complement(ideal)

    bound = ps.default_max_degree(ideal)
    assert ps.verify_ideal_cover(ideal, of_ideal, bound).ok()
    assert ps.verify_complement_cover(ideal, of_complement, bound).ok()

    assert of_complement.sdepth() == 1
    assert ps.render_decomposition_text(of_complement) == (
        "1 * K[x1, x3]\nx2 * K[x2]\n"
    )


def test_partition_matches_complement_decomposition():
    complex = projective_plane()
    spaces = ps.partition_to_spaces(ps.janet_partition(complex))
    direct = ps.janet_complement(ps.stanley_reisner(complex))
    assert spaces.spaces() == direct.spaces()
    assert ps.verify_correspondence(complex).ok()
    assert ps.verify_partition(complex, ps.janet_partition(complex)).ok()


def test_facets_accept_plain_lists():
    explicit = projective_plane()
    implicit = ps.SimplicialComplex(6, PROJECTIVE_PLANE_FACETS)
    assert implicit == explicit


def test_parse_and_render_round_trip():
    ideal = ps.parse_ideal("vars 3\nx1*x2, x2*x3^2\n")
    rendered = ps.render_ideal(ideal)
    assert rendered == "vars 3\nx1*x2\nx2*x3^2\n"
    assert ps.parse_ideal(rendered) == ideal

    complex = ps.parse_complex("vertices 3\n{13}, {2}\n")
    assert ps.stanley_reisner(complex) == ps.parse_ideal("vars 3\nx1*x2, x2*x3\n")


def test_parse_errors_surface_as_value_errors():
    with pytest.raises(ValueError, match="line 2, column 2"):
        ps.parse_ideal("vars 3\nx9\n")
    with pytest.raises(ValueError, match="void complex"):
        ps.janet_partition(ps.SimplicialComplex(3))


def test_partition_json_document():
    doc = json.loads(ps.render_partition_json(ps.janet_partition(projective_plane())))
    assert doc["kind"] == "partition"
    assert doc["arity"] == 6
    assert len(doc["intervals"]) == 11
    assert doc["r_vector"] == [2, 5, 3, 1]
    assert doc["nice"] is False


def test_random_instances_are_deterministic():
    assert ps.random_ideal(7, 3, 3, 5) == ps.random_ideal(7, 3, 3, 5)
    assert ps.random_complex(7, 5, 4) == ps.random_complex(7, 5, 4)

    for seed in range(1, 6):
        ideal = ps.random_ideal(seed, 3, 3, 4)
        bound = ps.default_max_degree(ideal)
        assert ps.verify_ideal_cover(ideal, ps.janet_ideal(ideal), bound).ok()
        assert ps.verify_complement_cover(
            ideal, ps.janet_complement(ideal), bound
        ).ok()

        complex = ps.random_complex(seed, 5, 4)
        assert ps.verify_partition(complex, ps.janet_partition(complex)).ok()
