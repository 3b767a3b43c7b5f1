"""Specialization preorder, point closures, closed sets, compactness."""

import pytest

from mfann.alexandrov import (
    AnnFamily,
    build_preorder,
    closure,
    compactness_verdict,
    down_sets,
)
from mfann.families import EXPECTED_VERDICTS, build_family
from mfann.fields import PrimeField
from mfann.ideals import IdealSpec, ParametricIdealFamily
from mfann.mf import RING_IDS, ring_spec

F13 = PrimeField(13, 5)
XX = ring_spec("a-inf-1", F13)


def I(spec, *gens):
    return IdealSpec.from_strings(spec, gens)


def chain_family():
    # Ann(A) = (x, y) > Ann(B) = (x, y^2) > Ann(C) = (x, y^3): a 3-chain
    return AnnFamily(
        XX,
        (("A", I(XX, "x", "y")), ("B", I(XX, "x", "y^2")), ("C", I(XX, "x", "y^3"))),
        N=8,
    )


def test_preorder_of_chain():
    edges = set(build_preorder(chain_family()))
    # smaller ideal -> larger ideal edges (C below B below A)
    assert ("C", "B") in edges and ("B", "A") in edges and ("C", "A") in edges
    assert ("A", "B") not in edges
    assert all((lab, lab) in edges for lab in "ABC")


def test_closure_is_down_set():
    assert closure(chain_family(), "B") == ["B", "C"]
    assert closure(chain_family(), "A") == ["A", "B", "C"]
    assert closure(chain_family(), "C") == ["C"]


def test_down_sets_of_two_chain():
    fam = AnnFamily(XX, (("A", I(XX, "x", "y")), ("B", I(XX, "x", "y^2"))), N=8)
    sets = down_sets(fam)
    assert [sorted(s) for s in sets] == [[], ["B"], ["A", "B"]]


def test_down_sets_of_antichain():
    # incomparable ideals: all four subsets are closed
    fam = AnnFamily(XX, (("A", I(XX, "x", "y^2")), ("B", I(XX, "y"))), N=8)
    sets = down_sets(fam)
    assert len(sets) == 4


def test_compact_when_minimum_attained():
    fam = AnnFamily(XX, (("A", I(XX, "x", "y")), ("B", I(XX, "x"))), N=8)
    verdict = compactness_verdict(fam)
    assert verdict.verdict == "compact" and verdict.minimum == "B"
    assert verdict.global_intersection.format() == "(x)"


def test_descending_chain_without_limit_is_undetermined():
    fam = AnnFamily(
        XX,
        (),
        ((
            "phi",
            ParametricIdealFamily(XX, (XX.poly("x"),), XX.poly("y"), 0),
            None,
        ),),
        N=8,
    )
    verdict = compactness_verdict(fam, n_max=5)
    assert verdict.verdict == "undetermined"


def test_not_compact_evidence_for_pure_chain():
    fam = AnnFamily(
        XX,
        (),
        ((
            "phi",
            ParametricIdealFamily(XX, (XX.poly("x"),), XX.poly("y"), 0),
            I(XX, "x"),
        ),),
        N=8,
    )
    verdict = compactness_verdict(fam, n_max=6)
    assert verdict.verdict == "not-compact-evidence"
    assert verdict.global_intersection.format() == "(x)"
    assert verdict.m_primary == "not-m-primary-evidence"


@pytest.mark.parametrize("ring_id", RING_IDS)
def test_full_families_are_compact(ring_id):
    fam = build_family(ring_id, F13, N=8)
    verdict = compactness_verdict(fam, n_max=4)
    expected_verdict, expected_witness, _ = EXPECTED_VERDICTS[ring_id]
    assert verdict.verdict == expected_verdict
    assert verdict.minimum == expected_witness


def test_verdict_serialization_and_dot():
    fam = AnnFamily(XX, (("A", I(XX, "x", "y")), ("B", I(XX, "x"))), N=6)
    verdict = compactness_verdict(fam)
    data = verdict.to_json()
    assert data["verdict"] == "compact" and data["minimum"] == "B"
    dot = verdict.to_dot()
    assert dot.startswith("digraph") and '"B" -> "A"' in dot
