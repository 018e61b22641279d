import math

import pytest

from conftest import far_circle, hopf_pair, hopf_plus_split
from trilink.errors import CorrespondenceMismatch, DisjointnessViolation
from trilink import gauss
from trilink.gauss import (
    PairwiseReport,
    invariant_report,
    pairwise_linking,
    round_invariant,
    subtorus_degree,
)
from trilink.link import Link3, circle


def test_hopf_pair_links_once():
    A, B = hopf_pair()
    lk = pairwise_linking(A, B, 512)
    # with these orientations the Gauss integral comes out at -1
    assert abs(lk + 1) < 1e-6


def test_hopf_pair_converged():
    A, B = hopf_pair()
    assert abs(pairwise_linking(A, B, 256) - pairwise_linking(A, B, 512)) < 1e-9


def test_split_pair():
    A = circle((0, 0, 0), (1, 0, 0), (0, 1, 0))
    B = circle((20, 0, 0), (1, 0, 0), (0, 1, 0))
    assert abs(pairwise_linking(A, B, 512)) < 1e-9


def test_borromean_pairs(borromean):
    X, Y, Z = borromean.components
    for A, B in ((Y, Z), (Z, X), (X, Y)):
        assert abs(pairwise_linking(A, B, 512)) < 1e-6


def test_symmetry_and_orientation_reversal(rng):
    A, B = hopf_pair()
    assert abs(pairwise_linking(A, B) - pairwise_linking(B, A)) < 1e-12
    assert abs(pairwise_linking(A.reversed(), B) + pairwise_linking(A, B)) < 1e-12

    L = hopf_plus_split("z")
    base = gauss.pairwise_report(L).values
    flipped = gauss.pairwise_report(Link3(L.cx.reversed(), L.cy, L.cz)).values
    # reversing X negates Lk(Z,X) and Lk(X,Y) and leaves Lk(Y,Z)
    assert flipped[0] == pytest.approx(base[0], abs=1e-12)
    assert flipped[1] == pytest.approx(-base[1], abs=1e-12)
    assert flipped[2] == pytest.approx(-base[2], abs=1e-12)


def test_touching_curves_rejected():
    A = circle((0, 0, 0), (1, 0, 0), (0, 1, 0))
    B = circle((2, 0, 0), (1, 0, 0), (0, 0, 1))  # passes through (1, 0, 0)
    with pytest.raises(DisjointnessViolation):
        pairwise_linking(A, B, 64)


@pytest.mark.parametrize("axis", "stu")
def test_borromean_degrees_vanish(borromean, axis):
    assert abs(subtorus_degree(borromean, axis, 0.0, 128)) < 1e-3


@pytest.mark.parametrize("axis", "stu")
def test_split_degrees_vanish(split_unlink, axis):
    assert abs(subtorus_degree(split_unlink, axis, 0.0, 64)) < 1e-6


@pytest.mark.parametrize("slot, axis, pair", [("x", "s", (1, 2)), ("y", "t", (2, 0)), ("z", "u", (0, 1))])
def test_degree_matches_gauss_integral(slot, axis, pair):
    L = hopf_plus_split(slot)
    comps = L.components
    lk = pairwise_linking(comps[pair[0]], comps[pair[1]], 512)
    deg = subtorus_degree(L, axis, 0.0, 128)
    assert round(deg) == round(lk) != 0
    assert abs(deg - lk) < 1e-2
    for other in set("stu") - {axis}:
        assert abs(subtorus_degree(L, other, 0.0, 128)) < 1e-2


@pytest.mark.parametrize("axis", "stu")
def test_degree_independent_of_slice(axis, borromean):
    L = hopf_plus_split("x")
    for link in (L, borromean):
        d0 = subtorus_degree(link, axis, 0.0, 128)
        d1 = subtorus_degree(link, axis, math.pi, 128)
        assert abs(d0 - d1) < 1e-6


def test_round_invariant():
    assert round_invariant(-0.99999997) == -1
    assert round_invariant(0.05) == 0
    assert round_invariant(0.45) is None


def test_pairwise_report_residual():
    rep = PairwiseReport(1e-8, -0.9999, 2.02)
    assert rep.rounded == (0, -1, 2)
    assert rep.residual == pytest.approx(0.02)
    assert rep.converged and not rep.null
    assert not PairwiseReport(0.3, 0, 0).converged


def test_invariant_report(borromean, split_unlink):
    rep = invariant_report(borromean)
    assert rep.gauss.null and all(abs(v) < 1e-6 for v in rep.degrees.values())
    assert invariant_report(split_unlink).pqr == (0, 0, 0)
    hopf = invariant_report(hopf_plus_split("x"))
    assert hopf.pqr == (-1, 0, 0)
    assert round(hopf.degrees["s"]) == -1


def test_invariant_report_flags_mismatch(monkeypatch, borromean):
    monkeypatch.setattr(gauss, "subtorus_degrees", lambda link, grid: {"s": 0.0, "t": 0.7, "u": 0.0})
    with pytest.raises(CorrespondenceMismatch) as err:
        invariant_report(borromean)
    assert err.value.entry == "t"


def test_far_component_does_not_matter():
    A, B = hopf_pair()
    near = Link3(circle((8, 0, 0), (1, 0, 0), (0, 1, 0)), A, B)
    far = Link3(far_circle(), A, B)
    assert round(subtorus_degree(near, "s")) == round(subtorus_degree(far, "s"))
