from fractions import Fraction

import pytest

import supergrading as sg


def test_gl_count():
    report = sg.classify("gl", [3, 1], [4, 2])
    assert report["count"] == 27
    assert len(report["gradings"]) == 27
    assert len(sg.pyramids([3, 1], [4, 2])) == 27


def test_gl_oracle_agrees():
    report = sg.classify("gl", [2, 1], [2], oracle=True)
    assert report["oracle_agreement"] is True


def test_osp_spot_check():
    report = sg.classify("osp", [3, 3], [4], oracle=True)
    assert report["count"] == 3
    assert report["case"] == "even-i"
    assert report["oracle_agreement"] is True
    assert sg.classify("osp", [5, 3, 1], [3, 3])["count"] == 1


def test_dimensions():
    assert sg.centralizer_dims("gl", 4, 6, [3, 1], [4, 2]) == (16, 14)
    assert sg.dim_formula("gl", [3, 1], [4, 2]) == (16, 14)
    assert sg.centralizer_dims("osp", 9, 6, [5, 3, 1], [3, 3])[1] == 14


def test_goodness():
    assert sg.is_good("gl", 2, 0, [-1, 1], [2], [])
    assert not sg.is_good("gl", 2, 0, [0, 4], [2], [])
    with pytest.raises(sg.NonIntegralGrading):
        sg.is_good("gl", 2, 0, [Fraction(1, 2), 0], [2], [])


def test_characteristic():
    base = sg.characteristic("gl", 1, 1, [-1, 1])
    assert base == {"simple": [[-1, 1]], "marks": [2]}


def test_orthosymplectic():
    assert sg.is_orthosymplectic([5, 3, 1], [3, 3])
    assert not sg.is_orthosymplectic([2], [2])
    with pytest.raises(sg.NotOrthosymplectic):
        sg.classify("osp", [2], [2])


def test_acceptance_criterion():
    passed, seconds, detail = sg.run_criterion(1)
    assert passed, detail
