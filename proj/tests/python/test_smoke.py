from fractions import Fraction

import pytest

import qgw


def test_worked_example_report():
    report = qgw.compute(4, [2], [2], order=3)
    assert report["N"] == ["-1/3", "-1/2", "-10/9"]
    assert report["I0"] == ["1", "0", "0", "0"]
    assert report["I1"] == ["0", "4", "18", "400/3"]
    assert report["C"][1] == ["1", "4", "36", "400"]
    assert report["F_qm"] == ["0", "-2/3", "-10/3", "-224/9"]
    assert report["F_gw_q"] == ["0", "-1/3", "-11/6", "-124/9"]
    assert report["Q_of_q"] == ["0", "1", "4", "26"]
    assert report["chern_coeff"] == "2"
    assert report["chi_top"] is None
    assert report["spec"] == {"n": 4, "l": [2], "lp": [2]}


def test_conifold_closed_form():
    invariants = qgw.gw_invariants(2, [], [1, 1], order=8)
    assert qgw.fractions(invariants) == [Fraction(1, 12 * d) for d in range(1, 9)]


def test_quintic_euler_characteristic():
    report = qgw.compute(5, [5], [], order=2)
    assert report["chi_top"] == "-200"
    assert report["chern_coeff"] == "9"


def test_i_function_and_mirror_map():
    i0, i1 = qgw.i_function(4, [2], [2], order=4)
    assert i0 == ["1", "0", "0", "0", "0"]
    assert Fraction(i1[4]) == Fraction(70 * 70, 4)
    assert qgw.mirror_map_series(4, [2], [2], order=3) == ["0", "1", "4", "26"]


def test_initial_constants():
    constants = qgw.initial_constants(2, [], [1, 1], order=5)
    assert constants[0] == ["1"] + ["0"] * 5
    assert constants[1] == ["1"] + ["0"] * 5


def test_invalid_geometry_raises():
    with pytest.raises(ValueError):
        qgw.compute(4, [2], [3], order=3)
    with pytest.raises(ValueError):
        qgw.compute(1, [1], [], order=3)


def test_picard_fuchs():
    assert qgw.pf_check(4, [2], [2], order=5)
    assert qgw.pf_check(2, [], [1, 1], order=5)
