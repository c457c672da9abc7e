from fractions import Fraction

import pytest

intspec = pytest.importorskip("intspec")


def test_density_u7():
    r = intspec.density("PSL2:q=7", "family=U")
    assert intspec.fraction(r["rho"]) == 2
    assert r["certified"]


def test_torus_psl2_11():
    r = intspec.density("PSL2:q=11", "family=torus")
    assert intspec.fraction(r["rho"]) == Fraction(12, 5)


def test_spectrum_psl2_5():
    s = intspec.spectrum("PSL2:q=5")
    assert len(s["rows"]) == 9


def test_max_coclique_pentagon():
    size, witness, optimal = intspec.max_coclique(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert (size, optimal) == (2, True)
    assert len(witness) == 2


def test_bad_spec_raises():
    with pytest.raises(ValueError):
        intspec.density("PSL2:q=6", "family=U")
