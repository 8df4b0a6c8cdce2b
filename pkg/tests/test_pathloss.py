import pytest
from hypothesis import given
from hypothesis import strategies as st

from fluidcell.errors import DomainError, ParameterError
from fluidcell.pathloss import PathLossModel, path_gain


def test_unit_distance():
    assert path_gain(1.0, PathLossModel(K=1.0, eta=3.0)) == 1.0


def test_power_of_two():
    assert path_gain(2.0, PathLossModel(K=1.0, eta=3.0)) == 0.125


def test_high_precision_value():
    # 500**(-2.7), frozen from a 40-digit mpmath evaluation
    assert path_gain(500.0, PathLossModel(K=1.0, eta=2.7)) == pytest.approx(
        5.161560097185728e-08, rel=1e-12
    )


def test_nonpositive_distance_rejected():
    m = PathLossModel()
    with pytest.raises(DomainError):
        path_gain(0.0, m)
    with pytest.raises(DomainError):
        path_gain(-1.0, m)


def test_invalid_model_parameters():
    with pytest.raises(ParameterError):
        PathLossModel(K=0.0)
    with pytest.raises(ParameterError):
        PathLossModel(K=-1.0)
    with pytest.raises(ParameterError):
        PathLossModel(eta=2.0)
    with pytest.raises(ParameterError):
        PathLossModel(eta=1.5)


@given(
    lam=st.floats(min_value=1e-3, max_value=1e3),
    r=st.floats(min_value=1e-2, max_value=1e5),
    eta=st.floats(min_value=2.1, max_value=6.0),
)
def test_homogeneity(lam, r, eta):
    m = PathLossModel(K=1.0, eta=eta)
    assert path_gain(lam * r, m) == pytest.approx(lam ** (-eta) * path_gain(r, m), rel=1e-9)


@pytest.mark.parametrize("eta", [2.5, 3.0, 4.0])
def test_monotone_decreasing_in_distance(eta):
    m = PathLossModel(eta=eta)
    gains = [path_gain(r, m) for r in (10.0, 50.0, 200.0, 1000.0, 5000.0)]
    assert all(a > b for a, b in zip(gains, gains[1:]))


def test_monotone_decreasing_in_eta_beyond_one_meter():
    for r in (1.5, 10.0, 1000.0):
        g = [path_gain(r, PathLossModel(eta=eta)) for eta in (2.2, 2.7, 3.5, 4.5)]
        assert all(a > b for a, b in zip(g, g[1:]))
