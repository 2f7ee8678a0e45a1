import numpy as np
import pytest

from qwalk.coin import (
    CoinError,
    NonUnitaryCoinError,
    assign_per_vertex,
    assign_uniform,
    coins_from_json,
    hadamard_biased,
    is_unitary,
)
from qwalk.graph import make_custom, make_line

S = 1 / np.sqrt(2)


def test_balanced_is_hadamard():
    np.testing.assert_allclose(hadamard_biased(0.5), S * np.array([[1, 1], [1, -1]]), atol=1e-15)


def test_limits_are_paulis():
    np.testing.assert_array_equal(hadamard_biased(1), [[1, 0], [0, -1]])
    np.testing.assert_array_equal(hadamard_biased(0), [[0, 1], [1, 0]])


@pytest.mark.parametrize("delta", [-0.01, 1.01, float("nan")])
def test_domain(delta):
    with pytest.raises(CoinError):
        hadamard_biased(delta)


def test_unitary_and_involution_on_grid():
    for delta in np.linspace(0, 1, 101):
        h = hadamard_biased(delta)
        assert np.max(np.abs(h.conj().T @ h - np.eye(2))) < 1e-12
        assert np.max(np.abs(h @ h - np.eye(2))) < 1e-12


def test_uniform_assignment():
    g = make_line(5)
    coins = assign_uniform(g, hadamard_biased(0.5))
    assert len(coins.coins) == 5
    assert all(np.array_equal(coins[x], hadamard_biased(0.5)) for x in range(1, 6))


def test_uniform_degree_mismatch():
    # triangle with an extra self-loop on vertex 1: degrees 3, 2, 2 (balanced)
    g = make_custom([[1, 2, 3], [1, 3], [1, 2]])
    with pytest.raises(CoinError, match="does not fit"):
        assign_uniform(g, hadamard_biased(0.5))


def test_per_vertex_identity_and_bias():
    g = make_line(3)
    assign_per_vertex(g, {x: np.eye(2) for x in (1, 2, 3)})
    coins = assign_per_vertex(g, {1: hadamard_biased(0.1), 2: hadamard_biased(0.5), 3: hadamard_biased(0.9)})
    assert np.allclose(coins[3], hadamard_biased(0.9))


def test_per_vertex_errors():
    g = make_line(3)
    with pytest.raises(CoinError, match="vertex 3"):
        assign_per_vertex(g, {1: np.eye(2), 2: np.eye(2)})
    with pytest.raises(CoinError, match="shape"):
        assign_per_vertex(g, {1: np.eye(3), 2: np.eye(2), 3: np.eye(2)})
    with pytest.raises(NonUnitaryCoinError, match="vertex 2"):
        assign_per_vertex(g, {1: np.eye(2), 2: [[1, 1], [0, 1]], 3: np.eye(2)})


def test_coins_are_read_only():
    coins = assign_uniform(make_line(2), hadamard_biased(0.5))
    with pytest.raises(ValueError):
        coins[1][0, 0] = 0


def test_json_forms():
    g = make_line(2)
    a = coins_from_json(g, {"type": "hadamard", "delta": 0.3})
    assert np.allclose(a[1], hadamard_biased(0.3))
    x = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    b = coins_from_json(g, {"type": "explicit", "matrices": {"1": x, "2": x}})
    assert np.allclose(b[2], [[0, 1], [1, 0]])
    with pytest.raises(CoinError):
        coins_from_json(g, {"type": "grover"})


def test_is_unitary_rejects_non_square():
    assert not is_unitary(np.ones((2, 3)))
