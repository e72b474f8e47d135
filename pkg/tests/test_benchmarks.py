"""
Timing benchmarks for the recursion engine.

Run with ``pytest tests/test_benchmarks.py --benchmark-only``.
"""
import pytest

pytest.importorskip('pytest_benchmark')

from pybranch.brancher import Brancher  # noqa: E402
from pybranch.branching import weight_multiplicities  # noqa: E402
from pybranch.oracle import freudenthal  # noqa: E402


def test_g2_weight_diagram(benchmark, g2):
    """Cartan branching of a mid-sized G2 module."""
    mu = g2.from_fw([2, 2])
    diagram = benchmark(weight_multiplicities, g2, mu)
    assert diagram.dimension == sum(freudenthal(g2, mu).multiplicities.values())


def test_principal_sl2(benchmark, b1_in_a2):
    """Branching a large A2 module to the principal sl2."""
    mu = b1_in_a2.ambient.from_fw([6, 4])
    result = benchmark(lambda: Brancher(b1_in_a2).branch(mu))
    assert result.total() > 0


@pytest.mark.slow
def test_affine_vacuum(benchmark, twisted_in_affine):
    """A2^(2) ⊂ A2^(1) at depth 8, fan rebuilt every round."""
    mu = twisted_in_affine.ambient.fundamental_weights[0]
    result = benchmark.pedantic(lambda: Brancher(twisted_in_affine).branch(mu, 8), rounds=3)
    assert len(result.by_class) == 2
