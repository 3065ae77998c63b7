import numpy as np
import pytest

from qra import FinAlgebra


def chain_algebra(products, one, name=None) -> FinAlgebra:
    """A chain-based cyclic DqRA from a product table, for test fixtures."""
    n = len(products)
    leq = [[i <= j for j in range(n)] for i in range(n)]
    rev = [n - 1 - i for i in range(n)]
    return FinAlgebra(np.array(leq), products, one, rev, rev, neg=rev, name=name)


@pytest.fixture
def bool2():
    return FinAlgebra(
        [[1, 1], [0, 1]], [[0, 0], [0, 1]], 1, [1, 0], [1, 0], neg=[1, 0],
        name="bool2",
    )


@pytest.fixture
def sugihara3():
    return chain_algebra([[0, 0, 0], [0, 1, 2], [0, 2, 2]], 1, name="S3")


@pytest.fixture
def lukasiewicz3():
    return chain_algebra([[0, 0, 0], [0, 0, 1], [0, 1, 2]], 2, name="L3")


@pytest.fixture
def lukasiewicz4():
    prods = [[max(0, i + j - 3) for j in range(4)] for i in range(4)]
    return chain_algebra(prods, 3, name="L4")


@pytest.fixture
def sugihara2():
    return FinAlgebra(
        [[1, 1], [0, 1]], [[0, 0], [0, 1]], 1, [1, 0], [1, 0], neg=[1, 0],
        name="S2",
    )


def sugihara4() -> FinAlgebra:
    vals = {0: -2, 1: -1, 2: 1, 3: 2}
    inv = {v: k for k, v in vals.items()}

    def prod(x, y):
        a, b = vals[x], vals[y]
        if abs(a) > abs(b):
            return x
        if abs(b) > abs(a):
            return y
        return x if a == b else inv[min(a, b)]

    return chain_algebra([[prod(x, y) for y in range(4)] for x in range(4)], 2,
                         name="S4")
