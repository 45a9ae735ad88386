import time

import pytest

from multicount.mcount import multinomial_distribution


class DistGrid:
    """Multinomial-value histograms for every cell 1 <= k <= n <= bound.

    One enumeration pass per cell answers every target value m at once,
    so the closed-form sweeps all share a single oracle run.
    """

    def __init__(self, bound: int):
        t0 = time.perf_counter()
        self.bound = bound
        self.cells = {
            (n, k): multinomial_distribution(n, k)
            for n in range(1, bound + 1)
            for k in range(1, n + 1)
        }
        self.build_seconds = time.perf_counter() - t0

    def count(self, m: int, n: int, k: int) -> int:
        return self.cells[(n, k)].get(m, 0)


@pytest.fixture(scope="session")
def dist50() -> DistGrid:
    return DistGrid(50)
