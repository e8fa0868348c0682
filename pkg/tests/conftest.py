from __future__ import annotations

import numpy as np
from hypothesis import HealthCheck, settings, strategies as st

from lapsigma.graph import Graph, pair_order

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << len(pair_order(n))) - 1))
    return Graph.from_mask(n, mask)


def numpy_spectrum(G: Graph) -> np.ndarray:
    """Independent oracle: LAPACK eigenvalues of D - A, descending."""
    A = G.adjacency().astype(float)
    L = np.diag(A.sum(axis=1)) - A
    return np.sort(np.linalg.eigvalsh(L))[::-1]
