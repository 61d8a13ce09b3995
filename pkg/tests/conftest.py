import time

import mpmath
import pytest

P = 256


@pytest.fixture(autouse=True)
def _precision():
    with mpmath.workprec(P):
        yield


def close(a, b, tol):
    a = getattr(a, "v", a)
    b = getattr(b, "v", b)
    return abs(mpmath.mpmathify(a) - mpmath.mpmathify(b)) < tol


def rel(a, b):
    a = mpmath.mpmathify(getattr(a, "v", a))
    b = mpmath.mpmathify(getattr(b, "v", b))
    return abs(a - b) / abs(b)


_TABLE_CACHE = {}
# wall-clock seconds spent building each cached table
TABLE_SECONDS = {}


def table_cells(table_id):
    """All cells of one table, computed once per session."""
    from zetastrip import run_table

    if table_id not in _TABLE_CACHE:
        t0 = time.perf_counter()
        _TABLE_CACHE[table_id] = run_table(table_id, jobs=4)
        TABLE_SECONDS[table_id] = time.perf_counter() - t0
    return _TABLE_CACHE[table_id]


def find_cell(table_id, sigma, t, eta_rule=None, N=None):
    for c in table_cells(table_id):
        if c.sigma == sigma and c.t == t and (eta_rule is None or c.eta_rule == eta_rule) and (N is None or c.N == N):
            return c
    raise KeyError((table_id, sigma, t, eta_rule, N))
