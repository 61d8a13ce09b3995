"""Package-wide defaults.

Only the default working precision can be overridden from the environment
(``ZETASTRIP_PRECISION_BITS``); everything else is passed explicitly.
"""

import math
import os

DEFAULT_PRECISION_BITS = int(os.environ.get("ZETASTRIP_PRECISION_BITS", "256"))

# minimum distance of eta/(2 pi) and t/eta from the integers
DEFAULT_DELTA = 1e-3

# regime constant A in "1 <= N < A t"
REGIME_A = 1.0 / 30

DEFAULT_QUAD_TOL = 1e-30

# cap on the number of terms in a direct Dirichlet sum
SUM_CAP = 10**8


def harness_precision(t, base=None):
    """Working precision for tables: at least 128 + ceil(log2 t) bits."""
    base = DEFAULT_PRECISION_BITS if base is None else base
    t = abs(float(t))
    extra = math.ceil(math.log2(t)) if t > 1 else 0
    return max(base, 128 + extra)
