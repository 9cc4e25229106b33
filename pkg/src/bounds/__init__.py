"""Entropy rates, the gamma/theta constants and theorem verification."""

from .entropy import (  # noqa: F401
    RateTriple, entropy, entropy_inv, rates, rates_table, sauer_shelah_check, subset_count_check,
)
from .barvinok import (  # noqa: F401
    BarvinokParams, barvinok_gamma, beta_for, gamma_hat, optimize_gamma, theta_faces,
)
from .verify import (  # noqa: F401
    TheoremRow, failures, verify_clutter, verify_dijoins, verify_orientations, verify_rgraph,
    verify_theorems,
)
