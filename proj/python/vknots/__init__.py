"""Linking-number invariants of virtual knots from signed Gauss codes.

The heavy lifting happens in the compiled extension; this package re-exports
its functions.  All of them take Gauss codes as text (e.g. "O1-U2-O3-U1-O2-U3-")
and return plain dicts/lists shaped like the CLI's JSON output.
"""

from ._core import (
    gamma,
    gamma2_bar,
    gamma2_oracle,
    gamma_bar,
    gamma_oracle,
    knot_from_pair_smoothing,
    opposite_parity_pairs,
    parities,
    parse,
    random_code,
    report,
    scramble,
    selftest,
    smooth,
    switch_crossing,
    writhe,
)

__all__ = [
    "gamma",
    "gamma2_bar",
    "gamma2_oracle",
    "gamma_bar",
    "gamma_oracle",
    "knot_from_pair_smoothing",
    "opposite_parity_pairs",
    "parities",
    "parse",
    "random_code",
    "report",
    "scramble",
    "selftest",
    "smooth",
    "switch_crossing",
    "writhe",
]
