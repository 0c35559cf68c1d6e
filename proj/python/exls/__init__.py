"""Exact brackets, embeddings and verification suites for E(5,10), E(4,4), E(1,6) and K(1,6)."""

import json

from ._exls import (
    E16,
    E44,
    E510,
    K16,
    HeadroomError,
    InvariantError,
    MismatchError,
    ParseError,
    Psi,
    annihilated_by_negative,
    bracket,
    degree_510,
    degree_e16_principal,
    degree_e44_principal,
    degree_k16_principal,
    enumerate_slice,
    op_A,
    op_iota,
    psi,
    psi_inverse,
    suite_names,
    table,
    v_r,
    verify_json,
    weight_of,
)

__version__ = "0.1.0"


def verify(suite, **kwargs):
    """Runs a suite and returns its report as a dict."""
    return json.loads(verify_json(suite, **kwargs))
