"""Exact arithmetic in the type D and type B descent algebras."""

import json

from ._core import (
    Error,
    class_of,
    enumerate_basis,
    multiply,
    normalize_index,
    oracle_multiply,
    run_cli,
    subset_of,
    templates,
)

__all__ = [
    "Error",
    "class_of",
    "enumerate_basis",
    "format_product",
    "multiply",
    "normalize_index",
    "oracle_multiply",
    "run_cli",
    "subset_of",
    "templates",
    "verify",
]


def format_product(terms):
    """Render {index: coefficient} the way the command-line tool does."""
    if not terms:
        return "0"
    return " + ".join(f"{c}*{q}" for q, c in terms.items())


def verify(suite, n, type="D", jobs=1):
    """Run a verification suite; returns the parsed JSON report."""
    code, out, err = run_cli(
        ["verify", suite, "--type", type, "--n", str(n), "--jobs", str(jobs), "--format", "json", "--no-cache"]
    )
    if code == 2:
        raise Error(err.strip())
    return json.loads(out)
