"""Runs the usage examples embedded in the library docstrings."""

import doctest

import deodhar
import deodhar.cli
import deodhar.components
import deodhar.diagrams
import deodhar.errors
import deodhar.linalg
import deodhar.pinning
import deodhar.positivity
import deodhar.subexpr
import deodhar.weyl

MODULES = [
    deodhar,
    deodhar.cli,
    deodhar.components,
    deodhar.diagrams,
    deodhar.errors,
    deodhar.linalg,
    deodhar.pinning,
    deodhar.positivity,
    deodhar.subexpr,
    deodhar.weyl,
]


def test_doctests():
    total = 0
    for module in MODULES:
        result = doctest.testmod(module, verbose=False)
        assert result.failed == 0, f"doctest failure in {module.__name__}"
        total += result.attempted
    assert total > 0
