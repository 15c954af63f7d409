# -*- coding: utf-8 -*-
"""Tests for the exception hierarchy."""

import pytest

from src.core.errors import (
    AmbiguousBranchError,
    FractionalExponentError,
    ImaginaryInExactBackendError,
    InputError,
    NegativeExponentError,
    NoConvergenceError,
    NonRationalRootError,
    PolynomialSyntaxError,
    PuiseuxError,
)


class TestErrors:
    @pytest.mark.parametrize(
        "error_cls",
        [NegativeExponentError, ImaginaryInExactBackendError, FractionalExponentError],
    )
    def test_input_errors(self, error_cls):
        assert issubclass(error_cls, InputError)
        assert issubclass(error_cls, PuiseuxError)

    def test_syntax_error_carries_position(self):
        error = PolynomialSyntaxError("expected a term", 3, "x +")
        assert error.position == 3
        assert error.text == "x +"
        assert "position 3" in str(error)

    def test_non_rational_root_carries_factor(self):
        error = NonRationalRootError("no rational root", factor=[-2, 0, 1])
        assert error.factor == [-2, 0, 1]
        assert error.branch_id is None
        assert not isinstance(error, InputError)

    def test_no_convergence_carries_precision(self):
        assert NoConvergenceError("stuck", precision=128).precision == 128

    def test_ambiguous_branch_carries_candidates(self):
        assert AmbiguousBranchError("two", candidates=2).candidates == 2
