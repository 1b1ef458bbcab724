"""Compiled and pure kernels must be indistinguishable."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plactic import _schensted_py
from plactic.kernel import BACKEND

compiled = pytest.importorskip(
    "plactic._schensted", reason="compiled kernel not built"
)


def test_backend_reports_compiled():
    assert BACKEND == "cython"
    assert compiled.BACKEND == "cython"
    assert _schensted_py.BACKEND == "python"


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=6), max_size=40))
def test_word_tableau_equivalence(letters):
    w = tuple(letters)
    assert compiled.word_tableau(w) == _schensted_py.word_tableau(w)


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=5), max_size=20),
    st.integers(min_value=1, max_value=5),
)
def test_insert_trace_equivalence(letters, g):
    base = _schensted_py.word_tableau(tuple(letters))
    assert compiled.insert_letter(base, g) == _schensted_py.insert_letter(base, g)
    assert compiled.insert_letter_trace(base, g) == _schensted_py.insert_letter_trace(
        base, g
    )


def test_inputs_not_mutated():
    base = ((3, 1), (2,))
    compiled.insert_letter(base, 1)
    assert base == ((3, 1), (2,))
