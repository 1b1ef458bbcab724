"""Backend selection for the insertion kernel.

Prefers the compiled extension when it was built; otherwise falls back to
the pure-Python twin.  Both expose the same three functions and are kept
behaviourally identical (tests/test_kernel.py enforces this).
"""

try:
    from plactic._schensted import (
        BACKEND,
        insert_letter,
        insert_letter_trace,
        word_tableau,
    )
except ImportError:  # extension not built; pure Python is fully supported
    from plactic._schensted_py import (
        BACKEND,
        insert_letter,
        insert_letter_trace,
        word_tableau,
    )

__all__ = ["BACKEND", "insert_letter", "insert_letter_trace", "word_tableau"]
