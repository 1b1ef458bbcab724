# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Schensted insertion on column lists.

Twin of plactic._schensted_py: same API, same algorithm, typed loops.
"""

BACKEND = "cython"


cdef int _insert(list cols, int g, list trace) except -1:
    cdef int m = 1
    cdef int eta = g
    cdef int ncols = len(cols)
    cdef int r, i, j, k, bumped
    cdef list col
    while True:
        r = 0
        while r < ncols and len(<list>cols[r]) >= m:
            r += 1
        j = -1
        for i in range(r):
            col = <list>cols[i]
            if <int>col[len(col) - m] > eta:
                j = i
                break
        if j < 0:
            if r == ncols:
                if m != 1:
                    raise AssertionError("new column can only start at row 1")
                cols.append([eta])
            else:
                col = <list>cols[r]
                if len(col) != m - 1:
                    raise AssertionError("append site must have height m-1")
                if col and eta <= <int>col[0]:
                    raise AssertionError("column must stay strictly decreasing")
                col.insert(0, eta)
            if trace is not None:
                trace.append((m, r))
            return 0
        col = <list>cols[j]
        k = len(col) - m
        bumped = <int>col[k]
        col[k] = eta
        if trace is not None:
            trace.append((m, j))
        eta = bumped
        m += 1


def insert_letter(columns, g):
    """Insert one letter; returns the new column tuple."""
    cdef list cols = [list(c) for c in columns]
    _insert(cols, g, None)
    return tuple(tuple(c) for c in cols)


def insert_letter_trace(columns, g):
    """Insert one letter, also returning the (row, column) landing sites."""
    cdef list cols = [list(c) for c in columns]
    cdef list trace = []
    _insert(cols, g, trace)
    return tuple(tuple(c) for c in cols), tuple(trace)


def word_tableau(word):
    """Columns of the tableau of `word`, starting from the empty tableau."""
    cdef list cols = []
    cdef int g
    for g in word:
        _insert(cols, g, None)
    return tuple(tuple(c) for c in cols)
