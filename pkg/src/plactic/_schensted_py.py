"""Pure-Python Schensted insertion on column lists.

Reference implementation of the hot kernel; `plactic._schensted` is the
compiled twin with the same API.  A tableau is a tuple of columns, each
column a tuple of letters written top-to-bottom (strictly decreasing).
Column lengths are non-increasing left to right, so row m (counted from
the bottom, 1-based) occupies a prefix of the column list and its entry
in column j is cols[j][len(cols[j]) - m].
"""

BACKEND = "python"


def _insert(cols, g, trace):
    m = 1
    eta = g
    ncols = len(cols)
    while True:
        # columns reaching row m form a prefix
        r = 0
        while r < ncols and len(cols[r]) >= m:
            r += 1
        # leftmost column whose row-m entry exceeds eta
        j = -1
        for i in range(r):
            col = cols[i]
            if col[len(col) - m] > eta:
                j = i
                break
        if j < 0:
            # append eta at the end of row m
            if r == ncols:
                if m != 1:
                    raise AssertionError("new column can only start at row 1")
                cols.append([eta])
            else:
                col = cols[r]
                if len(col) != m - 1:
                    raise AssertionError("append site must have height m-1")
                if col and eta <= col[0]:
                    raise AssertionError("column must stay strictly decreasing")
                col.insert(0, eta)
            if trace is not None:
                trace.append((m, r))
            return
        col = cols[j]
        k = len(col) - m
        bumped = col[k]
        col[k] = eta
        if trace is not None:
            trace.append((m, j))
        eta = bumped
        m += 1


def insert_letter(columns, g):
    """Insert one letter; returns the new column tuple."""
    cols = [list(c) for c in columns]
    _insert(cols, g, None)
    return tuple(tuple(c) for c in cols)


def insert_letter_trace(columns, g):
    """Insert one letter, also returning the (row, column) landing sites."""
    cols = [list(c) for c in columns]
    trace = []
    _insert(cols, g, trace)
    return tuple(tuple(c) for c in cols), tuple(trace)


def word_tableau(word):
    """Columns of the tableau of `word`, starting from the empty tableau."""
    cols = []
    for g in word:
        _insert(cols, g, None)
    return tuple(tuple(c) for c in cols)
