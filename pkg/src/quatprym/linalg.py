"""Exact dense linear algebra over Q and Z.

Matrices are plain lists of row lists with ``fractions.Fraction`` entries
(integer routines take and return ints).  Everything in this package is
small enough (a few hundred rows at most) that textbook Gaussian
elimination and Smith reduction are entirely adequate; no floating point
is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


def frac_mat(rows):
    """Copy ``rows`` into a list-of-lists matrix with Fraction entries."""
    return [[Fraction(x) for x in row] for row in rows]


def identity(n):
    return [[F1 if i == j else F0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[F0] * n for _ in range(m)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b):
    if not a or not b:
        return []
    n = len(b)
    assert all(len(row) == n for row in a), "shape mismatch"
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(a):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    m = [row[:] for row in a]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = F1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a):
    return len(rref(a)[1])


def nullspace(a):
    """Basis of {x : a x = 0} (x as column vectors, returned as lists).

    Deterministic: one basis vector per free column of the rref, with the
    free coordinate set to 1.
    """
    if not a:
        return []
    r, pivots = rref(a)
    cols = len(a[0])
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [F0] * cols
        v[fc] = F1
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][fc]
        basis.append(v)
    return basis


def solve(a, b):
    """One solution x of a x = b, or None if inconsistent."""
    if not a:
        return None
    cols = len(a[0])
    aug = [row[:] + [bv] for row, bv in zip(a, b)]
    r, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [F0] * cols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][cols]
    return x


def det(a):
    n = len(a)
    m = [row[:] for row in a]
    d = F1
    for c in range(n):
        pr = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pr is None:
            return F0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d *= m[c][c]
        inv = F1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def inverse(a):
    n = len(a)
    aug = [row[:] + ident_row for row, ident_row in zip(a, identity(n))]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in r]


def row_space_basis(a):
    """Canonical (reduced echelon) basis of the row space."""
    r, pivots = rref(a)
    return [r[i] for i in range(len(pivots))]


def intersect_row_spaces(a, b):
    """Canonical basis of rowspace(a) & rowspace(b)."""
    if not a or not b:
        return []
    na = nullspace(a)
    nb = nullspace(b)
    stacked = na + nb
    if not stacked:
        # both row spaces are the full ambient space
        return row_space_basis(identity(len(a[0])))
    return row_space_basis(nullspace(stacked))


# ---------------------------------------------------------------------------
# integer routines


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def smith_normal_form(a):
    """Smith normal form of an integer matrix.

    Returns (s, u, v) with u * a * v == s, u and v unimodular, and s
    diagonal with each diagonal entry dividing the next.
    """
    s = [[int(x) for x in row] for row in a]
    m = len(s)
    n = len(s[0]) if s else 0
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    t = 0
    while t < min(m, n):
        # locate a nonzero entry of smallest magnitude in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        _swap_rows(s, t, bi)
        _swap_rows(u, t, bi)
        _swap_cols(s, t, bj)
        _swap_cols(v, t, bj)
        dirty = False
        for i in range(t + 1, m):
            if s[i][t] != 0:
                q = s[i][t] // s[t][t]
                if q:
                    s[i] = [x - q * y for x, y in zip(s[i], s[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if s[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if s[t][j] != 0:
                q = s[t][j] // s[t][t]
                if q:
                    for row in s:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if s[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot now divides its row and column; enforce divisibility of the
        # remaining block
        p = s[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            s[t] = [x + y for x, y in zip(s[t], s[offender])]
            u[t] = [x + y for x, y in zip(u[t], u[offender])]
            continue
        t += 1
    for i in range(min(m, n)):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return s, u, v


def elementary_divisors(a):
    """Nonzero diagonal entries of the Smith normal form."""
    s, _, _ = smith_normal_form(a)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i] != 0]


def integer_kernel(a):
    """Basis of the saturated lattice {x in Z^n : a x = 0}.

    With u a v = s in Smith form, the kernel is spanned by the columns of
    v sitting over the zero diagonal of s.  Such a kernel is automatically
    saturated.
    """
    if not a:
        return []
    n = len(a[0])
    s, _, v = smith_normal_form(a)
    nz = len([i for i in range(min(len(s), n)) if s[i][i] != 0])
    cols = list(zip(*v))
    return [list(cols[j]) for j in range(nz, n)]


def int_det(a):
    d = det(frac_mat(a))
    assert d.denominator == 1
    return d.numerator
