"""Dense exact linear algebra over a coefficient field.

Matrices are lists of row lists, vectors are lists; the field instance is
passed explicitly.  Sizes here are desk scale (a few hundred at most), so
plain fraction-free-less Gaussian elimination is fine and keeps everything
exact and deterministic.
"""

from __future__ import annotations


def zeros(field, m, n):
    z = field.zero
    return [[z] * n for _ in range(m)]


def identity(field, n):
    mat = zeros(field, n, n)
    for i in range(n):
        mat[i][i] = field.one
    return mat


def copy_matrix(a):
    return [row[:] for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def transpose_shaped(a, nrows, ncols):
    """Transpose with an explicit result shape (keeps empty matrices sized)."""
    return [[a[c][r] for c in range(ncols)] for r in range(nrows)]


def mat_mul(field, a, b):
    if not a or not b:
        return [[field.zero] * (len(b[0]) if b else 0) for _ in a]
    n, m, p = len(a), len(b), len(b[0])
    out = zeros(field, n, p)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for k in range(m):
            aik = arow[k]
            if aik == field.zero:
                continue
            brow = b[k]
            for j in range(p):
                if brow[j] != field.zero:
                    orow[j] = field.add(orow[j], field.mul(aik, brow[j]))
    return out


def mat_add(field, a, b):
    return [
        [field.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)
    ]


def mat_sub(field, a, b):
    return [
        [field.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)
    ]


def mat_neg(field, a):
    return [[field.neg(x) for x in row] for row in a]


def mat_scale(field, c, a):
    return [[field.mul(c, x) for x in row] for row in a]


def mat_vec(field, a, v):
    return [
        _dot(field, row, v) for row in a
    ]


def _dot(field, u, v):
    s = field.zero
    for x, y in zip(u, v):
        if x != field.zero and y != field.zero:
            s = field.add(s, field.mul(x, y))
    return s


def is_zero_matrix(field, a):
    return all(x == field.zero for row in a for x in row)


def rref(field, a):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    mat = copy_matrix(a)
    if not mat:
        return [], []
    nrows, ncols = len(mat), len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        pr = None
        for i in range(r, nrows):
            if mat[i][c] != field.zero:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != field.zero:
                f = mat[i][c]
                mat[i] = [
                    field.sub(x, field.mul(f, y)) for x, y in zip(mat[i], mat[r])
                ]
        pivots.append(c)
        r += 1
    return mat, pivots


def rank(field, a):
    return len(rref(field, a)[1])


def kernel_basis(field, a, ncols=None):
    """Basis of the right null space {v : a v = 0}, as a list of vectors.

    ncols must be given when a has no rows.
    """
    if a:
        ncols = len(a[0])
    if ncols is None:
        raise ValueError("ncols required for empty matrix")
    if not a:
        return [unit_vector(field, ncols, i) for i in range(ncols)]
    red, pivots = rref(field, a)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][fc])
        basis.append(v)
    return basis


def unit_vector(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


def solve(field, a, b):
    """One solution of a x = b, or None if inconsistent.

    b may be a vector or a matrix of column right-hand sides; the result has
    the same shape.
    """
    vector_rhs = b and not isinstance(b[0], list)
    cols = [b] if vector_rhs else transpose(b)
    ncols = len(a[0]) if a else 0
    aug = [row[:] + [col[i] for col in cols] for i, row in enumerate(a)]
    red, pivots = rref(field, aug)
    # Any pivot beyond the coefficient block means inconsistency.
    if any(p >= ncols for p in pivots):
        return None
    sols = []
    for k in range(len(cols)):
        x = [field.zero] * ncols
        for r, pc in enumerate(pivots):
            x[pc] = red[r][ncols + k]
        sols.append(x)
    if vector_rhs:
        return sols[0]
    return transpose(sols)


class Echelon:
    """Incrementally maintained reduced row space.

    Supports membership tests, residue computation, and growing by new
    vectors; used for ideal saturation, span comparisons, and quotients.
    """

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []  # kept reduced, sorted by pivot
        self.pivots = []  # pivot column per row

    def reduce(self, v):
        """Residue of v modulo the current row space."""
        field = self.field
        v = v[:]
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != field.zero:
                v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, row)]
        return v

    def add(self, v):
        """Insert v; returns True if the row space grew."""
        field = self.field
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x != field.zero), None)
        if p is None:
            return False
        inv = field.inv(v[p])
        v = [field.mul(inv, x) for x in v]
        # Back-substitute into existing rows to stay fully reduced.
        for i, row in enumerate(self.rows):
            c = row[p]
            if c != field.zero:
                self.rows[i] = [
                    field.sub(x, field.mul(c, y)) for x, y in zip(row, v)
                ]
        k = next(
            (i for i, q in enumerate(self.pivots) if q > p), len(self.pivots)
        )
        self.rows.insert(k, v)
        self.pivots.insert(k, p)
        return True

    def contains(self, v):
        return all(x == self.field.zero for x in self.reduce(v))

    @property
    def rank(self):
        return len(self.rows)

    def coords(self, v, basis):
        """Express v over the given spanning vectors, or None."""
        return solve(self.field, transpose(basis), v)


def quotient_basis(field, space, sub, ncols):
    """Representatives in `space` of a basis of span(space)/span(sub).

    Returns (reps, coords) where coords(v) gives the coordinates of any
    v in span(space) over the representatives, modulo span(sub).
    """
    ech_sub = Echelon(field, ncols)
    for v in sub:
        ech_sub.add(v)
    ech = Echelon(field, ncols)
    for v in sub:
        ech.add(v)
    reps = []
    for v in space:
        if ech.add(v):
            reps.append(v)
    # Residues of the representatives modulo sub form an independent set;
    # coordinates are computed against those residues.
    res = [ech_sub.reduce(r) for r in reps]

    def coords(v):
        c = solve(field, transpose(res), ech_sub.reduce(v)) if reps else []
        if c is None:
            raise ValueError("vector not in the space")
        return c

    return reps, coords
