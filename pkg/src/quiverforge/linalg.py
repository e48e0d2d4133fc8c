"""Exact dense linear algebra over a ``Field``.

Matrices are lists of rows; vectors are lists.  Everything is Gaussian
elimination with exact arithmetic, which is plenty for the sizes met here
(at most a few hundred rows).
"""


def rref(rows, ncols, field):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = [[field(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                fac = m[i][c]
                row_r = m[r]
                m[i] = [a - fac * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, ncols, field):
    return len(rref(rows, ncols, field)[1])


def nullspace(rows, ncols, field):
    """Basis of {x : M x = 0} for the matrix with the given rows."""
    red, pivots = rref(rows, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def transpose(rows, nrows, ncols):
    return [[rows[i][j] for i in range(nrows)] for j in range(ncols)]


def left_kernel(rows, ncols, field):
    """Basis of {x : x M = 0}."""
    n = len(rows)
    if n == 0:
        return []
    return nullspace(transpose(rows, n, ncols), n, field)


def det(mat, field):
    n = len(mat)
    m = [[field(x) for x in r] for r in mat]
    d = field.one
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            return field.zero
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d = d * m[c][c]
        inv = field.one / m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                fac = m[i][c] * inv
                m[i] = [a - fac * b for a, b in zip(m[i], m[c])]
    return d


def inverse(mat, field):
    """Inverse of a square matrix, or None when singular."""
    n = len(mat)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(mat)]
    red, pivots = rref(aug, 2 * n, field)
    if pivots[:n] != list(range(n)) or len(red) < n:
        return None
    return [r[n:] for r in red]


def matmul(a, b, field):
    if not a:
        return []
    nb = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * nb
        for k, x in enumerate(row):
            if x:
                brow = b[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] = acc[j] + x * brow[j]
        out.append(acc)
    return out


def vecmat(v, m, ncols, field):
    acc = [field.zero] * ncols
    for k, x in enumerate(v):
        if x:
            row = m[k]
            for j in range(ncols):
                if row[j]:
                    acc[j] = acc[j] + x * row[j]
    return acc


class Echelon:
    """Incrementally maintained reduced basis of a subspace of K^n.

    ``rows[i]`` has a leading 1 in column ``pivots[i]`` and zeros in all other
    pivot columns, so coordinates of a vector in the span can be read off
    directly from its pivot entries.
    """

    def __init__(self, ncols, field):
        self.ncols = ncols
        self.field = field
        self.rows = []
        self.pivots = []

    def reduce(self, v):
        v = list(v)
        for row, pc in zip(self.rows, self.pivots):
            x = v[pc]
            if x:
                v = [a - x * b for a, b in zip(v, row)]
        return v

    def add(self, v):
        """Add a vector; returns True when the span grew."""
        v = self.reduce(v)
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            return False
        inv = self.field.one / v[pc]
        v = [x * inv for x in v]
        for i, row in enumerate(self.rows):
            x = row[pc]
            if x:
                self.rows[i] = [a - x * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(pc)
        return True

    def contains(self, v):
        return not any(self.reduce(v))

    def coordinates(self, v):
        """Coordinates of v (assumed in the span) w.r.t. ``rows``."""
        return [v[pc] for pc in self.pivots]

    def __len__(self):
        return len(self.rows)
