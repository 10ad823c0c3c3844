r"""
Sparse exact linear algebra over the coefficient fields.

Vectors are dicts ``{column: coefficient}``; a subspace is kept as a reduced
row-echelon basis keyed by pivot columns.  Elimination is plain field
elimination; pivots prefer rows with few terms and structurally small
coefficients to limit expression swell in the function-field cases.
"""

from __future__ import annotations


class SubspaceBasis:
    """A growing row-echelon basis over a field RingSpec."""

    def __init__(self, ring):
        self.ring = ring
        self.rows = {}        # pivot column -> reduced row (dict)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec):
        vec = {c: v for c, v in vec.items() if not self.ring.is_zero(v)}
        while True:
            hits = [c for c in vec if c in self.rows]
            if not hits:
                return vec
            for col in sorted(hits):
                coeff = vec.get(col)
                if coeff is None or self.ring.is_zero(coeff):
                    continue
                row = self.rows[col]
                for c2, v2 in row.items():
                    cur = vec.get(c2, self.ring.zero())
                    new = cur - coeff * v2
                    if self.ring.is_zero(new):
                        vec.pop(c2, None)
                    else:
                        vec[c2] = new

    def reduce(self, vec):
        """Remainder of vec against the current basis."""
        return self._reduce(vec)

    def contains(self, vec):
        return not self._reduce(vec)

    def add(self, vec):
        """Insert a vector; returns True when the rank grew."""
        rem = self._reduce(vec)
        if not rem:
            return False
        pivot = min(rem, key=lambda col: (_size(rem[col]), col))
        inv = self.ring.invert(rem[pivot])
        row = {c: v * inv for c, v in rem.items()}
        self._back_substitute(pivot, row)
        self.rows[pivot] = row
        return True

    def _back_substitute(self, pivot, row):
        for piv2, row2 in self.rows.items():
            coeff = row2.get(pivot)
            if coeff is None or self.ring.is_zero(coeff):
                continue
            for c, v in row.items():
                cur = row2.get(c, self.ring.zero())
                new = cur - coeff * v
                if self.ring.is_zero(new):
                    row2.pop(c, None)
                else:
                    row2[c] = new

    def vectors(self):
        return [dict(r) for _, r in sorted(self.rows.items())]


def span_rank(ring, vectors):
    basis = SubspaceBasis(ring)
    for v in vectors:
        basis.add(v)
    return basis


def nullspace(ring, rows, columns):
    """Nullspace of the matrix given as a list of sparse rows over the given
    column labels.  Returns a list of sparse solution vectors."""
    # Gaussian elimination tracking pivots
    work = [dict(r) for r in rows if r]
    pivots = {}
    for row in work:
        # reduce against chosen pivots
        for col, prow in pivots.items():
            coeff = row.get(col)
            if coeff is None or ring.is_zero(coeff):
                continue
            for c, v in prow.items():
                cur = row.get(c, ring.zero())
                new = cur - coeff * v
                if ring.is_zero(new):
                    row.pop(c, None)
                else:
                    row[c] = new
        row = {c: v for c, v in row.items() if not ring.is_zero(v)}
        if not row:
            continue
        piv = min(row, key=lambda c: (_size(row[c]), c))
        inv = ring.invert(row[piv])
        row = {c: v * inv for c, v in row.items()}
        for col2, prow2 in pivots.items():
            coeff = prow2.get(piv)
            if coeff is None or ring.is_zero(coeff):
                continue
            for c, v in row.items():
                cur = prow2.get(c, ring.zero())
                new = cur - coeff * v
                if ring.is_zero(new):
                    prow2.pop(c, None)
                else:
                    prow2[c] = new
        pivots[piv] = row
    free = [c for c in columns if c not in pivots]
    sols = []
    for fc in free:
        vec = {fc: ring.one()}
        for piv, row in pivots.items():
            coeff = row.get(fc)
            if coeff is not None and not ring.is_zero(coeff):
                vec[piv] = -coeff
        sols.append(vec)
    return sols


def _size(coeff):
    terms = getattr(coeff, "terms", None)
    if terms is not None:
        return len(terms)
    num = getattr(coeff, "num", None)
    if num is not None:
        return len(num.terms) + 1
    return 1


def solve(ring, matrix, rhs):
    """Solve matrix * x = rhs for a square dict-of-dicts matrix with keys
    (row, col) given as nested dicts; raises on a singular system."""
    # matrix: list of rows (dicts over col); rhs: list of ring values
    n = len(matrix)
    aug = []
    for i, row in enumerate(matrix):
        r = dict(row)
        r[("rhs",)] = rhs[i]
        aug.append(r)
    pivots = {}
    cols = sorted({c for row in matrix for c in row})
    for row in aug:
        for col, prow in pivots.items():
            coeff = row.get(col)
            if coeff is None or ring.is_zero(coeff):
                continue
            for c, v in prow.items():
                cur = row.get(c, ring.zero())
                new = cur - coeff * v
                if ring.is_zero(new):
                    row.pop(c, None)
                else:
                    row[c] = new
        live = [c for c in row if c != ("rhs",) and not ring.is_zero(row[c])]
        if not live:
            if ("rhs",) in row and not ring.is_zero(row[("rhs",)]):
                raise ArithmeticError("inconsistent linear system")
            continue
        piv = min(live, key=lambda c: (_size(row[c]), c))
        inv = ring.invert(row[piv])
        row = {c: v * inv for c, v in row.items()}
        for prow2 in pivots.values():
            coeff = prow2.get(piv)
            if coeff is None or ring.is_zero(coeff):
                continue
            for c, v in row.items():
                cur = prow2.get(c, ring.zero())
                new = cur - coeff * v
                if ring.is_zero(new):
                    prow2.pop(c, None)
                else:
                    prow2[c] = new
        pivots[piv] = row
    if len(pivots) < len(cols):
        raise ArithmeticError("singular linear system")
    out = {}
    for piv, row in pivots.items():
        out[piv] = row.get(("rhs",), ring.zero())
    return out


def invert_matrix(ring, matrix):
    """Inverse of a dense square matrix given as list of lists."""
    n = len(matrix)
    aug = [list(row) + [ring.one() if i == j else ring.zero() for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = None
        best = None
        for i in range(col, n):
            v = aug[i][col]
            if not ring.is_zero(v):
                size = _size(v)
                if best is None or size < best:
                    piv, best = i, size
        if piv is None:
            raise ArithmeticError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ring.invert(aug[col][col])
        aug[col] = [v * inv for v in aug[col]]
        for i in range(n):
            if i == col:
                continue
            f = aug[i][col]
            if ring.is_zero(f):
                continue
            aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]
