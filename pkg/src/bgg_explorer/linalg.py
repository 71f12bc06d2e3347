"""Exact linear algebra over Q on sparse rows.

Matrices coming out of the chain complexes and symbol maps are very sparse
with small integer entries, so a dictionary-of-rows elimination with
``Fraction`` entries beats a dense generic implementation by a wide margin.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError

_ZERO = Fraction(0)


def _clean(row: dict) -> dict:
    return {c: Fraction(v) for c, v in row.items() if v != 0}


def _axpy(target: dict, factor, source: dict) -> None:
    """target -= factor * source, in place."""
    for c, v in source.items():
        nv = target.get(c, _ZERO) - factor * v
        if nv:
            target[c] = nv
        else:
            target.pop(c, None)


class Echelon:
    """Incrementally maintained row-echelon basis of a row space.

    Rows are dicts ``column -> Fraction``; each stored row is normalized so
    that its leading (smallest) column carries a 1.
    """

    def __init__(self):
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            _axpy(row, row[lead], piv)
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        red = self.reduce(_clean(row))
        if not red:
            return False
        lead = min(red)
        inv = 1 / red[lead]
        self.pivots[lead] = {c: v * inv for c, v in red.items()}
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(_clean(row))

    def rref(self) -> dict:
        """Fully reduced rows keyed by pivot column."""
        cols = sorted(self.pivots, reverse=True)
        out = {}
        for p in cols:
            row = dict(self.pivots[p])
            for c in sorted(c for c in row if c != p and c in out):
                if c in row:
                    _axpy(row, row[c], out[c])
            out[p] = row
        return out


class LinearMapQ:
    """Sparse exact matrix with optional basis metadata.

    ``rows[i]`` maps column index to a nonzero Fraction.  ``source`` and
    ``target`` are free-form basis descriptions (lists of labels).
    """

    def __init__(self, nrows: int, ncols: int, rows=None, source=None, target=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)] if rows is None else [_clean(r) for r in rows]
        if len(self.rows) != nrows:
            raise DomainError("row count does not match shape")
        self.source = source
        self.target = target
        if source is not None and len(source) != ncols:
            raise DomainError("source basis does not match column count")
        if target is not None and len(target) != nrows:
            raise DomainError("target basis does not match row count")
        self._rank = None

    @classmethod
    def from_dense(cls, dense, source=None, target=None) -> "LinearMapQ":
        dense = [list(r) for r in dense]
        ncols = len(dense[0]) if dense else 0
        rows = [{j: v for j, v in enumerate(r) if v} for r in dense]
        return cls(len(dense), ncols, rows, source, target)

    @classmethod
    def from_columns(cls, nrows: int, columns, source=None, target=None) -> "LinearMapQ":
        """Build from a list of sparse column dicts (row -> value)."""
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows[i][j] = Fraction(v)
        return cls(nrows, len(columns), rows, source, target)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "LinearMapQ":
        return cls(nrows, ncols)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, _ZERO)

    def to_dense(self) -> list:
        return [[r.get(j, _ZERO) for j in range(self.ncols)] for r in self.rows]

    def is_zero(self) -> bool:
        return all(not r for r in self.rows)

    def transpose(self) -> "LinearMapQ":
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return LinearMapQ(self.ncols, self.nrows, cols, self.target, self.source)

    def __matmul__(self, other: "LinearMapQ") -> "LinearMapQ":
        if self.ncols != other.nrows:
            raise DomainError(f"shape mismatch {self.shape} @ {other.shape}")
        out = []
        for r in self.rows:
            acc = {}
            for k, v in r.items():
                for j, w in other.rows[k].items():
                    acc[j] = acc.get(j, _ZERO) + v * w
            out.append(acc)
        return LinearMapQ(self.nrows, other.ncols, out, other.source, self.target)

    def apply(self, vec) -> dict:
        """Image of a sparse (dict) or dense (sequence) vector, as a dict."""
        if not isinstance(vec, dict):
            vec = {j: v for j, v in enumerate(vec) if v}
        out = {}
        for i, r in enumerate(self.rows):
            s = sum((v * vec[j] for j, v in r.items() if j in vec), _ZERO)
            if s:
                out[i] = s
        return out

    def row_echelon(self) -> Echelon:
        ech = Echelon()
        # shorter rows first keeps fill-in down
        for r in sorted(self.rows, key=len):
            if r:
                ech.add(r)
        return ech

    def rank(self) -> int:
        if self._rank is None:
            # eliminate along the shorter side
            m = self if self.nrows <= self.ncols else self.transpose()
            self._rank = len(m.row_echelon())
        return self._rank

    def nullity(self) -> int:
        return self.ncols - self.rank()

    def nullspace(self) -> list:
        """Basis of the kernel as a list of sparse column vectors (dicts)."""
        red = self.row_echelon().rref()
        pivots = set(red)
        basis = []
        for free in range(self.ncols):
            if free in pivots:
                continue
            vec = {free: Fraction(1)}
            for p, row in red.items():
                v = row.get(free)
                if v:
                    vec[p] = -v
            basis.append(vec)
        return basis

    def column_space(self) -> list:
        """A basis of the image, as sparse vectors in the target space."""
        ech = self.transpose().row_echelon()
        return list(ech.pivots.values())

    def __repr__(self):
        return f"LinearMapQ({self.nrows}x{self.ncols}, rank={self._rank})"


def rank_of_vectors(vectors) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return len(ech)


def span_basis(vectors) -> list:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return list(ech.pivots.values())


def kernel_of_stacked(maps, ncols: int) -> list:
    """Common kernel of several maps sharing the same source dimension."""
    rows = []
    for m in maps:
        if m.ncols != ncols:
            raise DomainError("stacked maps must share their source")
        rows.extend(m.rows)
    return LinearMapQ(len(rows), ncols, rows).nullspace()


def annihilator(vectors, dim: int) -> list:
    """Linear functionals (as dicts) vanishing exactly on span(vectors)."""
    if not vectors:
        return [{i: Fraction(1)} for i in range(dim)]
    return LinearMapQ(len(vectors), dim, list(vectors)).nullspace()


def solve_dense(a, b):
    """Solve a x = b for small dense systems; returns one solution or None."""
    m = LinearMapQ.from_dense([list(row) + [bi] for row, bi in zip(a, b)])
    n = len(a[0])
    red = m.row_echelon().rref()
    if n in red:
        return None
    x = [Fraction(0)] * n
    for p, row in red.items():
        x[p] = row.get(n, _ZERO)
    return x
