"""Exact linear algebra over the rationals and prime fields.

Matrices are stored sparsely as a list of row dictionaries ``{col: value}``.
Rational entries are :class:`fractions.Fraction`; prime-field entries are
plain ints in ``range(p)``.  Nothing here ever touches a float.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence


class Field:
    """Base class for the two supported coefficient fields."""

    name = "field"

    def reduce(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.reduce(0)

    @property
    def one(self):
        return self.reduce(1)

    def parse(self, token):
        raise NotImplementedError

    def format(self, x):
        raise NotImplementedError

    def elements(self):
        raise TypeError(f"{self} is infinite")


class RationalField(Field):
    name = "rational"

    def reduce(self, x):
        return x if type(x) is Fraction else Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def parse(self, token):
        if isinstance(token, bool):
            raise ValueError(f"not a scalar: {token!r}")
        if isinstance(token, (int, Fraction)):
            return Fraction(token)
        if isinstance(token, str):
            return Fraction(token.strip())
        raise ValueError(f"not a rational scalar: {token!r}")

    def format(self, x):
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_doc(self):
        return "rational"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"gf:{p}"

    def reduce(self, x):
        return int(x) % self.p

    def inv(self, x):
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def parse(self, token):
        if isinstance(token, bool):
            raise ValueError(f"not a scalar: {token!r}")
        if isinstance(token, int):
            return token % self.p
        if isinstance(token, str):
            return int(token.strip()) % self.p
        raise ValueError(f"not a GF({self.p}) scalar: {token!r}")

    def format(self, x):
        return int(x) % self.p

    def elements(self):
        return range(self.p)

    def to_doc(self):
        return {"prime": self.p}

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))


QQ = RationalField()


def _is_prime(p) -> bool:
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def parse_field(value) -> Field:
    """Accept ``"rational"``, ``"gf:p"`` or the document form ``{"prime": p}``."""
    if isinstance(value, Field):
        return value
    if isinstance(value, dict):
        if set(value) != {"prime"}:
            raise ValueError(f"bad field document: {value!r}")
        return GF(value["prime"])
    if isinstance(value, str):
        s = value.strip().lower()
        if s in ("rational", "q", "qq"):
            return QQ
        if s.startswith("gf:"):
            try:
                p = int(s[3:])
            except ValueError:
                raise ValueError(f"bad field: {value!r}") from None
            return GF(p)
    raise ValueError(f"bad field: {value!r}")


@dataclass(eq=False)
class Matrix:
    """Sparse matrix over an exact field.

    ``rows[i]`` maps column index to a nonzero canonical scalar.  Treat
    instances as immutable once built.
    """

    nrows: int
    ncols: int
    field: Field
    rows: list = dc_field(repr=False)

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def zeros(cls, nrows, ncols, field):
        return cls(nrows, ncols, field, [{} for _ in range(nrows)])

    @classmethod
    def identity(cls, n, field):
        one = field.one
        return cls(n, n, field, [{i: one} for i in range(n)])

    @classmethod
    def scalar(cls, n, c, field):
        c = field.reduce(c)
        if c == 0:
            return cls.zeros(n, n, field)
        return cls(n, n, field, [{i: c} for i in range(n)])

    @classmethod
    def from_dense(cls, field, data, ncols=None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for r in data:
            if len(r) != ncols:
                raise ValueError("ragged dense matrix")
            row = {}
            for j, x in enumerate(r):
                x = field.reduce(x)
                if x != 0:
                    row[j] = x
            rows.append(row)
        return cls(len(rows), ncols, field, rows)

    @classmethod
    def from_triplets(cls, nrows, ncols, field, triplets):
        rows = [{} for _ in range(nrows)]
        for i, j, x in triplets:
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise ValueError(f"triplet ({i}, {j}) outside {nrows}x{ncols}")
            x = field.reduce(rows[i].get(j, 0) + field.reduce(x))
            if x != 0:
                rows[i][j] = x
            else:
                rows[i].pop(j, None)
        return cls(nrows, ncols, field, rows)

    @classmethod
    def from_columns(cls, field, columns, nrows):
        rows = [{} for _ in range(nrows)]
        for j, col in enumerate(columns):
            if len(col) != nrows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(col):
                x = field.reduce(x)
                if x != 0:
                    rows[i][j] = x
        return cls(nrows, len(columns), field, rows)

    def to_dense(self):
        z = self.field.zero
        out = [[z] * self.ncols for _ in range(self.nrows)]
        for i, row in enumerate(self.rows):
            for j, x in row.items():
                out[i][j] = x
        return out

    def triplets(self):
        """Nonzero entries as ``(row, col, value)``, sorted row-major."""
        return [(i, j, row[j]) for i, row in enumerate(self.rows) for j in sorted(row)]

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def transpose(self):
        rows = [{} for _ in range(self.ncols)]
        for i, row in enumerate(self.rows):
            for j, x in row.items():
                rows[j][i] = x
        return Matrix(self.ncols, self.nrows, self.field, rows)

    T = property(transpose)

    def column(self, j):
        z = self.field.zero
        return [row.get(j, z) for row in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def apply(self, vec):
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        red = self.field.reduce
        return [red(sum((x * vec[j] for j, x in row.items()), 0)) for row in self.rows]

    def _check_field(self, other):
        if self.field != other.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_field(other)
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        red = self.field.reduce
        orows = other.rows
        out = []
        for row in self.rows:
            acc = {}
            for k, a in row.items():
                for j, b in orows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            clean = {}
            for j, x in acc.items():
                x = red(x)
                if x != 0:
                    clean[j] = x
            out.append(clean)
        return Matrix(self.nrows, other.ncols, self.field, out)

    def _combine(self, other, sign):
        self._check_field(other)
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        red = self.field.reduce
        out = []
        for ra, rb in zip(self.rows, other.rows):
            row = dict(ra)
            for j, x in rb.items():
                y = red(row.get(j, 0) + sign * x)
                if y != 0:
                    row[j] = y
                else:
                    row.pop(j, None)
            out.append(row)
        return Matrix(self.nrows, self.ncols, self.field, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        red = self.field.reduce
        c = red(c)
        if c == 0:
            return Matrix.zeros(self.nrows, self.ncols, self.field)
        return Matrix(self.nrows, self.ncols, self.field,
                      [{j: red(c * x) for j, x in row.items()} for row in self.rows])

    def is_zero(self):
        return all(not row for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.shape == other.shape and self.field == other.field
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def block_diag(self, other):
        self._check_field(other)
        rows = [dict(r) for r in self.rows]
        rows += [{j + self.ncols: x for j, x in r.items()} for r in other.rows]
        return Matrix(self.nrows + other.nrows, self.ncols + other.ncols, self.field, rows)


def sum_matrices(mats: Sequence[Matrix], signs: Iterable[int] | None = None) -> Matrix:
    mats = list(mats)
    if not mats:
        raise ValueError("empty sum")
    signs = [1] * len(mats) if signs is None else list(signs)
    red = mats[0].field.reduce
    acc = [{} for _ in range(mats[0].nrows)]
    for s, m in zip(signs, mats):
        if m.shape != mats[0].shape:
            raise ValueError("shape mismatch in sum")
        for i, row in enumerate(m.rows):
            a = acc[i]
            for j, x in row.items():
                a[j] = a.get(j, 0) + s * x
    out = []
    for a in acc:
        row = {}
        for j, x in a.items():
            x = red(x)
            if x != 0:
                row[j] = x
        out.append(row)
    return Matrix(mats[0].nrows, mats[0].ncols, mats[0].field, out)


# ---------------------------------------------------------------------------
# elimination


def _integer_row(row: dict) -> dict:
    """Scale a rational row to a primitive integer row (same span)."""
    den = 1
    for x in row.values():
        den = den * x.denominator // gcd(den, x.denominator)
    out = {j: int(x * den) for j, x in row.items()}
    return _primitive(out)


def _primitive(row: dict) -> dict:
    g = 0
    for x in row.values():
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        row = {j: x // g for j, x in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {j: -x for j, x in row.items()}
    return row


class Echelon:
    """Incremental row echelon form.

    Over the rationals rows are kept as primitive integer vectors and
    reduced fraction-free (cross-multiplication followed by removal of the
    content), which keeps entries small on the sparse integer matrices the
    complexes produce.  Over GF(p) pivots are normalised to 1.
    """

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}
        self._rational = isinstance(field, RationalField)

    @property
    def rank(self):
        return len(self.pivots)

    def _prepare(self, row: dict) -> dict:
        if self._rational:
            row = {j: Fraction(x) for j, x in row.items() if x != 0}
            return _integer_row(row) if row else {}
        p = self.field.p
        return {j: x % p for j, x in row.items() if x % p}

    def reduce(self, row: dict) -> dict:
        """Reduce ``row`` against current pivots; returns the remainder."""
        row = self._prepare(row)
        pivots = self.pivots
        if self._rational:
            while row:
                c = min(row)
                prow = pivots.get(c)
                if prow is None:
                    break
                a, b = prow[c], row[c]
                g = gcd(a, b)
                ma, mb = a // g, b // g
                new = {j: ma * x for j, x in row.items()}
                for j, x in prow.items():
                    y = new.get(j, 0) - mb * x
                    if y:
                        new[j] = y
                    else:
                        new.pop(j, None)
                row = _primitive(new) if new else {}
            return row
        p = self.field.p
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                break
            b = row[c]
            for j, x in prow.items():
                y = (row.get(j, 0) - b * x) % p
                if y:
                    row[j] = y
                else:
                    row.pop(j, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert ``row``; returns True if it raised the rank."""
        rem = self.reduce(row)
        if not rem:
            return False
        c = min(rem)
        if not self._rational:
            inv = pow(rem[c], -1, self.field.p)
            p = self.field.p
            rem = {j: (x * inv) % p for j, x in rem.items()}
        self.pivots[c] = rem
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def reduced_rows(self) -> dict[int, dict]:
        """Fully reduced echelon form with unit pivots, keyed by pivot column."""
        red = self.field.reduce
        rows = {}
        for c, r in self.pivots.items():
            inv = self.field.inv(r[c])
            rows[c] = {j: red(x * inv) for j, x in r.items()}
        for c in sorted(rows, reverse=True):
            prow = rows[c]
            for c2 in rows:
                if c2 >= c:
                    continue
                r2 = rows[c2]
                b = r2.get(c)
                if b is None:
                    continue
                for j, x in prow.items():
                    y = red(r2.get(j, 0) - b * x)
                    if y != 0:
                        r2[j] = y
                    else:
                        r2.pop(j, None)
        return rows


def _echelon_of_rows(field, ncols, rows) -> Echelon:
    ech = Echelon(field, ncols)
    for r in rows:
        if r:
            ech.add(r)
    return ech


def rank(M: Matrix) -> int:
    # eliminate along the shorter side
    if M.nrows > M.ncols:
        M = M.transpose()
    return _echelon_of_rows(M.field, M.ncols, M.rows).rank


def kernel_basis(M: Matrix) -> list[list]:
    """Basis of the right kernel ``{v : M v = 0}`` as dense columns.

    One vector per free column of the reduced echelon form, with a 1 in the
    free slot.
    """
    ech = _echelon_of_rows(M.field, M.ncols, M.rows)
    rows = ech.reduced_rows()
    free = [j for j in range(M.ncols) if j not in rows]
    zero, one = M.field.zero, M.field.one
    red = M.field.reduce
    basis = []
    for f in free:
        v = [zero] * M.ncols
        v[f] = one
        for c, r in rows.items():
            x = r.get(f)
            if x is not None:
                v[c] = red(-x)
        basis.append(v)
    return basis


def image_basis(M: Matrix) -> list[list]:
    """Basis of the column space (reduced echelon rows of the transpose)."""
    T = M.transpose()
    ech = _echelon_of_rows(M.field, T.ncols, T.rows)
    rows = ech.reduced_rows()
    zero = M.field.zero
    out = []
    for c in sorted(rows):
        v = [zero] * M.nrows
        for j, x in rows[c].items():
            v[j] = x
        out.append(v)
    return out


def _as_row(vec) -> dict:
    return {j: x for j, x in enumerate(vec) if x != 0}


def span_rank(field: Field, vectors, dim: int) -> int:
    return _echelon_of_rows(field, dim, [_as_row(v) for v in vectors]).rank


def in_span(field: Field, basis, vec, dim: int) -> bool:
    ech = _echelon_of_rows(field, dim, [_as_row(v) for v in basis])
    return ech.contains(_as_row(vec))


def subspace_equal(field: Field, A, B, dim: int | None = None) -> bool:
    """True iff the column lists ``A`` and ``B`` span the same subspace."""
    A, B = list(A), list(B)
    lengths = {len(v) for v in A + B}
    if dim is not None:
        lengths.add(dim)
    if len(lengths) > 1:
        raise ValueError(f"dimension mismatch: {sorted(lengths)}")
    if not lengths:
        return True
    n = lengths.pop()
    ra = span_rank(field, A, n)
    rb = span_rank(field, B, n)
    return ra == rb == span_rank(field, A + B, n)


def subspace_contains(field: Field, big, small, dim: int) -> bool:
    ech = _echelon_of_rows(field, dim, [_as_row(v) for v in big])
    return all(ech.contains(_as_row(v)) for v in small)


# ---------------------------------------------------------------------------
# homology of windows


@dataclass(frozen=True)
class HomologyEntry:
    degree: int
    betti: int
    kernel_dim: int
    image_dim: int
    representatives: tuple = ()
    cycles: tuple = ()
    boundaries: tuple = ()


def homology_of_window(W, n: int, representatives: bool = True) -> HomologyEntry:
    """Betti number and cycle representatives of ``W`` in degree ``n``."""
    if not 0 <= n < W.max_degree:
        raise ValueError(f"degree {n} outside window 0..{W.max_degree - 1}")
    out, inc = W.outgoing(n), W.incoming(n)
    field = W.field
    dim = W.dims[n]
    if not representatives:
        k = dim - rank(out)
        i = rank(inc) if inc is not None else 0
        return HomologyEntry(n, k - i, k, i)
    cycles = kernel_basis(out)
    boundaries = image_basis(inc) if inc is not None else []
    ech = _echelon_of_rows(field, dim, [_as_row(v) for v in boundaries])
    reps = [z for z in cycles if ech.add(_as_row(z))]
    return HomologyEntry(n, len(cycles) - len(boundaries), len(cycles), len(boundaries),
                         tuple(map(tuple, reps)), tuple(map(tuple, cycles)),
                         tuple(map(tuple, boundaries)))


def betti_numbers(W) -> list[int]:
    return [homology_of_window(W, n, representatives=False).betti for n in range(W.max_degree)]


def inverse(M: Matrix) -> Matrix:
    """Inverse of a square matrix by Gauss-Jordan; raises if singular."""
    n = M.nrows
    if M.ncols != n:
        raise ValueError("inverse of a non-square matrix")
    f = M.field
    red = f.reduce
    aug = [dict(row) for row in M.rows]
    for i in range(n):
        aug[i][n + i] = f.one
    aug = [{j: red(x) for j, x in r.items()} for r in aug]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r].get(c, 0) != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = f.inv(aug[c][c])
        aug[c] = {j: red(x * inv) for j, x in aug[c].items()}
        for r in range(n):
            b = aug[r].get(c)
            if r == c or b is None:
                continue
            row = aug[r]
            for j, x in aug[c].items():
                y = red(row.get(j, 0) - b * x)
                if y != 0:
                    row[j] = y
                else:
                    row.pop(j, None)
    return Matrix(n, n, f, [{j - n: x for j, x in r.items() if j >= n} for r in aug])
