""" Integer lattices

Exact lattice algebra over Z: Hermite and Smith normal forms, membership,
order of an element in a quotient, sums, intersections, kernels and
preimages of sublattices of Z^N.

A :class:`Lattice` always stores the row Hermite normal form of its
generators (pivot columns strictly increasing, pivots positive, entries
above a pivot reduced into [0, pivot)), so two lattices are equal exactly
when their stored rows are.

..
   This program is free software: you can redistribute it
   and/or modify it under the terms of the GNU General Public License as
   published by the Free Software Foundation, either version 3 of the
   License, or (at your option) any later version. This program is
   distributed in the hope that it will be useful, but WITHOUT ANY
   WARRANTY; without even the implied warranty of MERCHANTABILITY or
   FITNESS FOR A PARTICULAR PURPOSE.  See the GNU General Public License
   for more details.  You should have received a copy of the GNU General
   Public License along with this program.  If not, see
   <http://www.gnu.org/licenses/>.
"""

import bisect
import collections
import logging
import time
from fractions import Fraction
from math import gcd

log = logging.getLogger('lcstorsion.zlinalg')


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    """The smaller lattice is not inside the bigger one; `row` is a basis
    row of the smaller lattice witnessing this."""

    def __init__(self, row):
        self.row = tuple(row)
        ValueError.__init__(self, 'Basis row {0} is not in the containing lattice'
                            .format(list(self.row)))


class _Infinite(object):
    """Order of an element none of whose multiples lie in the lattice."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = object.__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INFINITE'

    def __str__(self):
        return 'infinite'

    def __reduce__(self):
        return (_Infinite, ())

INFINITE = _Infinite()


def xgcd(a, b):
    """
    Returns (x, y, g) with x*a + y*b == g, g a gcd of a and b (possibly
    negative).

    >>> xgcd(240, 46)
    (-9, 47, 2)
    """
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


def lcm(a, b):
    return a // gcd(a, b) * b

# ----------------------------------------------------------------------
# dense matrices
# ----------------------------------------------------------------------

class IntMatrix(object):
    """
    Dense immutable matrix of Python integers.

    >>> M = IntMatrix([[1, 2], [3, 4]])
    >>> M * IntMatrix.identity(2) == M
    True
    >>> M.determinant()
    -2
    """

    __slots__ = ['rows', 'cols', '_data']

    def __init__(self, data=(), cols=None):
        data = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise DimensionError('Column count of an empty matrix must be given')
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionError('Row of length {0} in a matrix with {1} columns'
                                     .format(len(row), cols))
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @staticmethod
    def identity(n):
        return IntMatrix([[int(i == j) for j in range(n)] for i in range(n)], n)

    @staticmethod
    def zeros(rows, cols):
        return IntMatrix([[0] * cols for _ in range(rows)], cols)

    def row(self, i):
        return self._data[i]

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self._data[i][j]
        return self._data[key]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return self.rows

    def to_lists(self):
        return [list(r) for r in self._data]

    def transpose(self):
        return IntMatrix(zip(*self._data) if self.rows else [], self.rows)

    def __mul__(self, other):
        if self.cols != other.rows:
            raise DimensionError('Cannot multiply {0}x{1} by {2}x{3}'.format(
                self.rows, self.cols, other.rows, other.cols))
        columns = list(zip(*other._data)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in columns]
                          for r in self._data], other.cols)

    def __eq__(self, other):
        return (isinstance(other, IntMatrix) and self.cols == other.cols
                and self._data == other._data)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.cols, self._data))

    def __repr__(self):
        return 'IntMatrix({0!r})'.format(self.to_lists())

    def determinant(self):
        """Fraction-free (Bareiss) elimination."""
        n = self.rows
        if n != self.cols:
            raise DimensionError('Determinant of a non-square matrix')
        if n == 0:
            return 1
        a = self.to_lists()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


def _as_matrix(M, cols=None):
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix(M, cols)

# ----------------------------------------------------------------------
# Hermite normal form
# ----------------------------------------------------------------------

def _next_nonzero(vec, start, stop):
    for k in range(start, stop):
        if vec[k]:
            return k
    return None


def _axpy(vec, row, q, j):
    """vec += q * row, on the entries from column j on (both are zero before)."""
    vec[j:] = [v + q * r for v, r in zip(vec[j:], row[j:])]


class _Echelon(object):
    """
    Incremental row echelon form over Z.  Vectors are added one at a time
    and folded into the rows with pivots in the first `ncols` entries; any
    entries past `ncols` ride along (used to record transforms).  Rows are
    kept reduced against each other as they are installed, so a sparse
    incoming vector only meets the rows of its own nonzero pivot columns.
    """

    def __init__(self, ncols, track=False):
        self.ncols = ncols
        self.track = track
        self.rows = {}
        self.pivots = []
        self.zeroed = []

    def is_full(self):
        if len(self.pivots) != self.ncols:
            return False
        return all(self.rows[c][c] == 1 for c in self.pivots)

    def add(self, vec):
        """Returns True iff the rank went up."""
        vec = list(vec)
        ncols = self.ncols
        rows = self.rows
        j = _next_nonzero(vec, 0, ncols)
        while j is not None:
            row = rows.get(j)
            if row is None:
                self._install(j, vec, new=True)
                return True
            a = row[j]
            b = vec[j]
            if b % a == 0:
                _axpy(vec, row, -(b // a), j)
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                head, tail = row[j:], vec[j:]
                row[j:] = [x * r + y * v for r, v in zip(head, tail)]
                vec[j:] = [mbg * r + ag * v for r, v in zip(head, tail)]
                self._install(j, row, new=False)
            j = _next_nonzero(vec, j + 1, ncols)
        if self.track:
            self.zeroed.append(vec)
        return False

    def _install(self, j, row, new):
        if row[j] < 0:
            row[:] = [-x for x in row]
        rows = self.rows
        pivots = self.pivots
        if new:
            bisect.insort(pivots, j)
        rows[j] = row
        where = bisect.bisect_left(pivots, j)
        for c in pivots[where + 1:]:
            q = row[c] // rows[c][c]
            if q:
                _axpy(row, rows[c], -q, c)
        p = row[j]
        for c in pivots[:where]:
            other = rows[c]
            q = other[j] // p
            if q:
                _axpy(other, row, -q, j)

    def hermite_rows(self):
        """Canonical HNF rows, in pivot order."""
        pivots = list(self.pivots)
        rows = [self.rows[c] for c in pivots]
        for i, c in enumerate(pivots):
            p = rows[i][c]
            for k in range(i):
                q = rows[k][c] // p
                if q:
                    _axpy(rows[k], rows[i], -q, c)
        return pivots, rows


def hnf(M):
    """
    Row Hermite normal form with transform: returns (H, U) where U is a
    square unimodular matrix, the first rank rows of U*M equal H (zero rows
    removed) and the remaining rows of U*M are zero, so they span the left
    kernel of M.

    >>> H, U = hnf(IntMatrix([[2], [3]]))
    >>> H
    IntMatrix([[1]])
    >>> U * IntMatrix([[2], [3]])
    IntMatrix([[1], [0]])
    """
    M = _as_matrix(M)
    m, n = M.rows, M.cols
    ech = _Echelon(n, track=True)
    for i, row in enumerate(M):
        ech.add(list(row) + [int(k == i) for k in range(m)])
    _, rows = ech.hermite_rows()
    H = IntMatrix([r[:n] for r in rows], n)
    U = IntMatrix([r[n:] for r in rows] + [z[n:] for z in ech.zeroed], m)
    return H, U

# ----------------------------------------------------------------------
# lattices
# ----------------------------------------------------------------------

class Lattice(object):
    """
    A subgroup of Z^N, stored as its row HNF.

    :members:
      - `ambient_dim`: N
      - `pivots`: pivot column of each basis row
    """

    __slots__ = ['ambient_dim', 'pivots', '_rows']

    def __init__(self, ambient_dim, rows=(), pivots=()):
        self.ambient_dim = ambient_dim
        self._rows = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @staticmethod
    def zero(n):
        return Lattice(n)

    @staticmethod
    def full(n):
        return Lattice(n, IntMatrix.identity(n), range(n))

    @property
    def rank(self):
        return len(self._rows)

    @property
    def basis_matrix(self):
        return IntMatrix(self._rows, self.ambient_dim)

    def rows(self):
        return list(self._rows)

    def has_unit_pivots(self):
        return all(r[c] == 1 for r, c in zip(self._rows, self.pivots))

    def __contains__(self, v):
        return member(v, self)

    def __eq__(self, other):
        return (isinstance(other, Lattice) and self.ambient_dim == other.ambient_dim
                and self._rows == other._rows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.ambient_dim, self._rows))

    def __repr__(self):
        return 'Lattice(dim={0}, rank={1})'.format(self.ambient_dim, self.rank)


def lattice_from_rows(rows, ambient_dim=None):
    """
    The canonical lattice spanned by `rows` (an IntMatrix or any iterable
    of integer sequences; `ambient_dim` is needed when it may be empty).

    >>> lattice_from_rows([[1, 0], [0, 1], [1, 1]]) == Lattice.full(2)
    True
    >>> lattice_from_rows([], 3).rank
    0
    """
    if isinstance(rows, IntMatrix):
        if ambient_dim is not None and ambient_dim != rows.cols:
            raise DimensionError('Matrix has {0} columns, expected {1}'
                                 .format(rows.cols, ambient_dim))
        ambient_dim = rows.cols
    rows = iter(rows)
    if ambient_dim is None:
        first = next(rows, None)
        if first is None:
            raise DimensionError('Cannot infer the ambient dimension of no rows')
        ambient_dim = len(first)
        rows = _chain_one(first, rows)
    start = time.time()
    ech = _Echelon(ambient_dim)
    count = 0
    for row in rows:
        if len(row) != ambient_dim:
            raise DimensionError('Row of length {0} in ambient dimension {1}'
                                 .format(len(row), ambient_dim))
        count += 1
        if ech.is_full():
            continue
        ech.add(row)
    pivots, hrows = ech.hermite_rows()
    if count > 1000:
        log.debug('HNF of %d rows in dimension %d: rank %d (%.2fs)',
                  count, ambient_dim, len(pivots), time.time() - start)
    return Lattice(ambient_dim, hrows, pivots)


def _chain_one(first, rest):
    yield first
    for r in rest:
        yield r


def _check_same(L1, L2):
    if L1.ambient_dim != L2.ambient_dim:
        raise DimensionError('Lattices live in dimensions {0} and {1}'
                             .format(L1.ambient_dim, L2.ambient_dim))


def _check_vector(v, n):
    v = [int(x) for x in v]
    if len(v) != n:
        raise DimensionError('Vector of length {0} in ambient dimension {1}'
                             .format(len(v), n))
    return v


def solve(v, L):
    """
    Integer coordinates of v in the HNF basis of L, or None if v is not in L.

    >>> L = lattice_from_rows([[2, 4]])
    >>> solve([4, 8], L), solve([1, 2], L)
    ([2], None)
    """
    res = _check_vector(v, L.ambient_dim)
    coords = []
    for row, c in zip(L._rows, L.pivots):
        q, r = divmod(res[c], row[c])
        if r:
            return None
        coords.append(q)
        if q:
            _axpy(res, row, -q, c)
    if any(res):
        return None
    return coords


def member(v, L):
    """
    >>> member([2, 4], lattice_from_rows([[2, 4]]))
    True
    """
    return solve(v, L) is not None


def order_in_quotient(v, L):
    """
    Least k >= 1 with k*v in L, or INFINITE.  v is written in the HNF
    basis over Q; the order is the lcm of the coordinate denominators, and
    INFINITE when v leaves the rational span.

    >>> order_in_quotient([1], lattice_from_rows([[3]]))
    3
    >>> order_in_quotient([1], Lattice.zero(1))
    INFINITE
    """
    res = _check_vector(v, L.ambient_dim)
    denom = 1
    order = 1
    for row, c in zip(L._rows, L.pivots):
        if not res[c]:
            continue
        p = row[c]
        g = gcd(res[c], p)
        scale = p // g
        if scale != 1:
            res = [scale * x for x in res]
            denom *= scale
        q = res[c] // p
        order = lcm(order, Fraction(q, denom).denominator)
        _axpy(res, row, -q, c)
    if any(res):
        return INFINITE
    return order


def lattice_equal(L1, L2):
    _check_same(L1, L2)
    return L1 == L2


def lattice_sum(L1, L2):
    _check_same(L1, L2)
    return lattice_from_rows(L1.rows() + L2.rows(), L1.ambient_dim)


def kernel(M):
    """
    The left kernel {y : y*M = 0} as a lattice in Z^rows.

    >>> kernel(IntMatrix([[1, 1], [2, 2]])).rows()
    [(2, -1)]
    """
    M = _as_matrix(M)
    H, U = hnf(M)
    return lattice_from_rows(U.to_lists()[H.rows:], M.rows)


def lattice_intersect(L1, L2):
    """
    >>> lattice_intersect(lattice_from_rows([[1, 1]]), lattice_from_rows([[1, -1]])).rank
    0
    >>> lattice_intersect(lattice_from_rows([[2, 0]]), lattice_from_rows([[3, 0]])).rows()
    [(6, 0)]
    """
    _check_same(L1, L2)
    n = L1.ambient_dim
    if not L1.rank or not L2.rank:
        return Lattice.zero(n)
    b1 = L1.rows()
    stacked = IntMatrix(b1 + L2.rows(), n)
    H, U = hnf(stacked)
    images = []
    for k in U.to_lists()[H.rows:]:
        a = k[:L1.rank]
        images.append([sum(ai * r[j] for ai, r in zip(a, b1)) for j in range(n)])
    return lattice_from_rows(images, n)


def preimage(M, L):
    """
    {y in Z^rows(M) : y*M in L}.

    >>> preimage(IntMatrix([[1], [1]]), lattice_from_rows([[2]])).rows()
    [(1, 1), (0, 2)]
    """
    M = _as_matrix(M)
    if M.cols != L.ambient_dim:
        raise DimensionError('Map into dimension {0}, lattice in dimension {1}'
                             .format(M.cols, L.ambient_dim))
    m = M.rows
    stacked = IntMatrix(M.to_lists() + L.rows(), M.cols)
    H, U = hnf(stacked)
    return lattice_from_rows([k[:m] for k in U.to_lists()[H.rows:]], m)


class CoordinateSystem(object):
    """
    Coordinates with respect to a list of linearly independent rows (not
    necessarily an HNF basis).
    """

    def __init__(self, rows, ambient_dim=None):
        M = _as_matrix(rows, ambient_dim)
        H, U = hnf(M)
        if H.rows != M.rows:
            raise ValueError('Rows are linearly dependent (rank {0} of {1})'
                             .format(H.rows, M.rows))
        self.size = M.rows
        self._lattice = Lattice(M.cols, H, [_next_nonzero(r, 0, M.cols) for r in H])
        self._transform = U.to_lists()

    @property
    def lattice(self):
        return self._lattice

    def coordinates(self, v):
        """Integer x with x*rows == v, or None when v is outside the span."""
        y = solve(v, self._lattice)
        if y is None:
            return None
        x = [0] * self.size
        for yi, urow in zip(y, self._transform):
            if yi:
                x = [a + yi * b for a, b in zip(x, urow)]
        return x

# ----------------------------------------------------------------------
# Smith normal form
# ----------------------------------------------------------------------

class SnfResult(object):
    """
    :members:
      - `d`: invariant factors, each dividing the next
      - `rank`: len(d)
      - `transforms`: (U, V) with U*M*V diagonal, or None
    """

    __slots__ = ['d', 'transforms']

    def __init__(self, d, transforms=None):
        self.d = list(d)
        self.transforms = transforms

    @property
    def rank(self):
        return len(self.d)

    def __repr__(self):
        return 'SnfResult(d={0})'.format(self.d)


def snf(M, transforms=False):
    """
    Smith normal form by gcd elimination, pivoting on the entry of least
    absolute value.

    >>> snf(IntMatrix([[2, 0], [0, 3]])).d
    [1, 6]
    """
    M = _as_matrix(M)
    m, n = M.rows, M.cols
    A = M.to_lists()
    U = IntMatrix.identity(m).to_lists() if transforms else None
    V = IntMatrix.identity(n).to_lists() if transforms else None

    def swap_cols(j, k):
        for r in A:
            r[j], r[k] = r[k], r[j]
        if V is not None:
            for r in V:
                r[j], r[k] = r[k], r[j]

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        if U is not None:
            U[i], U[k] = U[k], U[i]

    def add_row(i, k, q):
        # row i += q * row k
        A[i] = [a + q * b for a, b in zip(A[i], A[k])]
        if U is not None:
            U[i] = [a + q * b for a, b in zip(U[i], U[k])]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            again = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        swap_rows(t, i)
                        again = True
                        break
            if again:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    A[t][j] -= q * p
                    if V is not None:
                        for r in V:
                            r[j] -= q * r[t]
                    if A[t][j]:
                        swap_cols(t, j)
                        again = True
                        break
            if again:
                continue
            bad = None
            for i in range(t + 1, m):
                if any(x % p for x in A[i][t + 1:]):
                    bad = i
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            if U is not None:
                U[t] = [-x for x in U[t]]
        t += 1
    d = [A[k][k] for k in range(t)]
    if transforms:
        return SnfResult(d, (IntMatrix(U, m), IntMatrix(V, n)))
    return SnfResult(d)


QuotientStructure = collections.namedtuple('QuotientStructure', 'free_rank torsion')


def _torsion_of(L):
    if L.has_unit_pivots():
        return []
    return [x for x in snf(L.basis_matrix).d if x > 1]


def quotient_invariants(small, big=None):
    """
    Structure of big/small (big defaults to the whole of Z^N) as
    (free_rank, torsion invariant factors > 1).

    >>> quotient_invariants(lattice_from_rows([[2]]))
    QuotientStructure(free_rank=0, torsion=[2])
    """
    n = small.ambient_dim
    if big is None:
        return QuotientStructure(n - small.rank, _torsion_of(small))
    _check_same(small, big)
    coords = []
    for row in small.rows():
        c = solve(row, big)
        if c is None:
            raise ContainmentError(row)
        coords.append(c)
    C = lattice_from_rows(coords, big.rank)
    return QuotientStructure(big.rank - C.rank, _torsion_of(C))


def is_saturated(L):
    return not _torsion_of(L)

# ----------------------------------------------------------------------
# text and JSON formats
# ----------------------------------------------------------------------

def write_matrix(M):
    """
    >>> print(write_matrix(IntMatrix([[1, -2]])))
    1 2
    1 -2
    """
    lines = ['{0} {1}'.format(M.rows, M.cols)]
    lines.extend(' '.join(str(x) for x in row) for row in M)
    return '\n'.join(lines)


def read_matrix(text):
    lines = [l for l in text.splitlines() if l.strip()]
    if not lines:
        raise ValueError('Empty matrix text')
    try:
        rows, cols = [int(x) for x in lines[0].split()]
        data = [[int(x) for x in l.split()] for l in lines[1:]]
    except ValueError:
        raise ValueError('Malformed matrix text: {0!r}'.format(lines[0]))
    if len(data) != rows:
        raise DimensionError('Header announces {0} rows, found {1}'.format(rows, len(data)))
    return IntMatrix(data, cols)


def matrix_to_json(M):
    return [[str(x) for x in row] for row in M]


def matrix_from_json(data, cols=None):
    return IntMatrix([[int(x) for x in row] for row in data], cols)
