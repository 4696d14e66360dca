""" Ideals of Z<X> by multigraded components

The ideals T(n) (generated by n-fold commutators), T(3,2) (generated by
[a1,a2,a3,a4] and [a1,a2,a3][a4,a5]), the ideal I(3,2) generated by the
products [xj1,xj2,xj3][xj4,xj5] with j1 < ... < j5, the lower central series
terms gamma_n, and T-ideals generated by user supplied multilinear
polynomials.  Every one of them is spanned, inside the component of a fixed
multidegree, by finitely many "frames" built from monomials, so each
component becomes a :class:`zlinalg.Lattice` in the coordinates of the
component's monomials.  Membership and torsion questions reduce to the
lattice engine.

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

import functools
import logging
import math
import re
import threading
import time

from sympy.utilities.iterables import multiset_permutations

from . import freering
from . import zlinalg
from .freering import MultiDegree, Monomial, Poly
from .utils import permutation_sign

log = logging.getLogger('lcstorsion.ideals')


class SpecError(ValueError):
    pass


class ComponentTooLarge(SpecError):

    def __init__(self, mu, dim, cap):
        self.mu = mu
        self.dim = dim
        self.cap = cap
        SpecError.__init__(self, 'Component {0} has dimension {1}, above the cap {2}'
                           .format(mu, dim, cap))

# ----------------------------------------------------------------------
# ideal descriptors
# ----------------------------------------------------------------------

class IdealSpec(object):
    """
    Which subgroup to instantiate in each component.

    :members:
      - `kind`: one of 'T', 'T32', 'I32', 'gamma', 'custom'
      - `n`: the n of T(n) or gamma_n
      - `schemas`: the generating polynomials of a custom T-ideal
    """

    __slots__ = ['kind', 'n', 'schemas', 'name']

    def __init__(self, kind, n=None, schemas=(), name=None):
        self.kind = kind
        self.n = n
        self.schemas = tuple(schemas)
        self.name = name

    def _key(self):
        return (self.kind, self.n, self.schemas)

    def __eq__(self, other):
        return isinstance(other, IdealSpec) and self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        if self.kind == 'T':
            return 'T{0}'.format(self.n)
        if self.kind == 'gamma':
            return 'gamma{0}'.format(self.n)
        if self.kind == 'custom':
            return 'custom:{0}'.format(self.name or '<inline>')
        return self.kind

    def __repr__(self):
        return 'IdealSpec({0})'.format(self)


def Tn(n):
    if not isinstance(n, int) or n < 2:
        raise SpecError('T(n) needs n >= 2, got {0!r}'.format(n))
    return IdealSpec('T', n)


def T32():
    return IdealSpec('T32')


def I32():
    return IdealSpec('I32')


def GammaN(n):
    if not isinstance(n, int) or n < 1:
        raise SpecError('gamma_n needs n >= 1, got {0!r}'.format(n))
    return IdealSpec('gamma', n)


def Custom(schemas, name=None):
    """
    The T-ideal generated by the given multilinear polynomials.
    """
    schemas = list(schemas)
    if not schemas:
        raise SpecError('A custom ideal needs at least one generator')
    for g in schemas:
        parts = freering.homogeneous_parts(g)
        if len(parts) != 1 or not next(iter(parts)).is_multilinear():
            raise SpecError('Custom generator {0} is not multilinear'.format(g))
    return IdealSpec('custom', schemas=schemas, name=name)


_SPEC_RE = re.compile(r'^(T|gamma)([0-9]+)$')


def parse_spec(text, spec_file=None):
    """
    The CLI syntax: ``T4``, ``T5``, ``T32``, ``I32``, ``gamma3``,
    ``custom:<file>``; a bare ``custom`` takes its generators from
    `spec_file`.

    >>> parse_spec('T4'), parse_spec('gamma3'), parse_spec('I32')
    (IdealSpec(T4), IdealSpec(gamma3), IdealSpec(I32))
    """
    from . import exprparse
    text = text.strip()
    if text in ('T32', 'I32'):
        return IdealSpec(text)
    m = _SPEC_RE.match(text)
    if m:
        n = int(m.group(2))
        if m.group(1) == 'T':
            return Tn(n)
        return GammaN(n)
    if text == 'custom' or text.startswith('custom:'):
        path = text[len('custom:'):] if text.startswith('custom:') else spec_file
        if not path:
            raise SpecError('custom spec needs a file: custom:<file> or --spec-file')
        try:
            exprs = exprparse.parse_file(path)
        except (IOError, OSError) as e:
            raise SpecError('Cannot read spec file {0}: {1}'.format(path, e))
        return Custom([exprparse.evaluate(e) for e in exprs], name=path)
    raise SpecError('Unknown ideal {0!r}; expected Tn, T32, I32, gamman or custom:<file>'
                    .format(text))

# ----------------------------------------------------------------------
# component bases
# ----------------------------------------------------------------------

def component_dim(mu):
    """Multinomial coefficient total! / prod(exponents!)."""
    d = math.factorial(mu.total)
    for c in mu.exponents.values():
        d //= math.factorial(c)
    return d


class ComponentBasis(object):
    """
    The monomials of one multidegree, in canonical order, and the
    coordinate map they define.
    """

    __slots__ = ['mu', 'monomials', '_index']

    def __init__(self, mu, monomials):
        self.mu = mu
        self.monomials = tuple(monomials)
        self._index = dict((w, i) for i, w in enumerate(self.monomials))

    @property
    def dim(self):
        return len(self.monomials)

    def index(self, word):
        try:
            return self._index[tuple(word)]
        except KeyError:
            raise ValueError('{0} is not a monomial of multidegree {1}'
                             .format(freering.render_word(word), self.mu))

    def sparse(self, terms):
        """(word, coeff) pairs to a dict index -> coeff."""
        index = self.index
        return dict((index(w), c) for w, c in terms if c)

    def coordinates(self, p):
        vec = [0] * self.dim
        for w, c in p.items():
            vec[self.index(w)] += c
        return vec

    def element(self, vec):
        if isinstance(vec, dict):
            items = vec.items()
        else:
            items = enumerate(vec)
        return Poly._canonical(dict((self.monomials[i], c) for i, c in items if c))

    def __repr__(self):
        return 'ComponentBasis({0}, dim={1})'.format(self.mu, self.dim)


def component_basis(mu, dim_cap=None):
    """
    >>> component_basis(MultiDegree({1: 1, 2: 1})).monomials
    (x1*x2, x2*x1)
    >>> component_basis(MultiDegree.ones(5)).dim
    120
    """
    if dim_cap is not None:
        dim = component_dim(mu)
        if dim > dim_cap:
            raise ComponentTooLarge(mu, dim, dim_cap)
    words = multiset_permutations(list(mu.letters()))
    return ComponentBasis(mu, [Monomial._make(tuple(int(i) for i in w)) for w in words])

# ----------------------------------------------------------------------
# generator frames
# ----------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _compositions(total, flags):
    """Ways to write total as an ordered sum, one part per flag; a part
    may be zero only where its flag is False."""
    if len(flags) == 1:
        return ((total,),) if total >= int(flags[0]) else ()
    out = []
    for first in range(int(flags[0]), total + 1):
        for rest in _compositions(total - first, flags[1:]):
            out.append((first,) + rest)
    return tuple(out)


def _cuts(word, flags):
    for sizes in _compositions(len(word), flags):
        pieces = []
        k = 0
        for s in sizes:
            pieces.append(word[k:k + s])
            k += s
        yield pieces


def _bracket_words(words):
    """Left-normed commutator of monomials, as a dict word -> coeff."""
    d = {words[0]: 1}
    for w in words[1:]:
        nd = {}
        for u, c in d.items():
            uw, wu = u + w, w + u
            nd[uw] = nd.get(uw, 0) + c
            nd[wu] = nd.get(wu, 0) - c
        d = dict((u, c) for u, c in nd.items() if c)
    return d


def _times(a, b):
    d = {}
    for u, cu in a.items():
        for v, cv in b.items():
            w = u + v
            d[w] = d.get(w, 0) + cu * cv
    return d


def _framed(left, d, right):
    return [(left + w + right, c) for w, c in d.items() if c]


def _tn_frames(word, n):
    flags = (False,) + (True,) * n + (False,)
    for pieces in _cuts(word, flags):
        yield _framed(pieces[0], _bracket_words(pieces[1:-1]), pieces[-1])


def _t32_frames(word):
    for terms in _tn_frames(word, 4):
        yield terms
    flags = (False,) + (True,) * 5 + (False,)
    for pieces in _cuts(word, flags):
        d = _times(_bracket_words(pieces[1:4]), _bracket_words(pieces[4:6]))
        yield _framed(pieces[0], d, pieces[-1])


def s_element(js):
    """[x_j1, x_j2, x_j3][x_j4, x_j5] for five indices."""
    j = [(i,) for i in js]
    return _times(_bracket_words(j[0:3]), _bracket_words(j[3:5]))


def _i32_frames(word):
    for a in range(len(word) - 4):
        mid = word[a:a + 5]
        if all(mid[k] < mid[k + 1] for k in range(4)):
            yield _framed(word[:a], s_element(mid), word[a + 5:])


def _gamma_frames(word, n):
    if n == 1:
        yield [(word, 1)]
        return
    for pieces in _cuts(word, (True,) * n):
        yield _framed((), _bracket_words(pieces), ())


def _custom_frames(word, schemas):
    for g in schemas:
        vs = sorted(freering.variables(g))
        slot = dict((v, k) for k, v in enumerate(vs))
        terms = [(tuple(slot[v] for v in w), c) for w, c in g.items()]
        flags = (False,) * (len(vs) + 2)
        for pieces in _cuts(word, flags):
            args = pieces[1:-1]
            d = {}
            for positions, c in terms:
                u = tuple(x for k in positions for x in args[k])
                d[u] = d.get(u, 0) + c
            yield _framed(pieces[0], d, pieces[-1])


def _frames(spec, word):
    if spec.kind == 'T':
        return _tn_frames(word, spec.n)
    if spec.kind == 'T32':
        return _t32_frames(word)
    if spec.kind == 'I32':
        return _i32_frames(word)
    if spec.kind == 'gamma':
        return _gamma_frames(word, spec.n)
    if spec.kind == 'custom':
        return _custom_frames(word, spec.schemas)
    raise SpecError('Unknown ideal kind {0!r}'.format(spec.kind))


def _generator_vectors(spec, basis):
    """Sparse coordinate vectors of the frames, zero ones dropped and
    duplicates removed up to sign."""
    seen = set()
    out = []
    for word in basis.monomials:
        for terms in _frames(spec, tuple(word)):
            vec = basis.sparse(terms)
            if not vec:
                continue
            key = tuple(sorted(vec.items()))
            if key[0][1] < 0:
                key = tuple((i, -c) for i, c in key)
            if key in seen:
                continue
            seen.add(key)
            out.append(vec)
    return out


def enumerate_generators(spec, mu):
    """
    Multihomogeneous polynomials of multidegree mu spanning the
    intersection of spec's subgroup with the component (no two equal up
    to sign, none zero).

    >>> enumerate_generators(GammaN(2), MultiDegree({1: 1, 2: 1}))
    [x1*x2 - x2*x1]
    """
    basis = component_basis(mu)
    return [basis.element(v) for v in _generator_vectors(spec, basis)]


class ComponentLattice(object):
    """
    :members:
      - `spec`, `basis` (a :class:`ComponentBasis`)
      - `lattice`: the :class:`zlinalg.Lattice` of the component
      - `generator_count`: frames kept after deduplication
    """

    __slots__ = ['spec', 'basis', 'lattice', 'generator_count']

    def __init__(self, spec, basis, lattice, generator_count):
        self.spec = spec
        self.basis = basis
        self.lattice = lattice
        self.generator_count = generator_count

    @property
    def mu(self):
        return self.basis.mu

    @property
    def rank(self):
        return self.lattice.rank

    def __repr__(self):
        return 'ComponentLattice({0}, {1}, rank={2}/{3})'.format(
            self.spec, self.basis.mu, self.lattice.rank, self.basis.dim)


_cache = {}
_cache_lock = threading.RLock()


def clear_cache():
    with _cache_lock:
        _cache.clear()


def _dense(vec, n):
    row = [0] * n
    for i, c in vec.items():
        row[i] = c
    return row


def component_lattice(spec, mu, dim_cap=None):
    """
    The lattice of spec's subgroup inside the component of multidegree mu,
    memoized per (spec, mu).

    >>> component_lattice(GammaN(2), MultiDegree({1: 1, 2: 1})).lattice.rows()
    [(1, -1)]
    """
    key = (spec, mu)
    if dim_cap is not None and component_dim(mu) > dim_cap:
        raise ComponentTooLarge(mu, component_dim(mu), dim_cap)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    basis = component_basis(mu)
    start = time.time()
    vectors = _generator_vectors(spec, basis)
    n = basis.dim
    lattice = zlinalg.lattice_from_rows((_dense(v, n) for v in vectors), n)
    result = ComponentLattice(spec, basis, lattice, len(vectors))
    log.debug('%s at %s: %d generators, rank %d of %d (%.2fs)', spec, mu,
              len(vectors), lattice.rank, n, time.time() - start)
    with _cache_lock:
        return _cache.setdefault(key, result)

# ----------------------------------------------------------------------
# queries
# ----------------------------------------------------------------------

def ideal_member(f, spec, dim_cap=None):
    """
    Every subgroup here is spanned by multihomogeneous elements, so f is a
    member iff each of its multihomogeneous parts is.
    """
    for mu, part in sorted(freering.homogeneous_parts(f).items()):
        cl = component_lattice(spec, mu, dim_cap)
        if not zlinalg.member(cl.basis.coordinates(part), cl.lattice):
            return False
    return True


def order_mod_ideal(f, spec, dim_cap=None):
    """
    Least k >= 1 with k*f in the subgroup, or zlinalg.INFINITE.
    """
    order = 1
    for mu, part in sorted(freering.homogeneous_parts(f).items()):
        cl = component_lattice(spec, mu, dim_cap)
        k = zlinalg.order_in_quotient(cl.basis.coordinates(part), cl.lattice)
        if k is zlinalg.INFINITE:
            return k
        order = zlinalg.lcm(order, k)
    return order


def x(i):
    return freering.var(i)


def bracket(*indices):
    return freering.commutator([x(i) for i in indices])


def element_v():
    """v = [x1,x2,x3][x4,x5]"""
    return bracket(1, 2, 3) * bracket(4, 5)


def element_w():
    """w = [x1[x2,x3,x4], x5]"""
    return freering.commutator([x(1) * bracket(2, 3, 4), x(5)])


def sign_congruence_check(sigma):
    """
    [x1,x2,x3][x4,x5] - sgn(sigma)[x_s1,x_s2,x_s3][x_s4,x_s5] in T(4), for
    sigma given as the tuple of images (s1, ..., s5).
    """
    if sorted(sigma) != [1, 2, 3, 4, 5]:
        raise ValueError('Not a permutation of 1..5: {0}'.format(sigma))
    s = tuple(sigma)
    f = element_v() - permutation_sign(s) * (bracket(*s[0:3]) * bracket(*s[3:5]))
    return ideal_member(f, Tn(4))


def generalized_sign_congruence_check(n, sigma):
    """
    [x1,x2,x3][x4,...,x(n+1)] = sgn(sigma)[x_s1,x_s2,x_s3][x4,...,xn,x_s(n+1)]
    modulo T(n), for sigma a permutation of {1, 2, 3, n+1} given as the
    images (s1, s2, s3, s(n+1)).
    """
    domain = [1, 2, 3, n + 1]
    if n < 4 or sorted(sigma) != domain:
        raise ValueError('Not a permutation of {0}: {1}'.format(domain, sigma))
    s1, s2, s3, sl = sigma
    lhs = bracket(1, 2, 3) * bracket(*range(4, n + 2))
    rhs = bracket(s1, s2, s3) * bracket(*(list(range(4, n + 1)) + [sl]))
    return ideal_member(lhs - permutation_sign(sigma) * rhs, Tn(n))


def lemma_2_2_by_jacobi():
    """
    3v in T(4) from the Jacobi identity and two even sign congruences:
    3v = J + (v - [x2,x3,x1][x4,x5]) + (v - [x3,x1,x2][x4,x5]) with J = 0.
    """
    v = element_v()
    t2 = bracket(2, 3, 1) * bracket(4, 5)
    t3 = bracket(3, 1, 2) * bracket(4, 5)
    jacobi = v + t2 + t3
    T4 = Tn(4)
    return {
        'jacobi_vanishes': jacobi.is_zero(),
        'cyclic_congruences': [ideal_member(v - t2, T4), ideal_member(v - t3, T4)],
        'identity_holds': 3 * v == jacobi + (v - t2) + (v - t3),
        'three_v_member': ideal_member(3 * v, T4),
    }


def prop_1_5_decomposition():
    """
    w = x1[x2,x3,x4,x5] + [x1,x5][x2,x3,x4], first summand in T(4) and the
    second not.
    """
    w = element_w()
    first = x(1) * bracket(2, 3, 4, 5)
    second = bracket(1, 5) * bracket(2, 3, 4)
    T4 = Tn(4)
    return {
        'identity_holds': w == first + second,
        'first_in_T4': ideal_member(first, T4),
        'second_order_mod_T4': order_mod_ideal(second, T4),
    }
