""" Free associative ring

Elements of the free unitary associative ring Z<X> on the countable set
X = {x1, x2, ...}.  A polynomial is a finite map from monomials (words over
variable indices) to nonzero Python integers, so arithmetic is exact.

There are two ways to create polynomials: parsing (see
:mod:`lcstorsion.exprparse`), or the constructors :func:`var`,
:func:`const`, :func:`monomial` and the :class:`Poly` class itself.

Run unit tests using
python -m doctest -v freering.py

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

import itertools
import collections

# ----------------------------------------------------------------------
# monomials and multidegrees
# ----------------------------------------------------------------------

class Monomial(tuple):
    """
    A word x_{i1} x_{i2} ... x_{ik} over variable indices, stored as the
    tuple (i1, ..., ik).  The empty word is the unit 1.

    Monomials are plain tuples underneath, so they hash and compare like
    their words.

    >>> Monomial((1, 3, 1))
    x1*x3*x1
    >>> Monomial(())
    1
    """

    __slots__ = ()

    def __new__(cls, word=()):
        word = tuple(word)
        for i in word:
            if not isinstance(i, int) or isinstance(i, bool) or i < 1:
                raise ValueError('Variable indices must be positive integers, got {0!r}'
                                 .format(i))
        return tuple.__new__(cls, word)

    @property
    def word(self):
        return tuple(self)

    @property
    def degree(self):
        return len(self)

    def multidegree(self):
        return multidegree(self)

    def canonical_key(self):
        """Length first, then lexicographic (the coordinate order)."""
        return canonical_key(self)

    def __repr__(self):
        return render_word(self)


def canonical_key(word):
    """Sort key of the canonical monomial order: by length, then lex."""
    return (len(word), tuple(word))


def render_word(word):
    if not word:
        return '1'
    return '*'.join('x{0}'.format(i) for i in word)


class MultiDegree(object):
    """
    Exponent vector of a monomial: how often each variable occurs.

    Only strictly positive entries are stored.

    >>> MultiDegree({1: 2, 3: 1, 4: 0})
    {1:2, 3:1}
    >>> MultiDegree({1: 2}) + MultiDegree({2: 1})
    {1:2, 2:1}
    """

    __slots__ = ['_exps', '_total']

    def __init__(self, exponents=None):
        if exponents is None:
            exponents = {}
        items = []
        for var, count in dict(exponents).items():
            if not isinstance(var, int) or var < 1:
                raise ValueError('Invalid variable index {0!r}'.format(var))
            if count < 0:
                raise ValueError('Negative exponent for x{0}'.format(var))
            if count:
                items.append((var, int(count)))
        items.sort()
        self._exps = tuple(items)
        self._total = sum(c for _, c in items)

    @staticmethod
    def ones(n):
        """The multilinear multidegree on x1, ..., xn."""
        return MultiDegree(dict((i, 1) for i in range(1, n + 1)))

    @staticmethod
    def of_word(word):
        return MultiDegree(collections.Counter(word))

    @property
    def exponents(self):
        return dict(self._exps)

    @property
    def total(self):
        return self._total

    def support(self):
        return tuple(v for v, _ in self._exps)

    def letters(self):
        """The sorted letter multiset, e.g. {1:2, 3:1} -> (1, 1, 3)."""
        return tuple(itertools.chain.from_iterable(
            itertools.repeat(v, c) for v, c in self._exps))

    def count(self, var):
        return dict(self._exps).get(var, 0)

    def is_multilinear(self):
        return all(c == 1 for _, c in self._exps)

    def dominates(self, other):
        """True if other <= self entrywise."""
        mine = dict(self._exps)
        return all(mine.get(v, 0) >= c for v, c in other._exps)

    def __add__(self, other):
        exps = collections.Counter(dict(self._exps))
        exps.update(dict(other._exps))
        return MultiDegree(exps)

    def __sub__(self, other):
        if not self.dominates(other):
            raise ValueError('{0} does not dominate {1}'.format(self, other))
        exps = dict(self._exps)
        for v, c in other._exps:
            exps[v] -= c
        return MultiDegree(exps)

    def __eq__(self, other):
        return isinstance(other, MultiDegree) and self._exps == other._exps

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (self._total, self._exps) < (other._total, other._exps)

    def __hash__(self):
        return hash(self._exps)

    def __repr__(self):
        return '{' + ', '.join('{0}:{1}'.format(v, c) for v, c in self._exps) + '}'


def multidegree(m):
    """
    Exponent vector of a monomial.

    >>> multidegree(Monomial((1, 3, 1))).exponents
    {1: 2, 3: 1}
    >>> multidegree(Monomial(())).total
    0
    """
    return MultiDegree.of_word(m)

# ----------------------------------------------------------------------
# polynomials
# ----------------------------------------------------------------------

class Poly(object):
    """
    An element of Z<X>: a finite map from words to nonzero integers.

    Poly values are never mutated after construction.

    >>> x1, x2 = var(1), var(2)
    >>> x1 * x2 - x2 * x1
    x1*x2 - x2*x1
    >>> (x1 + x2) * (x1 - x2)
    x1*x1 - x1*x2 + x2*x1 - x2*x2
    >>> Poly()
    0
    """

    __slots__ = ['_terms']

    def __init__(self, terms=None):
        d = {}
        if terms:
            if isinstance(terms, dict):
                terms = terms.items()
            for word, coeff in terms:
                word = Monomial(word) if not isinstance(word, Monomial) else word
                d[word] = d.get(word, 0) + int(coeff)
        self._terms = dict((w, c) for w, c in d.items() if c)

    @staticmethod
    def _canonical(d):
        """Wrap a dict that is already keyed by words; zero values are dropped."""
        p = Poly.__new__(Poly)
        p._terms = dict((w, c) for w, c in d.items() if c)
        return p

    # -- access

    def terms(self):
        """(Monomial, coefficient) pairs in canonical order."""
        for w in sorted(self._terms, key=canonical_key):
            yield Monomial(w), self._terms[w]

    def monomials(self):
        return [w for w, _ in self.terms()]

    def coefficient(self, word):
        return self._terms.get(tuple(word), 0)

    def items(self):
        """Unordered (word, coefficient) pairs, words as plain tuples."""
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    @property
    def degree(self):
        if not self._terms:
            return -1
        return max(len(w) for w in self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other)
        return isinstance(other, Poly) and self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return render(self)

    # -- arithmetic

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(_coerce(other), self)

    def __pow__(self, e):
        return power(self, e)


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, int):
        return const(x)
    raise TypeError('Cannot use {0!r} as an element of Z<X>'.format(x))


def zero():
    return Poly()


def one():
    return const(1)


def const(c):
    return Poly._canonical({(): int(c)})


def var(i):
    """The variable x_i."""
    return Poly._canonical({Monomial((i,)): 1})


def monomial(word, coeff=1):
    return Poly._canonical({Monomial(word): int(coeff)})


def add(p, q):
    """
    Sum in canonical form.

    >>> add(var(1), -var(1))
    0
    >>> add(2 * monomial((1, 2)), 3 * monomial((1, 2)))
    5*x1*x2
    """
    d = dict(p._terms)
    for w, c in q._terms.items():
        d[w] = d.get(w, 0) + c
    return Poly._canonical(d)


def sub(p, q):
    d = dict(p._terms)
    for w, c in q._terms.items():
        d[w] = d.get(w, 0) - c
    return Poly._canonical(d)


def scale(p, k):
    k = int(k)
    if not k:
        return Poly()
    return Poly._canonical(dict((w, k * c) for w, c in p._terms.items()))


def mul(p, q):
    """
    Bilinear extension of word concatenation.

    >>> mul(var(1), var(2))
    x1*x2
    """
    d = {}
    for a, ca in p._terms.items():
        for b, cb in q._terms.items():
            w = a + b
            d[w] = d.get(w, 0) + ca * cb
    return Poly._canonical(dict((Monomial._make(w), c) for w, c in d.items()))


def power(p, e):
    if not isinstance(e, int) or e < 0:
        raise ValueError('Exponent must be a nonnegative integer, got {0!r}'.format(e))
    result = one()
    for _ in range(e):
        result = mul(result, p)
    return result


def _bracket(p, q):
    d = {}
    for a, ca in p._terms.items():
        for b, cb in q._terms.items():
            c = ca * cb
            ab = a + b
            ba = b + a
            d[ab] = d.get(ab, 0) + c
            d[ba] = d.get(ba, 0) - c
    return Poly._canonical(dict((Monomial._make(w), c) for w, c in d.items()))


def commutator(args):
    """
    Left-normed commutator [a1, ..., an] = [[a1, ..., a(n-1)], an].

    >>> x1, x2, x3 = var(1), var(2), var(3)
    >>> commutator([x1, x2])
    x1*x2 - x2*x1
    >>> commutator([x1, x2, x3]) + commutator([x2, x3, x1]) + commutator([x3, x1, x2])
    0
    """
    args = list(args)
    if not args:
        raise ValueError('commutator needs at least one argument')
    result = args[0]
    for a in args[1:]:
        result = _bracket(result, a)
    return result


def _make_monomial(word):
    return tuple.__new__(Monomial, word)

Monomial._make = staticmethod(_make_monomial)

# ----------------------------------------------------------------------
# grading
# ----------------------------------------------------------------------

def homogeneous_parts(p):
    """
    The multigraded decomposition of p, as a dict MultiDegree -> Poly.
    """
    parts = {}
    for w, c in p._terms.items():
        parts.setdefault(MultiDegree.of_word(w), {})[w] = c
    return dict((mu, Poly._canonical(d)) for mu, d in parts.items())


def is_multihomogeneous(p):
    return len(homogeneous_parts(p)) <= 1


def project_component(p, mu):
    """
    The terms of p whose monomial has multidegree exactly mu.

    >>> project_component(monomial((1, 2)) + monomial((1, 1)), MultiDegree({1: 1, 2: 1}))
    x1*x2
    """
    target = sorted(mu.letters())
    return Poly._canonical(dict((w, c) for w, c in p._terms.items()
                                if len(w) == mu.total and sorted(w) == target))


def variables(p):
    return frozenset(itertools.chain.from_iterable(p._terms))


def leading_monomial(p):
    """
    The lexicographically largest monomial of p (pure lex, not length first).

    >>> leading_monomial(commutator([var(3), var(1), var(2)]))
    x3*x1*x2
    """
    if not p._terms:
        raise ValueError('The zero polynomial has no leading monomial')
    return Monomial._make(max(p._terms))

# ----------------------------------------------------------------------
# endomorphisms
# ----------------------------------------------------------------------

def substitute(p, sigma):
    """
    Image of p under the ring endomorphism extending sigma (a dict from
    variable indices to Poly).  Every variable of p must be mapped.

    >>> substitute(monomial((1, 2)), {1: var(2), 2: var(1)})
    x2*x1
    """
    missing = variables(p) - set(sigma)
    if missing:
        raise ValueError('Substitution does not map x{0}'.format(min(missing)))
    images = dict((i, _coerce(a)) for i, a in sigma.items())
    d = {}
    for w, c in p._terms.items():
        image = {(): c}
        for i in w:
            image = _mul_dicts(image, images[i]._terms)
            if not image:
                break
        for u, cu in image.items():
            d[u] = d.get(u, 0) + cu
    return Poly._canonical(dict((Monomial._make(w), c) for w, c in d.items()))


def _mul_dicts(a, b):
    d = {}
    for u, cu in a.items():
        for v, cv in b.items():
            w = u + v
            d[w] = d.get(w, 0) + cu * cv
    return dict((w, c) for w, c in d.items() if c)


def nu(p, i):
    """
    The endomorphism sending x_i to 1 and fixing every other variable.

    >>> nu(monomial((1, 2, 1)), 1)
    x2
    >>> nu(commutator([var(1), var(2)]), 1)
    0
    """
    d = {}
    for w, c in p._terms.items():
        u = tuple(j for j in w if j != i)
        d[u] = d.get(u, 0) + c
    return Poly._canonical(dict((Monomial._make(w), c) for w, c in d.items()))


def xi(p, m):
    """
    The projection killing every variable of index > m.

    >>> xi(monomial((1, 5)), 4)
    0
    >>> xi(monomial((1, 2)), 4)
    x1*x2
    """
    return Poly._canonical(dict((w, c) for w, c in p._terms.items()
                                if all(j <= m for j in w)))

# ----------------------------------------------------------------------
# canonical text
# ----------------------------------------------------------------------

def render(p):
    """
    Canonical text: terms in canonical order, ``<coeff>*x<i1>*x<i2>*...``,
    coefficient omitted when it is +1 or -1, unit monomial rendered ``1``.

    >>> render(Poly())
    '0'
    >>> render(3 * var(2) - const(1))
    '-1 + 3*x2'
    """
    if not p._terms:
        return '0'
    pieces = []
    for w, c in p.terms():
        mag = abs(c)
        if not w:
            body = str(mag)
        elif mag == 1:
            body = render_word(w)
        else:
            body = '{0}*{1}'.format(mag, render_word(w))
        if not pieces:
            pieces.append(('-' if c < 0 else '') + body)
        else:
            pieces.append(('- ' if c < 0 else '+ ') + body)
    return ' '.join(pieces)
