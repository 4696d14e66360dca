""" Normal forms modulo T(3,2)

The sets D' (products of commutators in normal form) and D (nondecreasing
monomial prefix times an element of D'), whose images are claimed to be a
basis of the additive group of Z<X>/T(3,2).  The claim is checked
component by component: the quotient of each multigraded component by
T(3,2) must be free of rank |D(mu)| with D(mu) mapping onto a basis.

Also here: the decomposition T(3,2) = T(4) + I(3,2), the equality of T(4)
and T(3,2) on at most four variables, and the projection xi that proves
it.

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
import logging
import random

from sympy.utilities.iterables import multiset_permutations

from . import freering
from . import ideals
from . import zlinalg
from .freering import MultiDegree
from .ideals import bracket, x
from .utils import permutation_sign

log = logging.getLogger('lcstorsion.t32basis')

D0, D1, D2, D3, D4 = 'D0', 'D1', 'D2', 'D3', 'D4'
KINDS = (D0, D1, D2, D3, D4)


def check_constraints(kind, indices):
    """
    Index constraints of the classes of D'.

    >>> check_constraints('D2', (1, 2, 1)), check_constraints('D2', (2, 3, 1))
    (True, False)
    >>> check_constraints('D3', (1, 3, 1, 2))
    False
    """
    t = tuple(indices)
    if kind == D0:
        return t == ()
    if kind == D1:
        return len(t) == 2 and t[0] < t[1]
    if kind == D2:
        return len(t) == 3 and t[0] < t[1] and t[0] <= t[2]
    if kind == D3:
        if len(t) != 4:
            return False
        i1, i2, i3, i4 = t
        if not (i1 < i2 and i3 < i4 and i1 <= i3):
            return False
        return i1 != i3 or i2 <= i4
    if kind == D4:
        return (len(t) >= 6 and len(t) % 2 == 0
                and all(t[k] < t[k + 1] for k in range(len(t) - 1)))
    raise ValueError('Unknown class {0!r}; expected one of {1}'.format(kind, ', '.join(KINDS)))


def _value(kind, t):
    if kind == D0:
        return freering.one()
    if kind == D2:
        return bracket(*t)
    result = freering.one()
    for k in range(0, len(t), 2):
        result = result * bracket(t[k], t[k + 1])
    return result


class DPrimeElement(object):
    """
    :members:
      - `kind`: 'D0' (the unit), 'D1' ([a,b]), 'D2' ([a,b,c]), 'D3'
        ([a,b][c,d]) or 'D4' (three or more brackets of degree two)
      - `indices`: the variable indices in reading order
      - `value`: the :class:`freering.Poly`
    """

    __slots__ = ['kind', 'indices', 'value']

    def __init__(self, kind, indices, value=None):
        indices = tuple(indices)
        if not check_constraints(kind, indices):
            raise ValueError('{0} does not satisfy the {1} constraints'.format(indices, kind))
        self.kind = kind
        self.indices = indices
        self.value = _value(kind, indices) if value is None else value

    @property
    def multidegree(self):
        return MultiDegree.of_word(self.indices)

    def __repr__(self):
        return '{0}{1}'.format(self.kind, self.indices)


class DElement(object):

    __slots__ = ['prefix', 'tail', 'value']

    def __init__(self, prefix, tail):
        prefix = tuple(prefix)
        if any(prefix[k] > prefix[k + 1] for k in range(len(prefix) - 1)):
            raise ValueError('Prefix {0} is not nondecreasing'.format(prefix))
        self.prefix = prefix
        self.tail = tail
        self.value = freering.monomial(prefix) * tail.value

    @property
    def multidegree(self):
        return MultiDegree.of_word(self.prefix) + self.tail.multidegree

    def __repr__(self):
        return '{0}*{1!r}'.format(freering.render_word(self.prefix), self.tail)


def _kind_for(total):
    return {0: D0, 2: D1, 3: D2, 4: D3}.get(total, D4 if total >= 6 and total % 2 == 0 else None)


def enumerate_d_prime(mu):
    """
    >>> enumerate_d_prime(MultiDegree({1: 1, 2: 1, 3: 1}))
    [D2(1, 2, 3), D2(1, 3, 2)]
    >>> enumerate_d_prime(MultiDegree({1: 2}))
    []
    """
    kind = _kind_for(mu.total)
    if kind is None:
        return []
    if kind == D4:
        letters = mu.letters()
        if not mu.is_multilinear():
            return []
        return [DPrimeElement(D4, letters)]
    return [DPrimeElement(kind, t)
            for t in (tuple(int(i) for i in w) for w in multiset_permutations(list(mu.letters())))
            if check_constraints(kind, t)]


def sub_multidegrees(mu):
    """All alpha <= mu entrywise, in lexicographic order of exponents."""
    support = mu.support()
    ranges = [range(mu.count(v) + 1) for v in support]
    for exps in itertools.product(*ranges):
        yield MultiDegree(dict(zip(support, exps)))


def enumerate_d(mu):
    """
    >>> enumerate_d(MultiDegree({1: 1}))
    [x1*D0()]
    >>> enumerate_d(MultiDegree({1: 1, 2: 1}))
    [x1*x2*D0(), 1*D1(1, 2)]
    """
    out = []
    for alpha in sub_multidegrees(mu):
        rest = mu - alpha
        tails = enumerate_d_prime(rest)
        for tail in tails:
            out.append(DElement(alpha.letters(), tail))
    out.sort(key=lambda d: (-len(d.prefix), d.prefix, d.tail.kind, d.tail.indices))
    return out


def multidegrees(max_var, max_total, min_total=1, variables=None):
    """
    Every multidegree over x1..x<max_var> (or the given variables) with
    total between min_total and max_total.

    >>> len(multidegrees(2, 2))
    5
    """
    vs = list(variables) if variables is not None else list(range(1, max_var + 1))
    out = []
    for total in range(min_total, max_total + 1):
        for combo in itertools.combinations_with_replacement(vs, total):
            out.append(MultiDegree.of_word(combo))
    return out


def _components(mus, dim_cap, skipped):
    for mu in mus:
        dim = ideals.component_dim(mu)
        if dim_cap is not None and dim > dim_cap:
            log.warning('skipping component %s of dimension %d (cap %d)', mu, dim, dim_cap)
            skipped.append(repr(mu))
            continue
        yield mu


def check_graded_component(mu, dim_cap=None):
    """Conditions (a) to (d) for one component; returns a record dict."""
    cl = ideals.component_lattice(ideals.T32(), mu, dim_cap)
    basis, T = cl.basis, cl.lattice
    ds = enumerate_d(mu)
    rows = [basis.coordinates(d.value) for d in ds]
    q = zlinalg.quotient_invariants(T)
    joint = zlinalg.lattice_from_rows(T.rows() + rows, basis.dim)
    spans = joint == zlinalg.Lattice.full(basis.dim)
    independent = zlinalg.quotient_invariants(T, joint).free_rank == len(ds)
    record = {
        'mu': repr(mu),
        'dim': basis.dim,
        't32_rank': T.rank,
        'd_count': len(ds),
        'torsion': q.torsion,
        'free_rank': q.free_rank,
        'spans': spans,
        'independent': independent,
    }
    record['holds'] = not q.torsion and q.free_rank == len(ds) and spans and independent
    return record


def _summarize(records, skipped):
    failures = [r for r in records if not r['holds']]
    report = {
        'holds': not failures,
        'components': len(records),
        'records': records,
    }
    if failures:
        report['failures'] = failures
    if skipped:
        report['skipped'] = skipped
    return report


def verify_graded_basis(max_total_degree, max_var, extra=(), dim_cap=None):
    """
    Free rank, torsion and the image of D on every component over
    x1..x<max_var> of total degree <= max_total_degree, plus the `extra`
    multidegrees.
    """
    if max_total_degree < 1 or max_var < 1:
        raise ValueError('Bounds must be at least 1')
    skipped = []
    mus = multidegrees(max_var, max_total_degree) + [m for m in extra]
    records = [check_graded_component(mu, dim_cap) for mu in _components(mus, dim_cap, skipped)]
    return _summarize(records, skipped)


def check_decomposition_component(mu, dim_cap=None):
    t32 = ideals.component_lattice(ideals.T32(), mu, dim_cap).lattice
    t4 = ideals.component_lattice(ideals.Tn(4), mu, dim_cap).lattice
    i32 = ideals.component_lattice(ideals.I32(), mu, dim_cap).lattice
    contained = all(zlinalg.member(r, t32) for r in t4.rows() + i32.rows())
    equal = zlinalg.lattice_sum(t4, i32) == t32
    return {
        'mu': repr(mu),
        't32_rank': t32.rank,
        't4_rank': t4.rank,
        'i32_rank': i32.rank,
        'contained': contained,
        'equal': equal,
        'holds': contained and equal,
    }


def verify_t32_decomposition(max_total_degree, max_var=6, extra=(), dim_cap=None):
    """T(3,2) = T(4) + I(3,2) on every component within the bounds."""
    if max_total_degree < 4:
        raise ValueError('The decomposition needs a degree bound of at least 4')
    skipped = []
    mus = multidegrees(max_var, max_total_degree, min_total=4) + [m for m in extra]
    records = [check_decomposition_component(mu, dim_cap)
               for mu in _components(mus, dim_cap, skipped)]
    return _summarize(records, skipped)


def verify_prop_1_4(m, max_total_degree, dim_cap=None):
    """
    On the variables x1..xm (m = 2, 3, 4) T(4) and T(3,2) agree, and the
    quotient by T(4) is torsion-free.
    """
    if m not in (2, 3, 4):
        raise ValueError('m must be 2, 3 or 4, got {0!r}'.format(m))
    skipped = []
    records = []
    for mu in _components(multidegrees(m, max_total_degree), dim_cap, skipped):
        t4 = ideals.component_lattice(ideals.Tn(4), mu, dim_cap).lattice
        t32 = ideals.component_lattice(ideals.T32(), mu, dim_cap).lattice
        q = zlinalg.quotient_invariants(t4)
        records.append({
            'mu': repr(mu),
            'equal': t4 == t32,
            'torsion': q.torsion,
            'holds': t4 == t32 and not q.torsion,
        })
    report = _summarize(records, skipped)
    report['m'] = m
    return report


def verify_contrast():
    """
    On the multilinear component of degree five T(4) is a proper,
    non-saturated sublattice of T(3,2) with 3-torsion in between.
    """
    mu = MultiDegree.ones(5)
    t4 = ideals.component_lattice(ideals.Tn(4), mu).lattice
    t32 = ideals.component_lattice(ideals.T32(), mu).lattice
    own = zlinalg.quotient_invariants(t4)
    between = zlinalg.quotient_invariants(t4, t32)
    return {
        'holds': (t4 != t32 and bool(own.torsion) and all(d == 3 for d in own.torsion)
                  and between.free_rank == 0 and bool(between.torsion)
                  and all(d == 3 for d in between.torsion)),
        't4_rank': t4.rank,
        't32_rank': t32.rank,
        't4_torsion': own.torsion,
        't32_over_t4': {'free_rank': between.free_rank, 'torsion': between.torsion},
    }


def nonmembership_examples():
    return [
        ('[x1,x3][x2,x3]', bracket(1, 3) * bracket(2, 3)),
        ('[x1,x2]^2', bracket(1, 2) * bracket(1, 2)),
        ('[x1,x3][x2,x4] + [x1,x4][x2,x3]',
         bracket(1, 3) * bracket(2, 4) + bracket(1, 4) * bracket(2, 3)),
    ]


def verify_nonmembership_instances():
    orders = {}
    for name, f in nonmembership_examples():
        orders[name] = ideals.order_mod_ideal(f, ideals.T32())
    return {
        'holds': all(k is zlinalg.INFINITE for k in orders.values()),
        'orders': dict((name, str(k)) for name, k in orders.items()),
    }


def mixed_generators(count, seed=0):
    """
    Generators of T(3,2) whose linear arguments mix x1..x4 with x5 and x6:
    commutators [p1,p2,p3,p4] and products [p1,p2,p3][p4,p5].  The first
    one is [x1,x2,x3][x4,x5+x1], outside T(4) while its xi image is inside.
    Only generators with a nonzero xi image different from the generator
    are returned.
    """
    c = freering.commutator
    out = [bracket(1, 2, 3) * c([x(4), x(5) + x(1)])]
    rng = random.Random(seed)
    while len(out) < count:
        k = rng.choice((4, 5))
        args = []
        for _ in range(k):
            p = x(rng.randint(1, 4))
            if rng.random() < 0.5:
                p = p + x(rng.randint(5, 6))
            args.append(p)
        g = c(args) if k == 4 else c(args[0:3]) * c(args[3:5])
        image = freering.xi(g, 4)
        if image.is_zero() or image == g:
            continue
        out.append(g)
    return out


def verify_xi_projection(max_total_degree, dim_cap=None, samples=12, seed=0):
    """
    xi (killing x5, x6, ...) annihilates every element of S, I(3,2) has no
    component on x1..x4, every T(3,2) component over x1..x4 lies in T(4),
    and xi maps T(3,2) generators with mixed arguments into T(4).
    """
    s_killed = all(
        freering.xi(freering.Poly(ideals.s_element(js)), 4).is_zero()
        for js in itertools.combinations(range(1, 7), 5))
    T4 = ideals.Tn(4)
    skipped = []
    records = []
    for mu in _components(multidegrees(4, max_total_degree), dim_cap, skipped):
        t32 = ideals.component_lattice(ideals.T32(), mu, dim_cap)
        t4 = ideals.component_lattice(T4, mu, dim_cap).lattice
        i32 = ideals.component_lattice(ideals.I32(), mu, dim_cap).lattice
        ok = i32.rank == 0 and all(
            zlinalg.member(t32.basis.coordinates(freering.xi(t32.basis.element(r), 4)), t4)
            for r in t32.lattice.rows())
        records.append({'mu': repr(mu), 'holds': ok})
    report = _summarize(records, skipped)
    images_ok = []
    for g in mixed_generators(samples, seed):
        images_ok.append(ideals.ideal_member(freering.xi(g, 4), T4, dim_cap))
    report['s_killed'] = s_killed
    report['mixed_generators'] = len(images_ok)
    if not all(images_ok):
        report['mixed_failures'] = [k for k, ok in enumerate(images_ok) if not ok]
    report['holds'] = report['holds'] and s_killed and all(images_ok)
    return report


def lemma_5_1_instance(words):
    """
    [a1,a2][a3,a4][a5,a6] + [a1,a3][a2,a4][a5,a6] for six monomials.
    """
    a = [freering.monomial(w) for w in words]
    c = freering.commutator
    return (c([a[0], a[1]]) * c([a[2], a[3]]) * c([a[4], a[5]])
            + c([a[0], a[2]]) * c([a[1], a[3]]) * c([a[4], a[5]]))


def signed_product_congruence(sigma, words=None):
    """
    [a1,a2][a3,a4][a5,a6] - sgn(sigma)[a_s1,a_s2][a_s3,a_s4][a_s5,a_s6]
    for sigma a permutation of 1..6 (images in order); the a_i default to
    the variables x1..x6.
    """
    if sorted(sigma) != list(range(1, 7)):
        raise ValueError('Not a permutation of 1..6: {0}'.format(sigma))
    if words is None:
        a = [x(i) for i in range(1, 7)]
    else:
        a = [freering.monomial(w) for w in words]
    c = freering.commutator

    def product(order):
        return (c([a[order[0] - 1], a[order[1] - 1]]) * c([a[order[2] - 1], a[order[3] - 1]])
                * c([a[order[4] - 1], a[order[5] - 1]]))

    return product((1, 2, 3, 4, 5, 6)) - permutation_sign(sigma) * product(sigma)
