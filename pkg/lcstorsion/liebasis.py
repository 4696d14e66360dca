""" Lie elements in the multilinear component of degree five

The constructions behind the non-membership v = [x1,x2,x3][x4,x5] not in
T(4): the commutator basis of V_n = L(X) meet P_n, the subgroups W1 and W2
of P5 with the basis B = B1 + B2 + B3 of W2, and the presentation (H, Q, P)
on the 120 generators h_{i1 i2 i3 i4 i5} together with the sign map mu.

Everything is computed in the coordinates of P5, the 120 multilinear words
on x1..x5 in lexicographic order.  Modulo the ideal I of monomials with a
repeated variable, the multilinear component embeds unchanged, so the
quotient map by I is the identity on these coordinates.

Functions named ``verify_*`` return report dicts: a ``holds`` flag plus the
ranks, invariant factors and orders that witness it.

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
import itertools
import logging

from . import freering
from . import ideals
from . import zlinalg
from .freering import MultiDegree
from .ideals import bracket, x
from .utils import permutation_sign

log = logging.getLogger('lcstorsion.liebasis')

VN_CAP = 7

# ----------------------------------------------------------------------
# the basis of V_n
# ----------------------------------------------------------------------

class LieBasisSet(object):
    """
    The (n-1)! commutators [xn, x_i1, ..., x_i(n-1)], one per ordering of
    1..n-1, in lexicographic order of the orderings.
    """

    def __init__(self, n, orders, elements):
        self.n = n
        self.orders = list(orders)
        self.elements = list(elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return 'LieBasisSet(n={0}, size={1})'.format(self.n, len(self.elements))


def vn_basis(n, cap=VN_CAP):
    """
    >>> vn_basis(2).elements
    [-x1*x2 + x2*x1]
    >>> len(vn_basis(5))
    24
    """
    if not isinstance(n, int) or n < 2 or n > cap:
        raise ValueError('vn_basis needs 2 <= n <= {0}, got {1!r}'.format(cap, n))
    orders = list(itertools.permutations(range(1, n)))
    elements = [bracket(n, *order) for order in orders]
    return LieBasisSet(n, orders, elements)


def _invariant_factors(lattice):
    if lattice.has_unit_pivots():
        return [1] * lattice.rank
    return zlinalg.snf(lattice.basis_matrix).d


def verify_vn_basis(n, cap=VN_CAP):
    """
    The commutators are independent, span a direct summand of P_n, and
    have pairwise distinct leading words xn x_i1 ... x_i(n-1).
    """
    vb = vn_basis(n, cap)
    basis = ideals.component_basis(MultiDegree.ones(n))
    lattice = zlinalg.lattice_from_rows((basis.coordinates(e) for e in vb), basis.dim)
    factors = _invariant_factors(lattice)
    leading = [tuple(freering.leading_monomial(e)) for e in vb]
    expected = [(n,) + order for order in vb.orders]
    size = len(vb)
    report = {
        'n': n,
        'size': size,
        'rank': lattice.rank,
        'invariant_factors': factors,
        'leading_terms_match': leading == expected,
        'leading_terms_distinct': len(set(leading)) == size,
    }
    report['holds'] = (lattice.rank == size and all(d == 1 for d in factors)
                       and report['leading_terms_match']
                       and report['leading_terms_distinct'])
    return report

# ----------------------------------------------------------------------
# W1, W2 and the basis B
# ----------------------------------------------------------------------

PERMS5 = tuple(itertools.permutations(range(1, 6)))
PERMS4 = tuple(itertools.permutations(range(1, 5)))


def w1_element(p):
    """x_i1 [x_i2, x_i3, x_i4, x_i5]"""
    return x(p[0]) * bracket(*p[1:])


def w2_elements(p):
    return [bracket(*p), bracket(*p[:3]) * bracket(*p[3:])]


def b1_elements():
    return [bracket(5, *q) for q in PERMS4]


def b2_elements():
    """[x_i1, x_i2, x_i3][x5, x_i4], i1 greater than both i2 and i3"""
    return [bracket(q[0], q[1], q[2]) * bracket(5, q[3])
            for q in PERMS4 if q[0] > q[1] and q[0] > q[2]]


def b3_elements():
    """[x_i1, x_i2][x5, x_i3, x_i4], i1 > i2"""
    return [bracket(q[0], q[1]) * bracket(5, q[2], q[3])
            for q in PERMS4 if q[0] > q[1]]


class SectionThreeData(object):
    """
    :members:
      - `p5`: the :class:`ideals.ComponentBasis` of P5
      - `W1`, `W2`: lattices in P5 coordinates
      - `W1_parts`: W1^(j) for j = 1..5, x_j in front
      - `B1`, `B2`, `B3`: lists of Poly
      - `U2prime`: the lattice spanned by B1
      - `w_coords`: coordinates on W with respect to the W1 HNF rows
        followed by B1, B2, B3; the last |B2|+|B3| of them are the
        coordinates of U/(U1+U2')
    """

    def __init__(self, p5, W1, W1_parts, W2, B1, B2, B3):
        self.p5 = p5
        self.W1 = W1
        self.W1_parts = W1_parts
        self.W2 = W2
        self.B1 = B1
        self.B2 = B2
        self.B3 = B3
        self.U2prime = self.lattice_of(B1)
        rows = W1.rows() + [self.vector(b) for b in B1 + B2 + B3]
        self.w_coords = zlinalg.CoordinateSystem(rows, p5.dim)
        self.quotient_offset = W1.rank + len(B1)

    def vector(self, f):
        return self.p5.coordinates(f)

    def lattice_of(self, polys):
        return zlinalg.lattice_from_rows((self.vector(f) for f in polys), self.p5.dim)

    @property
    def B(self):
        return self.B1 + self.B2 + self.B3

    @property
    def quotient_rank(self):
        return len(self.B2) + len(self.B3)

    def quotient_coordinates(self, f):
        """Image of f in U/(U1+U2') = free on the images of B2 and B3, or
        None when f is not in W."""
        c = self.w_coords.coordinates(self.vector(f))
        if c is None:
            return None
        return c[self.quotient_offset:]


@functools.lru_cache(maxsize=None)
def build_section3():
    p5 = ideals.component_basis(MultiDegree.ones(5))

    def lattice(polys):
        return zlinalg.lattice_from_rows((p5.coordinates(f) for f in polys), p5.dim)

    W1 = lattice(w1_element(p) for p in PERMS5)
    parts = [lattice(w1_element(p) for p in PERMS5 if p[0] == j) for j in range(1, 6)]
    W2 = lattice(itertools.chain.from_iterable(w2_elements(p) for p in PERMS5))
    data = SectionThreeData(p5, W1, parts, W2, b1_elements(), b2_elements(), b3_elements())
    log.debug('W1 rank %d, W2 rank %d, |B| = %d + %d + %d', W1.rank, W2.rank,
              len(data.B1), len(data.B2), len(data.B3))
    return data


def verify_w1_w2_disjoint():
    s3 = build_section3()
    meet = zlinalg.lattice_intersect(s3.W1, s3.W2)
    self_meet = zlinalg.lattice_intersect(s3.W1, s3.W1)
    nu_kills_w2 = all(freering.nu(g, i).is_zero()
                      for p in PERMS5 for g in w2_elements(p) for i in range(1, 6))
    meet_in_kernels = all(
        freering.nu(s3.p5.element(row), i).is_zero()
        for row in meet.rows() for i in range(1, 6))
    return {
        'holds': meet.rank == 0 and self_meet == s3.W1 and nu_kills_w2 and meet_in_kernels,
        'intersection_rank': meet.rank,
        'w1_rank': s3.W1.rank,
        'w2_rank': s3.W2.rank,
        'nu_kills_w2': nu_kills_w2,
    }


def verify_w1_direct_sum():
    """
    W1 is the direct sum of the W1^(j), each free on
    x_j[x_m, ...] (m the largest index other than j) and mapped
    injectively by nu_j.
    """
    s3 = build_section3()
    ranks = [part.rank for part in s3.W1_parts]
    total = functools.reduce(zlinalg.lattice_sum, s3.W1_parts)
    injective = []
    c_bases = []
    for j, part in zip(range(1, 6), s3.W1_parts):
        others = [i for i in range(1, 6) if i != j]
        m = max(others)
        rest = [i for i in others if i != m]
        c = [x(j) * bracket(m, *q) for q in itertools.permutations(rest)]
        c_bases.append(s3.lattice_of(c) == part)
        target = ideals.component_basis(MultiDegree(dict((i, 1) for i in others)))
        images = zlinalg.lattice_from_rows(
            (target.coordinates(freering.nu(f, j)) for f in c), target.dim)
        injective.append(images.rank == len(c))
    return {
        'holds': (total == s3.W1 and sum(ranks) == s3.W1.rank
                  and all(c_bases) and all(injective)),
        'part_ranks': ranks,
        'w1_rank': s3.W1.rank,
        'c_bases': c_bases,
        'nu_injective': injective,
    }


def verify_b_basis():
    s3 = build_section3()
    B = s3.B
    span = s3.lattice_of(B)
    factors = _invariant_factors(span)
    in_w2 = all(zlinalg.member(s3.vector(b), s3.W2) for b in B)
    leading = set(tuple(freering.leading_monomial(b)) for b in B)
    return {
        'holds': (span.rank == len(B) and all(d == 1 for d in factors)
                  and span == s3.W2 and in_w2),
        'sizes': [len(s3.B1), len(s3.B2), len(s3.B3)],
        'rank': span.rank,
        'invariant_factors': factors,
        'equals_w2': span == s3.W2,
        'leading_terms_distinct': len(leading) == len(B),
    }


def verify_corollaries():
    """
    U1 meet U2 = 0; U2' is spanned by B1 (equivalently by all 5-fold
    commutators); U2/U2' is free on the images of B2 and B3.
    """
    s3 = build_section3()
    meet = zlinalg.lattice_intersect(s3.W1, s3.W2)
    all_five = s3.lattice_of(bracket(*p) for p in PERMS5)
    quotient = zlinalg.quotient_invariants(s3.U2prime, s3.W2)
    return {
        'holds': (meet.rank == 0 and all_five == s3.U2prime
                  and quotient.torsion == [] and quotient.free_rank == s3.quotient_rank),
        'u1_u2_meet_rank': meet.rank,
        'u2prime_rank': s3.U2prime.rank,
        'u2prime_equals_b1_span': all_five == s3.U2prime,
        'u2_over_u2prime': {'free_rank': quotient.free_rank, 'torsion': quotient.torsion},
    }

# ----------------------------------------------------------------------
# generators of the degree five part of T(4) modulo I
# ----------------------------------------------------------------------

def set5_elements(p):
    """The six frame shapes a1[a2,a3,a4,a5]a6 with one argument of degree two."""
    i1, i2, i3, i4, i5 = [x(i) for i in p]
    c = freering.commutator
    return [
        i1 * c([i2, i3, i4, i5]),
        c([i1, i2, i3, i4]) * i5,
        c([i1 * i2, i3, i4, i5]),
        c([i1, i2 * i3, i4, i5]),
        c([i1, i2, i3 * i4, i5]),
        c([i1, i2, i3, i4 * i5]),
    ]


def set6_elements(p):
    return [w1_element(p), bracket(*p)]


def set7_elements(p):
    i1, i2, i3, i4, i5 = p
    v = bracket(i1, i2, i3) * bracket(i4, i5)
    return [v + bracket(i1, i2, i4) * bracket(i3, i5),
            v + bracket(i1, i4, i3) * bracket(i2, i5)]


def t4_degree5():
    return ideals.component_lattice(ideals.Tn(4), MultiDegree.ones(5))


def verify_generator_reduction():
    s3 = build_section3()
    target = t4_degree5().lattice
    small = s3.lattice_of(itertools.chain.from_iterable(
        set6_elements(p) + set7_elements(p) for p in PERMS5))
    outside = None
    for p in PERMS5:
        for f in set5_elements(p):
            if not zlinalg.member(s3.vector(f), small):
                outside = f
                break
        if outside is not None:
            break
    report = {
        'holds': outside is None and small == target,
        'rank': small.rank,
        'equals_t4_component': small == target,
    }
    if outside is not None:
        report['outside'] = freering.render(outside)
    return report

# ----------------------------------------------------------------------
# the presentation H, Q, P
# ----------------------------------------------------------------------

def mu(perm):
    """
    Sign of the permutation i -> i_k of 1..5.

    >>> mu((1, 2, 3, 4, 5)), mu((2, 1, 3, 4, 5))
    (1, -1)
    """
    perm = tuple(perm)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError('Not a permutation of 1..{0}: {1}'.format(len(perm), perm))
    return permutation_sign(perm)


def mu_vector(vec, generators=PERMS5):
    return sum(c * mu(g) for g, c in zip(generators, vec) if c)


def q_schemas(p):
    i1, i2, i3, i4, i5 = p
    return [
        [p, (i2, i1, i3, i4, i5)],
        [p, (i1, i2, i3, i5, i4)],
        [p, (i2, i3, i1, i4, i5), (i3, i1, i2, i4, i5)],
    ]


def p_schemas(p):
    i1, i2, i3, i4, i5 = p
    return [
        [p, (i1, i2, i4, i3, i5)],
        [p, (i1, i4, i3, i2, i5)],
    ]


class Presentation(object):
    """
    The free abelian group H on h_{i1..i5}, one generator per permutation
    (lexicographic order), with relation vectors for Q and the extra
    relations that generate P together with Q.
    """

    def __init__(self, generators, q_relations, p_extra):
        self.generators = tuple(generators)
        self.index = dict((g, k) for k, g in enumerate(self.generators))
        self.q_relations = q_relations
        self.p_extra = p_extra

    @property
    def rank(self):
        return len(self.generators)

    @property
    def p_relations(self):
        return self.q_relations + self.p_extra

    def unit(self, g):
        vec = [0] * self.rank
        vec[self.index[tuple(g)]] = 1
        return vec

    @functools.cached_property
    def q_lattice(self):
        return zlinalg.lattice_from_rows(self.q_relations, self.rank)

    @functools.cached_property
    def p_lattice(self):
        return zlinalg.lattice_from_rows(self.p_relations, self.rank)


def _relation_vectors(schemas, index, seen):
    out = []
    for p in PERMS5:
        for gens in schemas(p):
            vec = [0] * len(index)
            for g in gens:
                vec[index[g]] += 1
            key = tuple(vec)
            if key not in seen:
                seen.add(key)
                out.append(vec)
    return out


@functools.lru_cache(maxsize=None)
def build_presentation():
    index = dict((g, k) for k, g in enumerate(PERMS5))
    seen = set()
    q = _relation_vectors(q_schemas, index, seen)
    extra = _relation_vectors(p_schemas, index, seen)
    log.debug('presentation: %d Q relations, %d more for P', len(q), len(extra))
    return Presentation(PERMS5, q, extra)


def v_element(p):
    """[x_i1, x_i2, x_i3][x_i4, x_i5], the image of h_{i1..i5}"""
    return bracket(*p[:3]) * bracket(*p[3:])


@functools.lru_cache(maxsize=None)
def psi_matrix():
    """
    psi: H -> U/(U1+U2'), one row per generator in the coordinates of the
    images of B2 and B3.
    """
    s3 = build_section3()
    rows = []
    for p in PERMS5:
        c = s3.quotient_coordinates(v_element(p))
        if c is None:
            raise ArithmeticError('{0} is outside W'.format(freering.render(v_element(p))))
        rows.append(c)
    return zlinalg.IntMatrix(rows, s3.quotient_rank)


def c2_indices():
    """h_{i1 i2 i3 5 i4} with i1 greater than both i2 and i3"""
    return [(q[0], q[1], q[2], 5, q[3]) for q in PERMS4 if q[0] > q[1] and q[0] > q[2]]


def c3_indices():
    """h_{5 i3 i4 i1 i2} with i1 > i2"""
    return [(5, q[2], q[3], q[0], q[1]) for q in PERMS4 if q[0] > q[1]]


def _apply(M, vec):
    return [sum(c * M[k, j] for k, c in enumerate(vec) if c) for j in range(M.cols)]


def verify_ker_psi():
    pres = build_presentation()
    M = psi_matrix()
    psi_q_zero = all(not any(_apply(M, r)) for r in pres.q_relations)
    ker = zlinalg.kernel(M)
    Q = pres.q_lattice
    images = [M.row(pres.index[g]) for g in c2_indices() + c3_indices()]
    n = M.cols
    units = [tuple(1 if j == k else 0 for j in range(n)) for k in range(n)]
    c_unit = sorted(tuple(r) for r in images) == sorted(units)
    return {
        'holds': psi_q_zero and ker == Q and c_unit,
        'psi_kills_q': psi_q_zero,
        'kernel_rank': ker.rank,
        'q_rank': Q.rank,
        'kernel_equals_q': ker == Q,
        'c_images_are_basis': c_unit,
    }


def verify_c_generates():
    """H/Q is generated by the C2 and C3 generators."""
    pres = build_presentation()
    rows = pres.q_relations + [pres.unit(g) for g in c2_indices() + c3_indices()]
    span = zlinalg.lattice_from_rows(rows, pres.rank)
    return {
        'holds': span == zlinalg.Lattice.full(pres.rank),
        'c_size': len(c2_indices()) + len(c3_indices()),
        'rank': span.rank,
    }


def t4_quotient_lattice():
    """The degree five part of T(4) modulo I, as a lattice in U/(U1+U2')."""
    s3 = build_section3()
    rows = []
    for row in t4_degree5().lattice.rows():
        c = s3.quotient_coordinates(s3.p5.element(row))
        if c is None:
            raise ArithmeticError('T(4) basis row outside W')
        rows.append(c)
    return zlinalg.lattice_from_rows(rows, s3.quotient_rank)


def p_from_psi():
    """P is the preimage under psi of T(4) in U/(U1+U2')."""
    pres = build_presentation()
    M = psi_matrix()
    LT = t4_quotient_lattice()
    pre = zlinalg.preimage(M, LT)
    extra_images = all(zlinalg.member(_apply(M, r), LT) for r in pres.p_extra)
    return {
        'holds': pre == pres.p_lattice and extra_images,
        'preimage_rank': pre.rank,
        'p_rank': pres.p_lattice.rank,
        'extra_relations_map_into_t4': extra_images,
    }


def verify_h_not_in_P():
    pres = build_presentation()
    h = pres.unit((1, 2, 3, 4, 5))
    P = pres.p_lattice
    mus = [mu_vector(r) for r in pres.p_relations]
    order = zlinalg.order_in_quotient(h, P)
    return {
        'holds': not zlinalg.member(h, P) and all(m % 3 == 0 for m in mus)
                 and mu((1, 2, 3, 4, 5)) == 1 and order == 3,
        'member': zlinalg.member(h, P),
        'mu_values': sorted(set(mus)),
        'mu_h12345': mu((1, 2, 3, 4, 5)),
        'order': order,
    }


def pipeline_order_of_v():
    """
    Order of v modulo T(4) twice: as the order of h12345 in H/P and
    directly in the multilinear component.
    """
    pres = build_presentation()
    via_h = zlinalg.order_in_quotient(pres.unit((1, 2, 3, 4, 5)), pres.p_lattice)
    direct = ideals.order_mod_ideal(ideals.element_v(), ideals.Tn(4))
    return {
        'holds': via_h == direct == 3,
        'via_presentation': via_h,
        'direct': direct,
    }
