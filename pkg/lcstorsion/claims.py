""" Claim registry

Every mechanically checkable statement has an id (``theorem-1.1``,
``lemma-3.2``, ...) and a function that computes it and returns
``(holds, witnesses)``.  :func:`run_claims` runs a selection of them on a
:class:`utils.WorkerPool` and returns one :class:`VerificationReport` per
claim, in registry order.

Claim functions take a :class:`ClaimSettings`; bounds there decide how far
the graded, infinite statements are followed.

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

import collections
import itertools
import json
import logging
import random
import time
import traceback

from . import freering
from . import ideals
from . import liebasis
from . import t32basis
from . import zlinalg
from .freering import MultiDegree
from .ideals import bracket, x
from .utils import WorkerPool

log = logging.getLogger('lcstorsion.claims')

VERIFIED = 'verified'
FAILED = 'failed'
SKIPPED = 'skipped'


class UnknownClaimError(ValueError):

    def __init__(self, claim_id):
        self.claim_id = claim_id
        ValueError.__init__(self, 'Unknown claim {0!r}; try the list command'.format(claim_id))


ClaimSettings = collections.namedtuple(
    'ClaimSettings', 'max_degree max_var max_component_dim threads transforms seed',
    defaults=(5, 5, 720, 1, False, 0))


class VerificationReport(object):
    """
    :members:
      - `claim_id`: registry key
      - `status`: 'verified', 'failed' or 'skipped'
      - `witnesses`: JSON-ready dict (orders, ranks, invariant factors, ...)
      - `elapsed_ms`: wall-clock time of the check
    """

    def __init__(self, claim_id, status, witnesses, elapsed_ms):
        if status == FAILED and not witnesses:
            witnesses = {'reason': 'no witness recorded'}
        self.claim_id = claim_id
        self.status = status
        self.witnesses = witnesses
        self.elapsed_ms = elapsed_ms

    def to_dict(self):
        return {
            'claim_id': self.claim_id,
            'status': self.status,
            'witnesses': self.witnesses,
            'elapsed_ms': self.elapsed_ms,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        return '<report {0}: {1}>'.format(self.claim_id, self.status)


class Claim(object):

    def __init__(self, claim_id, description, fun):
        self.claim_id = claim_id
        self.description = description
        self.fun = fun


REGISTRY = collections.OrderedDict()


def claim(claim_id, description):
    "Decorator registering fun(settings) -> (holds, witnesses) under claim_id"
    def register(fun):
        REGISTRY[claim_id] = Claim(claim_id, description, fun)
        return fun
    return register


def _plain(value):
    """Witness values as JSON-ready data."""
    if isinstance(value, dict):
        return dict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, freering.Poly):
        return freering.render(value)
    return str(value)


def _holds_all(*reports):
    return all(r['holds'] for r in reports)

# ----------------------------------------------------------------------
# main results
# ----------------------------------------------------------------------

@claim('theorem-1.1', '3v is in T(4) but v is not, for v = [x1,x2,x3][x4,x5]')
def theorem_1_1(settings):
    v = ideals.element_v()
    T4 = ideals.Tn(4)
    cap = settings.max_component_dim
    order = ideals.order_mod_ideal(v, T4, cap)
    member_v = ideals.ideal_member(v, T4, cap)
    member_3v = ideals.ideal_member(3 * v, T4, cap)
    return order == 3 and not member_v and member_3v, {
        'order': order, 'member_v': member_v, 'member_3v': member_3v}


@claim('cor-1.2', 'T(3,2)/T(4) on the multilinear degree five component is elementary abelian 3')
def cor_1_2(settings):
    mu = MultiDegree.ones(5)
    cap = settings.max_component_dim
    t4 = ideals.component_lattice(ideals.Tn(4), mu, cap).lattice
    t32 = ideals.component_lattice(ideals.T32(), mu, cap).lattice
    q = zlinalg.quotient_invariants(t4, t32)
    witnesses = {'free_rank': q.free_rank, 'torsion': q.torsion,
                 't4_rank': t4.rank, 't32_rank': t32.rank}
    if settings.transforms:
        coords = [zlinalg.solve(r, t32) for r in t4.rows()]
        res = zlinalg.snf(zlinalg.IntMatrix(coords, t32.rank), transforms=True)
        U, V = res.transforms
        witnesses['snf'] = {'d': res.d, 'U': zlinalg.matrix_to_json(U),
                            'V': zlinalg.matrix_to_json(V)}
    holds = q.free_rank == 0 and bool(q.torsion) and all(d == 3 for d in q.torsion)
    return holds, witnesses


@claim('prop-1.4', 'T(4) = T(3,2) on at most four variables, with torsion-free quotient')
def prop_1_4(settings):
    reports = [t32basis.verify_prop_1_4(m, settings.max_degree + 1, settings.max_component_dim)
               for m in (2, 3, 4)]
    contrast = t32basis.verify_contrast()
    witnesses = {
        'components': [r['components'] for r in reports],
        'contrast': contrast,
    }
    for m, r in zip((2, 3, 4), reports):
        if 'failures' in r:
            witnesses['failures_m{0}'.format(m)] = r['failures']
    return _holds_all(contrast, *reports), witnesses


@claim('prop-1.5', '6w is in gamma4 but w is not, for w = [x1[x2,x3,x4],x5]')
def prop_1_5(settings):
    w = ideals.element_w()
    cap = settings.max_component_dim
    in_g3 = ideals.ideal_member(w, ideals.GammaN(3), cap)
    in_g4 = ideals.ideal_member(w, ideals.GammaN(4), cap)
    six_in_g4 = ideals.ideal_member(6 * w, ideals.GammaN(4), cap)
    order = ideals.order_mod_ideal(w, ideals.GammaN(4), cap)
    decomposition = ideals.prop_1_5_decomposition()
    holds = (in_g3 and six_in_g4 and not in_g4 and order is not zlinalg.INFINITE
             and 6 % order == 0 and order > 1
             and decomposition['identity_holds'] and decomposition['first_in_T4'])
    return holds, {'member_gamma3': in_g3, 'member_gamma4': in_g4,
                   'six_w_member_gamma4': six_in_g4, 'order_gamma4': order,
                   'decomposition': decomposition}

# ----------------------------------------------------------------------
# commutator identities and T4 membership
# ----------------------------------------------------------------------

def _lemma_2_1_pair(a):
    """The two sums for arguments a1..a5 (Poly)."""
    c = freering.commutator
    v = c(a[0:3]) * c(a[3:5])
    first = v + c([a[0], a[1], a[3]]) * c([a[2], a[4]])
    second = v + c([a[0], a[3], a[2]]) * c([a[1], a[4]])
    return first, second


def _random_word(rng, alphabet, max_len):
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))


@claim('lemma-2.1', '[a1,a2,a3][a4,a5] + [a1,a2,a4][a3,a5] and [a1,a2,a3][a4,a5] + [a1,a4,a3][a2,a5] lie in T(4)')
def lemma_2_1(settings):
    T4 = ideals.Tn(4)
    cap = settings.max_component_dim
    bad = []
    for p in liebasis.PERMS5:
        for f in _lemma_2_1_pair([x(i) for i in p]):
            if not ideals.ideal_member(f, T4, cap):
                bad.append(list(p))
    rng = random.Random(settings.seed)
    samples = 0
    while samples < 5:
        words = [_random_word(rng, (1, 2, 3), 2) for _ in range(5)]
        if sum(len(w) for w in words) > 7:
            continue
        samples += 1
        for f in _lemma_2_1_pair([freering.monomial(w) for w in words]):
            if not ideals.ideal_member(f, T4, cap):
                bad.append([list(w) for w in words])
    witnesses = {'multilinear_instances': 2 * len(liebasis.PERMS5), 'random_instances': 2 * samples}
    if bad:
        witnesses['counterexamples'] = bad
    return not bad, witnesses


@claim('lemma-2.2', '3[a1,a2,a3][a4,a5] lies in T(4), via the Jacobi identity')
def lemma_2_2(settings):
    report = ideals.lemma_2_2_by_jacobi()
    holds = (report['jacobi_vanishes'] and all(report['cyclic_congruences'])
             and report['identity_holds'] and report['three_v_member'])
    return holds, report


@claim('eq-2-signs', 'v = sgn(s) [x_s1,x_s2,x_s3][x_s4,x_s5] modulo T(4) for all s in S5')
def eq_2_signs(settings):
    bad = [list(p) for p in liebasis.PERMS5 if not ideals.sign_congruence_check(p)]
    witnesses = {'permutations': len(liebasis.PERMS5)}
    if bad:
        witnesses['counterexamples'] = bad
    return not bad, witnesses


@claim('remark-2.3-n5', '3[x1,x2,x3][x4,x5,x6] lies in T(5)')
def remark_2_3_n5(settings):
    mu = MultiDegree.ones(6)
    dim = ideals.component_dim(mu)
    if dim > settings.max_component_dim:
        raise ideals.ComponentTooLarge(mu, dim, settings.max_component_dim)
    f = bracket(1, 2, 3) * bracket(4, 5, 6)
    T5 = ideals.Tn(5)
    cap = settings.max_component_dim
    three = ideals.ideal_member(3 * f, T5, cap)
    order = ideals.order_mod_ideal(f, T5, cap)
    signs = dict((''.join(map(str, s)), ideals.generalized_sign_congruence_check(5, s))
                 for s in itertools.permutations((1, 2, 3, 6)))
    return three and all(signs.values()), {
        'three_f_member': three, 'order': order,
        'sign_congruences_holding': sum(1 for ok in signs.values() if ok),
        'sign_congruences': len(signs)}


@claim('lemma-2.4', 'v = [x1,x2,x3][x4,x5] is not in T(4)')
def lemma_2_4(settings):
    member = ideals.ideal_member(ideals.element_v(), ideals.Tn(4), settings.max_component_dim)
    return not member, {'member_v': member}


@claim('prop-2.5', 'v is not in T(4) + I, through the presentation H/P')
def prop_2_5(settings):
    pre = liebasis.p_from_psi()
    h = liebasis.verify_h_not_in_P()
    pipeline = liebasis.pipeline_order_of_v()
    reduction = liebasis.verify_generator_reduction()
    return _holds_all(pre, h, pipeline, reduction), {
        'p_is_preimage': pre, 'h12345': h, 'pipeline': pipeline,
        'generator_reduction': reduction}

# ----------------------------------------------------------------------
# degree five lattices and the presentation
# ----------------------------------------------------------------------

@claim('lemma-3.1', 'the commutators [xn, x_i1, ..., x_i(n-1)] are a basis of V_n')
def lemma_3_1(settings):
    reports = [liebasis.verify_vn_basis(n) for n in range(2, 7)]
    return _holds_all(*reports), {'n': [r['n'] for r in reports],
                                  'ranks': [r['rank'] for r in reports],
                                  'holds': [r['holds'] for r in reports]}


@claim('lemma-3.2', 'W1 and W2 intersect in 0')
def lemma_3_2(settings):
    disjoint = liebasis.verify_w1_w2_disjoint()
    direct = liebasis.verify_w1_direct_sum()
    return _holds_all(disjoint, direct), {'disjoint': disjoint, 'direct_sum': direct}


@claim('lemma-3.3', 'W2 is free abelian with basis B')
def lemma_3_3(settings):
    report = liebasis.verify_b_basis()
    return report['holds'], report


@claim('cor-3.4', 'U1 and U2 intersect in 0')
def cor_3_4(settings):
    report = liebasis.verify_corollaries()
    return report['u1_u2_meet_rank'] == 0, {'u1_u2_meet_rank': report['u1_u2_meet_rank']}


@claim('cor-3.5', "U2' is spanned by B1 and U2/U2' is free on B2 and B3")
def cor_3_5(settings):
    report = liebasis.verify_corollaries()
    quotient = report['u2_over_u2prime']
    holds = (report['u2prime_equals_b1_span'] and not quotient['torsion']
             and quotient['free_rank'] == liebasis.build_section3().quotient_rank)
    return holds, {'u2prime_rank': report['u2prime_rank'], 'u2_over_u2prime': quotient}


@claim('lemma-4.1', 'the kernel of psi is Q')
def lemma_4_1(settings):
    ker = liebasis.verify_ker_psi()
    gen = liebasis.verify_c_generates()
    return _holds_all(ker, gen), {'kernel': ker, 'c_generates': gen}


@claim('lemma-4.2', 'h12345 is not in P')
def lemma_4_2(settings):
    report = liebasis.verify_h_not_in_P()
    return report['holds'], report

# ----------------------------------------------------------------------
# T32 bases and decompositions
# ----------------------------------------------------------------------

@claim('lemma-5.1', '[a1,a2][a3,a4][a5,a6] + [a1,a3][a2,a4][a5,a6] lies in T(3,2)')
def lemma_5_1(settings):
    T32 = ideals.T32()
    cap = settings.max_component_dim
    rng = random.Random(settings.seed)
    bad = []
    samples = 0
    while samples < 6:
        words = [_random_word(rng, (1, 2, 3), 2) for _ in range(6)]
        if sum(len(w) for w in words) > 7:
            continue
        samples += 1
        if not ideals.ideal_member(t32basis.lemma_5_1_instance(words), T32, cap):
            bad.append([list(w) for w in words])
    witnesses = {'instances': samples}
    if bad:
        witnesses['counterexamples'] = bad
    return not bad, witnesses


@claim('cor-5.2', 'signed products of three commutators are congruent modulo T(3,2)')
def cor_5_2(settings):
    T32 = ideals.T32()
    cap = settings.max_component_dim
    rng = random.Random(settings.seed + 1)
    perms = list(itertools.permutations(range(1, 7)))
    candidates = []
    multilinear = ideals.component_dim(MultiDegree.ones(6)) <= cap
    if multilinear:
        candidates.extend((sigma, None) for sigma in rng.sample(perms, 8))
    for _ in range(40):
        # six letters out of x1..x4, one of them sometimes doubled: degree <= 7
        words = [(rng.randint(1, 4),) for _ in range(6)]
        if rng.random() < 0.5:
            k = rng.randrange(6)
            words[k] = words[k] + (rng.randint(1, 4),)
        candidates.append((rng.choice(perms), words))
    checked = {'multilinear': 0, 'repeated_letters': 0}
    trivial = 0
    bad = []
    for sigma, words in candidates:
        kind = 'multilinear' if words is None else 'repeated_letters'
        if checked[kind] >= 6:
            continue
        if words is not None:
            mu = MultiDegree.of_word(tuple(itertools.chain.from_iterable(words)))
            if ideals.component_dim(mu) > cap:
                continue
        f = t32basis.signed_product_congruence(sigma, words)
        if f.is_zero():
            trivial += 1
            continue
        checked[kind] += 1
        if not ideals.ideal_member(f, T32, cap):
            bad.append({'sigma': list(sigma),
                        'words': None if words is None else [list(w) for w in words]})
    witnesses = {'instances': checked, 'zero_instances_skipped': trivial}
    if not multilinear:
        witnesses['multilinear_skipped'] = 'dimension above max_component_dim {0}'.format(cap)
    if bad:
        witnesses['counterexamples'] = bad
    return not bad and sum(checked.values()) > 0, witnesses


@claim('nonmember-5', '[x1,x3][x2,x3] and [x1,x2]^2 have infinite order modulo T(3,2)')
def nonmember_5(settings):
    report = t32basis.verify_nonmembership_instances()
    return report['holds'], report


def graded_scope(settings):
    """
    (max total degree, number of variables, extra multidegrees) of the
    graded claims.  The multilinear degree six component is always part of
    the scope.
    """
    extra = []
    if settings.max_degree < 6 or settings.max_var < 6:
        extra.append(MultiDegree.ones(6))
    return settings.max_degree, settings.max_var, extra


def _graded_witnesses(report, cap, prefix=''):
    witnesses = {}
    for key in ('failures', 'skipped'):
        if key in report:
            witnesses[prefix + key] = report[key]
    if 'skipped' in report:
        witnesses[prefix + 'skipped_reason'] = 'dimension above max_component_dim {0}'.format(cap)
    return witnesses


@claim('theorem-1.3-graded', 'Z<X>/T(3,2) is free abelian on D, component by component')
def theorem_1_3_graded(settings):
    cap = settings.max_component_dim
    max_total, max_var, extra = graded_scope(settings)
    report = t32basis.verify_graded_basis(max_total, max_var, extra, cap)
    witnesses = {'components': report['components'],
                 'ranks': dict((r['mu'], [r['t32_rank'], r['d_count']]) for r in report['records'])}
    witnesses.update(_graded_witnesses(report, cap))
    return report['holds'], witnesses


@claim('lemma-6.1', 'T(3,2) = T(4) + I(3,2)')
def lemma_6_1(settings):
    cap = settings.max_component_dim
    max_total, max_var, extra = graded_scope(settings)
    report = t32basis.verify_t32_decomposition(max(max_total, 4), max_var, extra, cap)
    xi = t32basis.verify_xi_projection(max_total, cap, seed=settings.seed)
    witnesses = {'components': report['components'], 's_killed_by_xi': xi['s_killed'],
                 'xi_components': xi['components'], 'xi_mixed_generators': xi['mixed_generators']}
    witnesses.update(_graded_witnesses(report, cap))
    witnesses.update(_graded_witnesses(xi, cap, 'xi_'))
    return _holds_all(report, xi), witnesses

# ----------------------------------------------------------------------
# running
# ----------------------------------------------------------------------

def resolve(ids):
    """Expand 'all' and check every id against the registry."""
    out = []
    for claim_id in ids:
        if claim_id == 'all':
            out.extend(REGISTRY)
        elif claim_id in REGISTRY:
            out.append(claim_id)
        else:
            raise UnknownClaimError(claim_id)
    return out


def run_claim(claim_id, settings=None):
    settings = settings or ClaimSettings()
    entry = REGISTRY.get(claim_id)
    if entry is None:
        raise UnknownClaimError(claim_id)
    log.info('checking %s', claim_id)
    start = time.time()
    try:
        holds, witnesses = entry.fun(settings)
        status = VERIFIED if holds else FAILED
    except ideals.ComponentTooLarge as e:
        status, witnesses = SKIPPED, {'reason': str(e)}
    except Exception as e:
        log.debug(traceback.format_exc())
        status, witnesses = FAILED, {'error': '{0}: {1}'.format(type(e).__name__, e)}
    elapsed = int((time.time() - start) * 1000)
    report = VerificationReport(claim_id, status, _plain(witnesses), elapsed)
    if status == FAILED:
        log.error('%s failed: %s', claim_id, json.dumps(report.witnesses, sort_keys=True))
    else:
        log.info('%s %s in %d ms', claim_id, status, elapsed)
    return report


def run_claims(ids, settings=None):
    """
    Run the selected claims (ids may include 'all'); reports come back in
    the order of `ids`.
    """
    settings = settings or ClaimSettings()
    ids = resolve(ids)
    with WorkerPool(settings.threads) as pool:
        results = pool.map_ordered(lambda cid: run_claim(cid, settings), ids)
    return [report for report, _ in results]
