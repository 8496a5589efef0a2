# Copyright (c) 2026 The fedder Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
# implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Local models of generic projections in low dimension.

A generic projection X of a smooth r-fold to P^(r+1) (r <= 5) has, at
every point, the completion of one of a short list of hypersurface
rings in k[[z_1..z_(r+1)]].  Each case below carries its defining data,
the characteristics and dimensions it needs, and the verdict expected of
it: F-pure for the classified cases, not F-pure for the high
multiplicity family.
"""

import concurrent.futures
import logging
import random

from fedder import arith
from fedder import exceptions
from fedder import fsing
from fedder import groebner
from fedder import poly
from fedder import utils

log = logging.getLogger("fedder.zoo")

HYPERSURFACE = 'hypersurface'
UNION = 'union'
DEGREE_BOUND = 'degree-bound'

DOHERTY_R = 30
DOHERTY_ORDER = 32
DOHERTY_CONFIRM_TERMS = 20
DOHERTY_CONFIRM_VARS = 32

EXCLUDED = 'excluded by constraint'
ERROR = 'Error'


class ZooCase(object):
    """One entry of the catalog.

    :param excluded_char: characteristic the case is not claimed for
    :param min_r: smallest r the display makes sense for
    :param exact_r: r the case is stated for, when it is only one
    """

    def __init__(self, case_id, shape, description, expected,
                 excluded_char=None, min_r=1, exact_r=None):
        self.case_id = case_id
        self.shape = shape
        self.description = description
        self.expected = expected
        self.excluded_char = excluded_char
        self.min_r = min_r
        self.exact_r = exact_r

    @property
    def uses_d(self):
        return self.case_id == '0'

    def violation(self, p, r, d=None):
        """Why (p, r, d) is not admissible, or None when it is."""
        if self.excluded_char is not None and p == self.excluded_char:
            return 'case (%s) needs p != %d' % (self.case_id,
                                                self.excluded_char)
        if self.exact_r is not None and r != self.exact_r:
            return 'case (%s) needs r = %d, got %d' % (
                self.case_id, self.exact_r, r)
        if r < self.min_r:
            return 'case (%s) needs r >= %d, got %d' % (
                self.case_id, self.min_r, r)
        if self.uses_d:
            if d is None or not 1 <= d <= r + 1:
                return 'case (0) needs 1 <= d <= %d, got %s' % (r + 1, d)
        return None

    def admissible(self, p, r, d=None):
        return self.violation(p, r, d) is None

    def constraints(self):
        found = []
        if self.excluded_char is not None:
            found.append('p != %d' % self.excluded_char)
        if self.exact_r is not None:
            found.append('r = %d' % self.exact_r)
        elif self.min_r > 1:
            found.append('r >= %d' % self.min_r)
        if self.uses_d:
            found.append('1 <= d <= r+1')
        return found

    def to_dict(self):
        return {'id': self.case_id,
                'shape': self.shape,
                'description': self.description,
                'expected': self.expected,
                'constraints': self.constraints()}


CATALOG = [
    ZooCase('0', HYPERSURFACE, 'simple normal crossings z1*..*zd',
            fsing.FPURE),
    ZooCase('1a', HYPERSURFACE, 'pinch point zr^2 - z1^2*z(r+1)',
            fsing.FPURE, excluded_char=2, min_r=2),
    ZooCase('1b', HYPERSURFACE, 'zr^3 + Phi4 + Phi5',
            fsing.FPURE, excluded_char=3, min_r=4),
    ZooCase('2a', UNION, 'hyperplane and pinch point',
            fsing.FPURE, excluded_char=2, min_r=3),
    ZooCase('2b', UNION, 'hyperplane and zr^3 + Psi4 + Psi5',
            fsing.FPURE, excluded_char=3, exact_r=5),
    ZooCase('2c', UNION, 'two pinch points',
            fsing.FPURE, excluded_char=2, exact_r=5),
    ZooCase('3', UNION, 'two hyperplanes and a pinch point',
            fsing.FPURE, excluded_char=2, min_r=4),
    ZooCase('4', UNION, 'three hyperplanes and a pinch point',
            fsing.FPURE, excluded_char=2, exact_r=5),
    ZooCase('doherty', DEGREE_BOUND,
            'multiplicity %d point in %d variables' % (DOHERTY_ORDER,
                                                       DOHERTY_R + 1),
            fsing.NOT_FPURE, exact_r=DOHERTY_R),
]

_BY_ID = dict((case.case_id, case) for case in CATALOG)
_RANK = dict((case.case_id, i) for i, case in enumerate(CATALOG))


def get_case(case_id):
    try:
        return _BY_ID[str(case_id)]
    except KeyError:
        raise exceptions.DomainError(
            'unknown zoo case %r (known: %s)' % (
                case_id, ', '.join(c.case_id for c in CATALOG)))


def zoo_ring(p, r):
    """k[z1..z(r+1)] over F_p."""
    return poly.PolyRing(p, ['z%d' % i for i in range(1, r + 2)])


def phi4(a, b, c, zr, zr1):
    return (a ** 2 * c * zr - a ** 3 * zr1 + 2 * b * c * zr ** 2 -
            3 * a * b * zr * zr1)


def phi5(a, b, c, zr, zr1):
    return a ** 2 * c ** 2 * zr - a * b ** 2 * c * zr1 - b ** 3 * zr1 ** 2


def _pinch(z, top, pinch, edge):
    # z[i] is z_i, so indices follow the displays
    return z[top] ** 2 - z[pinch] ** 2 * z[edge]


def _cusp(z, a, b, c, r):
    args = (z[a], z[b], z[c], z[r], z[r + 1])
    return z[r] ** 3 + phi4(*args) + phi5(*args)


def doherty_polynomial(ring, tail_terms=0, seed=0):
    """(z1*..*z8)^4 plus a seeded tail of degree 32 terms."""
    z = [None] + ring.gens()
    f = ring.one()
    for i in range(1, 9):
        f = f * z[i]
    f = f ** 4
    rng = random.Random(seed)
    tail = {}
    while len(tail) < tail_terms:
        mono = [0] * ring.nvars
        for _ in range(DOHERTY_ORDER):
            mono[rng.randrange(ring.nvars)] += 1
        mono = tuple(mono)
        if mono not in f.terms:
            tail[mono] = rng.randrange(1, ring.p)
    return f + poly.Polynomial(ring, tail)


def instantiate(case_id, p, r, d=None, tail_terms=0, seed=0):
    """Defining polynomials of a case in k[z1..z(r+1)].

    Hypersurface cases give [f], union cases give the two pieces [g, h]
    of the product g*h, and the degree bound family gives [f].
    """
    case = get_case(case_id)
    problem = case.violation(p, r, d)
    if problem:
        raise exceptions.DomainError(problem)
    ring = zoo_ring(p, r)
    z = [None] + ring.gens()
    cid = case.case_id
    if cid == '0':
        f = ring.one()
        for i in range(1, d + 1):
            f = f * z[i]
        return [f]
    if cid == '1a':
        return [_pinch(z, r, 1, r + 1)]
    if cid == '1b':
        return [_cusp(z, 1, 2, 3, r)]
    if cid == '2a':
        return [z[1], _pinch(z, r, 2, r + 1)]
    if cid == '2b':
        return [z[1], _cusp(z, 2, 3, 4, r)]
    if cid == '2c':
        return [_pinch(z, r, 1, r + 1), _pinch(z, r - 2, 2, r - 1)]
    if cid == '3':
        return [z[1] * z[2], _pinch(z, r, 3, r + 1)]
    if cid == '4':
        return [z[1] * z[2] * z[3], _pinch(z, r, 4, r + 1)]
    return [doherty_polynomial(ring, tail_terms, seed)]


def pinch_point_survivor(p, r):
    """The single term of (zr^2 - z1^2*z(r+1))^(p-1) outside m^[p].

    Only the middle binomial term keeps every exponent below p:
    (-1)^((p-1)/2) * C(p-1, (p-1)/2) * z1^(p-1) * zr^(p-1) * z(r+1)^((p-1)/2).
    """
    if p == 2:
        raise exceptions.DomainError('the pinch point survivor needs p odd')
    ring = zoo_ring(p, r)
    half = (p - 1) // 2
    coefficient = arith.binomial_mod_p(p - 1, half, ring.char)
    if half % 2:
        coefficient = -coefficient
    mono = [0] * ring.nvars
    mono[0] = p - 1
    mono[r - 1] = p - 1
    mono[r] = half
    return ring.monomial(mono, coefficient.value)


def cusp_survivor_monomial(p, r):
    """Exponents of (z1*z2*zr*z(r+1))^(p-1)."""
    mono = [0] * (r + 1)
    for i in (0, 1, r - 1, r):
        mono[i] = p - 1
    return tuple(mono)


def cusp_survivor_coefficient(p):
    """Coefficient of (z1*z2*zr*z(r+1))^(p-1) in (zr^3 + Phi4 + Phi5)^(p-1).

    (-3*z1*z2*zr*z(r+1))^(p-1) is not the only product landing there:
    k copies each of zr^3, -z1^3*z(r+1) and -z2^3*z(r+1)^2 together with
    m - 3k copies of the -3 term give the same monomial, so with m = p-1
    the coefficient is the sum over k of m!/(k!^3 (m-3k)!) * (-3)^(m-3k).
    """
    char = arith.as_char(p)
    m = p - 1
    minus_three = arith.FieldElement(-3, char)
    total = arith.FieldElement(0, char)
    for k in range(m // 3 + 1):
        # m < p, so the multinomial splits into binomials without loss
        ways = (arith.binomial_mod_p(m, 3 * k, char) *
                arith.binomial_mod_p(3 * k, k, char) *
                arith.binomial_mod_p(2 * k, k, char))
        total = total + ways * minus_three ** (m - 3 * k)
    return total


class CaseReport(object):
    """Result of checking one (case, p, r, d) instance."""

    def __init__(self, case_id, p, r, d=None, components=None,
                 computed=None, expected=None, wall_ms=0.0, excluded=None,
                 error=None):
        self.case_id = case_id
        self.p = p
        self.r = r
        self.d = d
        self.components = components or {}
        self.computed = computed
        self.expected = expected
        self.wall_ms = wall_ms
        self.excluded = excluded
        self.error = error

    @property
    def match(self):
        return (self.excluded is None and self.error is None and
                self.computed == self.expected)

    def sort_key(self):
        return (_RANK.get(self.case_id, len(_RANK)), self.p, self.r,
                self.d or 0)

    def to_dict(self):
        out = {'case': self.case_id, 'p': self.p, 'r': self.r,
               'd': self.d, 'expected': self.expected,
               'computed': self.computed, 'match': self.match,
               'wall_ms': self.wall_ms,
               'components': self.components}
        if self.excluded is not None:
            out['excluded'] = self.excluded
        if self.error is not None:
            out['error'] = self.error
        return out

    def __repr__(self):
        return 'CaseReport(%s, p=%d, r=%d, d=%s, %s)' % (
            self.case_id, self.p, self.r, self.d,
            'excluded' if self.excluded else self.computed)


def _union_outcome(direct, union):
    if not direct.fpure:
        return direct.outcome
    if union.outcome != fsing.F_INJECTIVE:
        return union.outcome
    return fsing.FPURE


def _doherty_components(f, limits):
    components = {}
    precheck = fsing.pigeonhole_precheck(f)
    if precheck is None:
        return components, fsing.INCONCLUSIVE
    components['pigeonhole'] = precheck.to_dict()
    computed = precheck.outcome
    ring = f.ring
    if (ring.p == 2 and ring.nvars <= DOHERTY_CONFIRM_VARS and
            len(f) <= DOHERTY_CONFIRM_TERMS):
        confirmation = fsing.fedder_hypersurface(f, limits)
        components['expansion'] = confirmation.to_dict()
        if confirmation.outcome != precheck.outcome:
            log.warning("expansion disagrees with the degree bound for %s",
                        f)
            computed = confirmation.outcome
    return components, computed


def verify_case(case_id, p, r=None, d=None, tail_terms=0, seed=0,
                limits=None):
    """Instantiate a case and run every check it is claimed for.

    Hypersurface cases go through Fedder's test.  Union cases g*h run
    the union argument on (g), (h) and (g, h), Fedder directly on g*h,
    and the tensor factor argument when g and h share no variables.
    The degree bound family runs the pigeonhole bound and, in
    characteristic 2, confirms it by expansion.

    :return: CaseReport
    """
    case = get_case(case_id)
    if r is None and case.exact_r is not None:
        r = case.exact_r
    if r is None:
        raise exceptions.DomainError('case (%s) needs r' % case.case_id)
    log.debug("zoo: case (%s) p=%d r=%s d=%s", case.case_id, p, r, d)
    with utils.Timer() as timer:
        polys = instantiate(case.case_id, p, r, d, tail_terms, seed)
        components = {'polynomials': [str(f) for f in polys]}
        if case.shape == HYPERSURFACE:
            verdict = fsing.fedder_hypersurface(polys[0], limits)
            components['hypersurface'] = verdict.to_dict()
            computed = verdict.outcome
        elif case.shape == UNION:
            g, h = polys
            union = fsing.union_decomposition_check(g, h, limits)
            direct = fsing.fedder_hypersurface(g * h, limits)
            components['union'] = union.to_dict()
            components['direct'] = direct.to_dict()
            tensor = fsing.tensor_factor_check([g, h], limits)
            if tensor is not None:
                components['tensor'] = tensor.to_dict()
            computed = _union_outcome(direct, union)
        else:
            found, computed = _doherty_components(polys[0], limits)
            components.update(found)
    return CaseReport(case.case_id, p, r, d, components, computed,
                      case.expected, round(timer.elapsed_ms, 3))


def _instances(cases, p_list, r_list):
    for case in cases:
        for p in p_list:
            rs = [case.exact_r] if case.case_id == 'doherty' else r_list
            for r in rs:
                ds = range(1, r + 2) if case.uses_d else [None]
                for d in ds:
                    yield case, p, r, d


def _run_instance(job):
    case_id, p, r, d, tail_terms, seed, limits = job
    try:
        return verify_case(case_id, p, r, d, tail_terms, seed, limits)
    except exceptions.FedderError as e:
        return CaseReport(case_id, p, r, d, computed=ERROR,
                          expected=get_case(case_id).expected,
                          error='%s: %s' % (type(e).__name__, e))


def verify_all(p_list, r_list, include_doherty=False, jobs=1, limits=None,
               tail_terms=0, seed=0):
    """Sweep the catalog over every (p, r, d) combination.

    Inadmissible combinations are kept as excluded records and failing
    instances as error records, so the sweep always runs to the end.

    :param jobs: worker processes; 1 runs everything in this process
    :return: CaseReports sorted by (case, p, r, d)
    """
    p_list = list(p_list)
    r_list = list(r_list)
    if not p_list or not r_list:
        raise exceptions.DomainError('a sweep needs characteristics and '
                                     'dimensions')
    for p in p_list:
        arith.as_char(p)
    for r in r_list:
        if r < 1:
            raise exceptions.DomainError('r must be positive, got %d' % r)
    limits = limits or groebner.DEFAULT_LIMITS
    cases = [c for c in CATALOG
             if include_doherty or c.shape != DEGREE_BOUND]
    reports = []
    jobs_to_run = []
    for case, p, r, d in _instances(cases, p_list, r_list):
        problem = case.violation(p, r, d)
        if problem:
            reports.append(CaseReport(case.case_id, p, r, d,
                                      expected=case.expected,
                                      excluded=problem))
            continue
        jobs_to_run.append((case.case_id, p, r, d, tail_terms, seed, limits))
    log.debug("zoo sweep: %d instances, %d excluded, %d jobs",
              len(jobs_to_run), len(reports), jobs)
    if jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(jobs) as pool:
            reports.extend(pool.map(_run_instance, jobs_to_run))
    else:
        reports.extend(_run_instance(job) for job in jobs_to_run)
    errors = [rep for rep in reports if rep.error is not None]
    if errors:
        log.warning("zoo sweep recorded %d errors", len(errors))
    return sorted(reports, key=CaseReport.sort_key)
