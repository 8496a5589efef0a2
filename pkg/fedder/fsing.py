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

"""F-purity and F-injectivity decisions at the origin.

F-purity is decided with Fedder's criterion: S/I is F-pure at the origin
exactly when (I^[p] : I) is not inside m^[p].  For a hypersurface (f)
the colon is (f^(p-1)), and for a complete intersection (f_1..f_c) it is
((f_1...f_c)^(p-1)) modulo I^[p].

F-injectivity is reached through two surrogates: a Frobenius closed
parameter ideal of a Cohen-Macaulay ring, and F-purity of a Gorenstein
ring (hypersurfaces and complete intersections), where the two notions
agree.
"""

import logging

from fedder import exceptions
from fedder import frobenius
from fedder import groebner
from fedder import poly

log = logging.getLogger("fedder.fsing")

FPURE = 'FPure'
NOT_FPURE = 'NotFPure'

FEDDER_HYPERSURFACE = 'FedderHypersurface'
FEDDER_PRODUCT = 'FedderProduct'
FEDDER_GENERAL = 'FedderGeneral'
PIGEONHOLE = 'PigeonholeBound'

F_INJECTIVE = 'FInjective'
NOT_F_INJECTIVE = 'NotFInjective'
INCONCLUSIVE = 'Inconclusive'

CMFI_PARAMETER_IDEAL = 'CMFIParameterIdeal'
GORENSTEIN_FPURE = 'GorensteinFPure'
UNION_DECOMPOSITION = 'UnionDecomposition'
TENSOR_FACTORS = 'TensorFactors'

GRADED = 'graded'
AT_ORIGIN = 'at origin'

ASSUMING_CM = 'assuming CM'
CM_NOT_ASSERTED = 'CM not asserted'


def _locality(polys):
    if all(f.is_homogeneous() for f in polys):
        return GRADED
    return AT_ORIGIN


def _require_in_maximal(f, what='polynomial'):
    if not f:
        raise exceptions.DomainError('the %s is zero' % what)
    if f.constant_term():
        raise exceptions.DomainError(
            '%s %s is a unit at the origin' % (what, f))


class FpurityVerdict(object):
    """F-pure or not, with the data that decided it.

    ``polynomials`` is the defining data the verdict was computed from
    (the hypersurface, the factors, or the generators of I);
    ``certificate`` is plain data suitable for a report.
    """

    def __init__(self, outcome, method, ring, polynomials, certificate):
        self.outcome = outcome
        self.method = method
        self.ring = ring
        self.polynomials = list(polynomials)
        self.certificate = certificate
        self.locality = _locality(self.polynomials)

    @property
    def fpure(self):
        return self.outcome == FPURE

    def verify(self, limits=None):
        """Recompute the certificate from ``polynomials``."""
        p = self.ring.p
        if self.method == PIGEONHOLE:
            n, s = self.certificate['nvars'], self.certificate['order']
            return (self.polynomials[0].order_at_origin() == s and
                    s * (p - 1) >= n * (p - 1) + 1)
        if self.method in (FEDDER_HYPERSURFACE, FEDDER_PRODUCT):
            product = self.ring.one()
            for f in self.polynomials:
                product = product * f
            reduced = poly.power_mod_bracket(product, p - 1)
        else:
            if self.outcome == NOT_FPURE:
                again = fedder_general(
                    groebner.Ideal(self.ring, self.polynomials), limits)
                return again.outcome == NOT_FPURE
            generator = _truncate(self.certificate['generator_terms'],
                                  self.ring)
            reduced = generator
        if self.outcome == NOT_FPURE:
            return not reduced
        survivor = tuple(self.certificate['survivor'])
        return (max(survivor) < p and
                reduced.terms.get(survivor, 0) ==
                self.certificate['coefficient'])

    def to_dict(self):
        return {'outcome': self.outcome,
                'method': self.method,
                'locality': self.locality,
                'polynomials': [str(f) for f in self.polynomials],
                'certificate': self.certificate}

    def __repr__(self):
        return 'FpurityVerdict(%s, %s)' % (self.outcome, self.method)


def _truncate(terms, ring):
    bound = ring.p
    return poly.Polynomial(
        ring, dict((tuple(m), c) for m, c in terms if max(m) < bound))


def _bracket_text(ring):
    return ['%s^%d' % (name, ring.p) for name in ring.variables]


def _fedder_verdict(method, ring, polynomials, reduced, element):
    if not reduced:
        return FpurityVerdict(NOT_FPURE, method, ring, polynomials, {
            'element': element,
            'contained_in': _bracket_text(ring),
        })
    survivor, coefficient = reduced.sorted_terms()[0]
    return FpurityVerdict(FPURE, method, ring, polynomials, {
        'element': element,
        'survivor': list(survivor),
        'survivor_text': poly.format_monomial(ring, survivor),
        'coefficient': coefficient,
        'surviving_terms': len(reduced),
        'not_contained_in': _bracket_text(ring),
    })


def fedder_hypersurface(f, limits=None):
    """Fedder's criterion for S/(f): F-pure iff f^(p-1) is not in m^[p].

    :param f: Polynomial vanishing at the origin
    :return: FpurityVerdict; the certificate of an F-pure verdict names
        a term of f^(p-1) that survives modulo m^[p]
    """
    _require_in_maximal(f)
    limits = limits or groebner.DEFAULT_LIMITS
    p = f.ring.p
    reduced = poly.power_mod_bracket(f, p - 1, max_terms=limits.max_terms)
    log.debug("fedder: %s has %d terms outside m^[%d]", f, len(reduced), p)
    return _fedder_verdict(FEDDER_HYPERSURFACE, f.ring, [f], reduced,
                           '(%s)^%d' % (f, p - 1))


def fedder_product(factors, limits=None):
    """Fedder's criterion for a complete intersection (f_1..f_c).

    The factors must cut the dimension down by c; that is checked here.
    """
    factors = list(factors)
    if not factors:
        raise exceptions.DomainError('no factors given')
    ring = factors[0].ring
    for f in factors:
        if f.ring != ring:
            raise exceptions.DomainError(
                'ring mismatch: %r vs %r' % (ring, f.ring))
        _require_in_maximal(f, 'factor')
    limits = limits or groebner.DEFAULT_LIMITS
    dim = groebner.krull_dimension(groebner.Ideal(ring, factors), limits)
    if dim != ring.nvars - len(factors):
        raise exceptions.DomainError(
            'not a complete intersection at desk check: %d factors leave '
            'dimension %d in %d variables' % (len(factors), dim, ring.nvars))
    product = ring.one()
    for f in factors:
        product = product * f
    p = ring.p
    reduced = poly.power_mod_bracket(product, p - 1,
                                     max_terms=limits.max_terms)
    return _fedder_verdict(
        FEDDER_PRODUCT, ring, factors, reduced,
        '(%s)^%d' % (' * '.join('(%s)' % f for f in factors), p - 1))


def fedder_general(ideal, limits=None):
    """Fedder's criterion in colon form: F-pure iff (I^[p] : I) ⊄ m^[p]."""
    ring = ideal.ring
    p = ring.p
    for g in ideal.generators:
        _require_in_maximal(g, 'generator')
    if ideal.is_zero():
        return FpurityVerdict(FPURE, FEDDER_GENERAL, ring, [], {
            'element': '1', 'survivor': [0] * ring.nvars,
            'survivor_text': '1', 'coefficient': 1, 'surviving_terms': 1,
            'generator_terms': [[[0] * ring.nvars, 1]],
            'not_contained_in': _bracket_text(ring)})
    colon = groebner.colon(frobenius.frobenius_power(ideal, 1), ideal,
                           limits)
    for g in colon.generators:
        reduced = _truncate(g.terms.items(), ring)
        if reduced:
            verdict = _fedder_verdict(FEDDER_GENERAL, ring,
                                      ideal.generators, reduced, str(g))
            verdict.certificate['generator_terms'] = [
                [list(m), c] for m, c in g.sorted_terms()]
            return verdict
    return FpurityVerdict(NOT_FPURE, FEDDER_GENERAL, ring,
                          ideal.generators, {
                              'element': '(I^[%d] : I)' % p,
                              'colon_generators': [
                                  str(g) for g in colon.generators],
                              'contained_in': _bracket_text(ring)})


def pigeonhole_precheck(f):
    """NotFPure without expanding anything, when f is deep enough in m.

    Any monomial of degree n(p-1)+1 in n variables has an exponent of at
    least p, so m^(n(p-1)+1) ⊆ m^[p]; if ord(f)(p-1) reaches that degree
    then f^(p-1) is already in m^[p].

    :return: FpurityVerdict, or None when the bound says nothing
    """
    _require_in_maximal(f)
    p = f.ring.p
    n = f.ring.nvars
    s = f.order_at_origin()
    bound = n * (p - 1) + 1
    if s * (p - 1) < bound:
        return None
    return FpurityVerdict(NOT_FPURE, PIGEONHOLE, f.ring, [f], {
        'order': s, 'nvars': n, 'p': p,
        'degree': s * (p - 1), 'bound': bound,
        'contained_in': 'm^%d ⊆ m^[%d]' % (bound, p),
    })


def decide_fpurity(f, limits=None):
    """Pigeonhole bound first, Fedder's hypersurface test otherwise."""
    verdict = pigeonhole_precheck(f)
    if verdict is not None:
        return verdict
    return fedder_hypersurface(f, limits)


class FinjectivityVerdict(object):
    """F-injective or not, and on what grounds.

    ``flags`` records hypotheses that were asserted rather than checked.
    """

    def __init__(self, outcome, basis, detail, flags=()):
        self.outcome = outcome
        self.basis = basis
        self.detail = detail
        self.flags = list(flags)

    def to_dict(self):
        return {'outcome': self.outcome,
                'basis': self.basis,
                'flags': self.flags,
                'detail': self.detail}

    def __repr__(self):
        return 'FinjectivityVerdict(%s, %s)' % (self.outcome, self.basis)


def finjective_gorenstein(generators, limits=None):
    """F-injectivity of a hypersurface or complete intersection.

    Those rings are Gorenstein, where F-injective and F-pure agree, so
    the Fedder verdict decides both ways.
    """
    generators = list(generators)
    if len(generators) == 1:
        fpurity = fedder_hypersurface(generators[0], limits)
    else:
        fpurity = fedder_product(generators, limits)
    outcome = F_INJECTIVE if fpurity.fpure else NOT_F_INJECTIVE
    return FinjectivityVerdict(outcome, GORENSTEIN_FPURE,
                               {'fpurity': fpurity.to_dict()})


def _check_parameters(quotient, params, limits):
    ring = quotient.ring
    for f in params:
        if f.ring != ring:
            raise exceptions.DomainError(
                'parameter %s is not in %r' % (f, ring))
        if f.constant_term():
            raise exceptions.DomainError(
                'parameter %s is not in the maximal ideal' % f)
    dim = quotient.dimension(limits)
    if len(params) != dim:
        raise exceptions.DomainError(
            'a system of parameters for a ring of dimension %d has %d '
            'elements, got %d' % (dim, dim, len(params)))
    total = quotient.defining + groebner.Ideal(ring, params)
    if total.is_unit(limits):
        raise exceptions.DomainError(
            'the parameters generate the unit ideal modulo I')
    left = groebner.krull_dimension(total, limits)
    if left != 0:
        raise exceptions.DomainError(
            'the parameters cut the dimension from %d to %d, not to 0' % (
                dim, left))
    for x in ring.gens():
        if not groebner.radical_membership(x, total, limits):
            raise exceptions.DomainError(
                'the parameters are not primary to the maximal ideal: '
                '%s is not nilpotent modulo them' % x)
    return dim


def finjective_cm_quotient(quotient, params, e_max=frobenius.DEFAULT_MAX_E,
                           assume_cm=True, stop_on_stable=False,
                           limits=None):
    """F-injectivity of a Cohen-Macaulay S/I through a parameter ideal.

    For a Cohen-Macaulay local ring one Frobenius closed parameter ideal
    gives F-injectivity, and any parameter ideal that is not Frobenius
    closed rules it out.  Cohen-Macaulayness is automatic for complete
    intersections and asserted (``assume_cm``) otherwise.

    :param quotient: QuotientPresentation
    :param params: Polynomials forming a system of parameters at the
        origin; this is verified
    :return: FinjectivityVerdict
    """
    params = list(params)
    _check_parameters(quotient, params, limits)
    if quotient.is_complete_intersection(limits):
        flags = []
        cm = True
    elif assume_cm:
        flags = [ASSUMING_CM]
        cm = True
        log.warning("verdict for %r assumes it is Cohen-Macaulay", quotient)
    else:
        flags = [CM_NOT_ASSERTED]
        cm = False
    report = frobenius.is_frobenius_closed(
        groebner.Ideal(quotient.ring, params), quotient, e_max,
        stop_on_stable, limits)
    detail = {'closure': report.to_dict(),
              'params': [str(f) for f in params],
              'locality': (GRADED if quotient.is_graded() else AT_ORIGIN)}
    if not report.closed:
        outcome = NOT_F_INJECTIVE if cm else INCONCLUSIVE
    else:
        outcome = F_INJECTIVE if cm else INCONCLUSIVE
    return FinjectivityVerdict(outcome, CMFI_PARAMETER_IDEAL, detail, flags)


def union_decomposition_check(g, h, limits=None):
    """F-injectivity of the union (gh) from its pieces.

    If (g), (h) and (g, h) all define F-injective Cohen-Macaulay rings of
    the right dimensions, so does (gh).  The pieces are hypersurfaces and
    a complete intersection, where Fedder decides F-injectivity.  The
    implication only runs one way: failing pieces give Inconclusive.
    """
    if g.ring != h.ring:
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (g.ring, h.ring))
    _require_in_maximal(g, 'first piece')
    _require_in_maximal(h, 'second piece')
    if poly.divides(g, h) or poly.divides(h, g):
        raise exceptions.DomainError(
            'one piece divides the other: %s, %s' % (g, h))
    first = finjective_gorenstein([g], limits)
    second = finjective_gorenstein([h], limits)
    try:
        meet = finjective_gorenstein([g, h], limits)
    except exceptions.DomainError as e:
        meet = FinjectivityVerdict(INCONCLUSIVE, GORENSTEIN_FPURE,
                                   {'error': str(e)})
    detail = {'first': first.to_dict(), 'second': second.to_dict(),
              'intersection': meet.to_dict()}
    if all(v.outcome == F_INJECTIVE for v in (first, second, meet)):
        return FinjectivityVerdict(F_INJECTIVE, UNION_DECOMPOSITION, detail)
    return FinjectivityVerdict(INCONCLUSIVE, UNION_DECOMPOSITION, detail)


def _variable_blocks(generators):
    """Group generators whose variable supports are linked."""
    blocks = []
    for g in generators:
        support = g.support()
        merged = [g], set(support)
        rest = []
        for members, used in blocks:
            if used & merged[1]:
                merged = members + merged[0], used | merged[1]
            else:
                rest.append((members, used))
        blocks = rest + [merged]
    return blocks


def tensor_factor_check(generators, limits=None):
    """F-injectivity of a complete intersection split over disjoint
    variables.

    When the generators fall into blocks with disjoint supports the ring
    is a tensor product over k of the block rings, and a tensor product
    of Cohen-Macaulay F-injective factors is again one.

    :return: FinjectivityVerdict, or None when there is only one block
    """
    generators = list(generators)
    blocks = _variable_blocks(generators)
    if len(blocks) < 2:
        return None
    factors = [finjective_gorenstein(members, limits)
               for members, _ in blocks]
    detail = {'blocks': [[str(g) for g in members] for members, _ in blocks],
              'factors': [v.to_dict() for v in factors]}
    if all(v.outcome == F_INJECTIVE for v in factors):
        return FinjectivityVerdict(F_INJECTIVE, TENSOR_FACTORS, detail)
    return FinjectivityVerdict(INCONCLUSIVE, TENSOR_FACTORS, detail)
