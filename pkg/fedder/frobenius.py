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

"""Frobenius powers, p^e-th roots and Frobenius closure of ideals.

Everything here lives in S = F_p[x_1..x_n]; a quotient R = S/I is handled
through its defining ideal, and every question is asked of R localized
at the origin.
"""

import logging

from fedder import exceptions
from fedder import groebner
from fedder import poly

log = logging.getLogger("fedder.frobenius")

DEFAULT_MAX_E = 3

AT_ORIGIN = 'at-origin'

CLOSED_UP_TO = 'ClosedUpTo'
NOT_CLOSED = 'NotClosed'
STABILIZED = 'StabilizedHeuristic'


class QuotientPresentation(object):
    """R = S/I, read at the origin.

    :param ring: the ambient PolyRing S
    :param defining: Ideal or list of Polynomials generating I
    """

    def __init__(self, ring, defining=None, limits=None):
        if defining is None:
            defining = groebner.Ideal(ring)
        elif not isinstance(defining, groebner.Ideal):
            defining = groebner.Ideal(ring, defining)
        if defining.ring != ring:
            raise exceptions.DomainError(
                'defining ideal lives in %r, not %r' % (defining.ring, ring))
        if defining.is_unit(limits):
            raise exceptions.DomainError(
                'the defining ideal %s is the unit ideal' % defining)
        self.ring = ring
        self.defining = defining
        self.locality = AT_ORIGIN

    @classmethod
    def from_subring(cls, ring, images, names, limits=None):
        """Present the subring k[images] of ``ring``.

        New variables ``names`` map to ``images``; the kernel of that map
        is found by eliminating the old variables from (y_i - g_i).
        """
        names = list(names)
        if len(names) != len(images):
            raise exceptions.DomainError(
                '%d names given for %d generators' % (
                    len(names), len(images)))
        clash = set(names) & set(ring.variables)
        if clash:
            raise exceptions.DomainError(
                'subring variable names clash with %s' % ','.join(
                    sorted(clash)))
        big = poly.PolyRing(ring.char, list(ring.variables) + names)
        n = ring.nvars
        into = list(range(n))
        relations = [big.gen(n + i) - g.map_to(big, into)
                     for i, g in enumerate(images)]
        kernel = groebner.eliminate(groebner.Ideal(big, relations),
                                    range(n), limits)
        target = poly.PolyRing(ring.char, names, ring.order)
        back = [None] * n + list(range(len(names)))
        log.debug("subring presentation: %d relations", len(kernel))
        return cls(target, kernel.map_to(target, back), limits)

    def is_graded(self):
        return self.defining.is_homogeneous()

    def dimension(self, limits=None):
        return groebner.krull_dimension(self.defining, limits)

    def is_complete_intersection(self, limits=None):
        """I is zero or generated by codim(I) elements.

        Those shapes are Gorenstein, so Cohen-Macaulay for free.
        """
        codim = self.ring.nvars - self.dimension(limits)
        return len(self.defining.generators) == codim

    def describe(self):
        return {'ring': self.ring.describe(),
                'defining': [str(g) for g in self.defining.generators],
                'locality': self.locality}

    def __repr__(self):
        return 'QuotientPresentation(%r / %s)' % (self.ring, self.defining)


def bracket_of_maximal(ring, e=1):
    """Exponent tuples of x_1^q, .., x_n^q with q = p^e."""
    q = poly.frobenius_exponent(ring.p, e)
    return [tuple(q if j == i else 0 for j in range(ring.nvars))
            for i in range(ring.nvars)]


def frobenius_power(ideal, e=1):
    """I^[p^e]: generated by the p^e-th powers of any generating set."""
    if e < 1:
        raise exceptions.DomainError('Frobenius power needs e >= 1')
    return groebner.Ideal(ideal.ring, [poly.frobenius_endo(g, e)
                                       for g in ideal.generators])


def pe_th_root(ideal, e=1):
    """The smallest ideal J with ideal ⊆ J^[p^e].

    Each generator is split along the basis {x^a : 0 <= a_i < p^e} of S
    over S^(p^e), g = sum_a g_a^(p^e) x^a, and every g_a is collected.
    Coefficients in F_p are their own p-th roots.
    """
    if e < 1:
        raise exceptions.DomainError('root needs e >= 1')
    ring = ideal.ring
    q = poly.frobenius_exponent(ring.p, e)
    roots = []
    for g in ideal.generators:
        pieces = {}
        for mono, coeff in g.terms.items():
            slot = tuple(x % q for x in mono)
            pieces.setdefault(slot, {})[tuple(x // q for x in mono)] = coeff
        for slot in sorted(pieces, key=ring.order.key, reverse=True):
            roots.append(poly.Polynomial.from_trusted(ring, pieces[slot]))
    return groebner.Ideal(ring, roots)


def frobenius_pullback(ideal, e=1, limits=None):
    """{u : u^(p^e) in ideal}, exactly.

    The image of Frobenius is k[x_1^q..x_n^q], so the pullback is the
    intersection of ``ideal`` with that subring with each x_i^q renamed
    back to x_i.  The intersection comes from eliminating x from
    ideal + (y_i - x_i^q).
    """
    ring = ideal.ring
    if ideal.is_zero():
        return groebner.Ideal(ring)
    q = poly.frobenius_exponent(ring.p, e)
    n = ring.nvars
    names = groebner.fresh_names(ring, n, stem='_y')
    order = poly.MonomialOrder.elimination(n)
    big = poly.PolyRing(ring.char, list(ring.variables) + names, order)
    into = list(range(n))
    gens = [g.map_to(big, into) for g in ideal.generators]
    gens += [big.gen(n + i) - big.gen(i) ** q for i in range(n)]
    basis = groebner.Ideal(big, gens).basis(order, limits)
    block = set(range(n))
    back = [None] * n + list(range(n))
    kept = [g.map_to(ring, back) for g in basis
            if not (g.support() & block)]
    return groebner.Ideal(ring, kept)


def _check_quotient(ideal, quotient):
    if ideal.ring != quotient.ring:
        raise exceptions.DomainError(
            'ideal lives in %r, quotient in %r' % (ideal.ring, quotient.ring))


def frobenius_closure_level(ideal, quotient, e, limits=None):
    """Ambient ideal K of u with u^(p^e) in J^[p^e] + I, plus I.

    The p^e-th root of J^[p^e] + I bounds K from above.  When the root
    adds nothing to J + I, or every generator it adds really has its
    p^e-th power in J^[p^e] + I, the root is K.  Otherwise K is computed
    as a Frobenius pullback.
    """
    _check_quotient(ideal, quotient)
    defining = quotient.defining
    base = ideal + defining
    lifted = frobenius_power(ideal, e) + defining
    upper = pe_th_root(lifted, e) + defining
    extra = [g for g in upper.generators if not base.contains(g, limits)]
    if not extra:
        log.debug("level %d: root adds nothing to %s", e, base)
        return base
    if all(lifted.contains(poly.frobenius_endo(g, e), limits)
           for g in extra):
        log.debug("level %d: root generators all verified", e)
        return base + upper
    log.debug("level %d: falling back to the Frobenius pullback", e)
    return base + frobenius_pullback(lifted, e, limits)


class FrobeniusClosureReport(object):
    """Outcome of a bounded Frobenius closure test.

    ``chain`` holds the level ideals computed, level 1 first.
    ``level`` is e_max for ClosedUpTo, the level where two consecutive
    ideals agreed for StabilizedHeuristic, and the level of the witness
    for NotClosed.
    """

    def __init__(self, ideal, quotient, status, level, chain,
                 witness=None):
        self.ideal = ideal
        self.quotient = quotient
        self.status = status
        self.level = level
        self.chain = list(chain)
        self.witness = witness

    @property
    def closed(self):
        return self.status != NOT_CLOSED

    def verify(self, limits=None):
        """Re-check the witness: u is not in J + I but u^q is in
        J^[q] + I."""
        if self.status != NOT_CLOSED:
            return self.witness is None
        base = self.ideal + self.quotient.defining
        lifted = frobenius_power(self.ideal, self.level) + \
            self.quotient.defining
        return (not base.contains(self.witness, limits) and
                lifted.contains(poly.frobenius_endo(self.witness,
                                                    self.level), limits))

    def to_dict(self):
        return {
            'status': self.status,
            'level': self.level,
            'witness': None if self.witness is None else str(self.witness),
            'ideal': [str(g) for g in self.ideal.generators],
            'quotient': [str(g) for g in self.quotient.defining.generators],
            'chain': [[str(g) for g in level.generators]
                      for level in self.chain],
        }

    def __repr__(self):
        return 'FrobeniusClosureReport(%s, level=%d, witness=%s)' % (
            self.status, self.level, self.witness)


def is_frobenius_closed(ideal, quotient, e_max=DEFAULT_MAX_E,
                        stop_on_stable=False, limits=None):
    """Test J against its Frobenius closure in S/I, level by level.

    :param ideal: Ideal J of the ambient ring
    :param quotient: QuotientPresentation
    :param e_max: highest level examined
    :param stop_on_stable: stop once two consecutive levels agree and
        report StabilizedHeuristic; otherwise run to e_max
    :return: FrobeniusClosureReport
    """
    if e_max < 1:
        raise exceptions.DomainError('e_max must be at least 1')
    _check_quotient(ideal, quotient)
    poly.frobenius_exponent(ideal.ring.p, e_max)
    base = ideal + quotient.defining
    chain = []
    previous = None
    for e in range(1, e_max + 1):
        level = frobenius_closure_level(ideal, quotient, e, limits)
        chain.append(level)
        for g in level.generators:
            if not base.contains(g, limits):
                log.debug("%s not Frobenius closed: witness %s at level %d",
                          ideal, g, e)
                return FrobeniusClosureReport(ideal, quotient, NOT_CLOSED,
                                              e, chain, witness=g)
        if (stop_on_stable and previous is not None and
                previous.same_ideal(level, limits)):
            return FrobeniusClosureReport(ideal, quotient, STABILIZED, e,
                                          chain)
        previous = level
    return FrobeniusClosureReport(ideal, quotient, CLOSED_UP_TO, e_max, chain)
