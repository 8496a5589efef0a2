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

"""Buchberger's algorithm and the ideal operations built on it."""

import heapq
import itertools
import logging

from fedder import arith
from fedder import exceptions
from fedder import poly

log = logging.getLogger("fedder.groebner")

DEFAULT_MAX_PAIRS = 10 ** 6
DEFAULT_MAX_DEGREE = 512
DEFAULT_MAX_TERMS = 2 * 10 ** 6


class Limits(object):
    """Safety caps for Gröbner and expansion work.

    :param max_pairs: critical pairs created before giving up
    :param max_degree: largest total degree allowed for a basis element
    :param max_terms: largest number of terms in an intermediate result
    """

    def __init__(self, max_pairs=DEFAULT_MAX_PAIRS,
                 max_degree=DEFAULT_MAX_DEGREE,
                 max_terms=DEFAULT_MAX_TERMS):
        self.max_pairs = max_pairs
        self.max_degree = max_degree
        self.max_terms = max_terms

    def __repr__(self):
        return 'Limits(max_pairs=%d, max_degree=%d, max_terms=%d)' % (
            self.max_pairs, self.max_degree, self.max_terms)


DEFAULT_LIMITS = Limits()


def _negated(key):
    return tuple(-k for k in key)


def _full_reduce(terms, reducers, key, p, max_terms=None):
    """Reduce every term of ``terms`` by monic ``reducers``.

    ``reducers`` is a list of (leading monomial, tail terms) pairs and is
    scanned in order, so the first reducer whose leading monomial divides
    the current term wins.  Terms are visited largest first through a
    heap; stale heap entries are skipped when their monomial has already
    cancelled.
    """
    terms = dict(terms)
    if max_terms is not None and len(terms) > max_terms:
        raise exceptions.ResourceError(
            'reduction input has more than %d terms' % max_terms,
            {'terms': len(terms)})
    heap = [(_negated(key(m)), m) for m in terms]
    heapq.heapify(heap)
    remainder = {}
    while heap:
        _, mono = heapq.heappop(heap)
        c = terms.pop(mono, None)
        if c is None:
            continue
        for lead, tail in reducers:
            if poly.mono_divides(lead, mono):
                q = poly.mono_div(mono, lead)
                for tm, tc in tail.items():
                    nm = poly.mono_mul(tm, q)
                    old = terms.get(nm)
                    if old is None:
                        value = (-c * tc) % p
                        if value:
                            terms[nm] = value
                            heapq.heappush(heap, (_negated(key(nm)), nm))
                    else:
                        value = (old - c * tc) % p
                        if value:
                            terms[nm] = value
                        else:
                            del terms[nm]
                if max_terms is not None and len(terms) > max_terms:
                    raise exceptions.ResourceError(
                        'reduction exceeded %d terms' % max_terms,
                        {'terms': len(terms)})
                break
        else:
            remainder[mono] = c
    return remainder


def _monic_terms(terms, key, p):
    lead = max(terms, key=key)
    inv = arith.inverse_mod(terms[lead], p)
    return lead, dict((m, c * inv % p) for m, c in terms.items())


def _tail(lead, terms):
    return dict((m, c) for m, c in terms.items() if m != lead)


class GroebnerBasis(object):
    """A reduced Gröbner basis: monic, tails fully reduced, sorted by
    leading monomial, largest first."""

    def __init__(self, ring, elements, order):
        self.ring = ring
        self.order = order
        self.elements = tuple(elements)
        self.leading_monomials = tuple(
            g.leading_monomial(order) for g in self.elements)
        self._reducers = [(lead, _tail(lead, g.terms))
                          for lead, g in zip(self.leading_monomials,
                                             self.elements)]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def is_unit(self):
        return any(not any(lead) for lead in self.leading_monomials)

    def reduce(self, f, limits=None):
        return normal_form(f, self, limits)

    def contains(self, f, limits=None):
        return not normal_form(f, self, limits)

    def __repr__(self):
        return 'GroebnerBasis(%s, [%s])' % (
            self.order.name, ', '.join(str(g) for g in self.elements))


def normal_form(f, basis, limits=None):
    """Remainder of f on full division by ``basis``.

    No term of the result is divisible by a leading monomial of the
    basis, and f minus the result lies in the ideal.

    :raises ResourceError: when the polynomial being reduced grows past
        ``limits.max_terms``
    """
    if f.ring.variables != basis.ring.variables or \
            f.ring.char != basis.ring.char:
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (f.ring, basis.ring))
    if not f:
        return f
    limits = limits or DEFAULT_LIMITS
    remainder = _full_reduce(f.terms, basis._reducers, basis.order.key,
                             f.ring.p, limits.max_terms)
    return poly.Polynomial.from_trusted(f.ring, remainder)


def s_polynomial(f, g, order):
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    lcm = poly.mono_lcm(lf, lg)
    p = f.ring.p
    cf = arith.inverse_mod(f.terms[lf], p)
    cg = arith.inverse_mod(g.terms[lg], p)
    return (f.mul_term(poly.mono_div(lcm, lf), cf) -
            g.mul_term(poly.mono_div(lcm, lg), cg))


class _PairQueue(object):
    """Critical pairs under the Gebauer-Möller criteria.

    Pairs are selected by the normal strategy: smallest lcm degree first,
    then smallest lcm under the order, then the lower generator indices.
    """

    def __init__(self, key, limits):
        self.key = key
        self.limits = limits
        self.pairs = []
        self.created = 0

    def _entry(self, i, j, lcm):
        return (sum(lcm), self.key(lcm), min(i, j), max(i, j), lcm)

    def update(self, leads, active, h):
        """Gebauer-Möller update for the new element with index h.

        Returns the new active set.
        """
        lh = leads[h]
        pending = [(g, poly.mono_lcm(lh, leads[g])) for g in active]
        kept = []
        while pending:
            g, lcm = pending.pop(0)
            if (poly.mono_coprime(lh, leads[g]) or
                    not any(poly.mono_divides(other, lcm)
                            for _, other in pending + kept)):
                kept.append((g, lcm))
        # product criterion: coprime pairs only served to prune others
        new_pairs = [(g, lcm) for g, lcm in kept
                     if not poly.mono_coprime(lh, leads[g])]
        survivors = []
        for entry in self.pairs:
            i, j, lcm = entry[2], entry[3], entry[4]
            if (poly.mono_divides(lh, lcm) and
                    poly.mono_lcm(leads[i], lh) != lcm and
                    poly.mono_lcm(leads[j], lh) != lcm):
                continue
            survivors.append(entry)
        for g, lcm in new_pairs:
            survivors.append(self._entry(g, h, lcm))
            self.created += 1
        if self.created > self.limits.max_pairs:
            raise exceptions.ResourceError(
                'critical pair cap of %d exceeded' % self.limits.max_pairs,
                {'pairs_created': self.created,
                 'pairs_pending': len(survivors),
                 'basis_size': len(active) + 1,
                 'cap': 'max_pairs'})
        self.pairs = survivors
        return [g for g in active
                if not poly.mono_divides(lh, leads[g])] + [h]

    def pop(self):
        best = min(self.pairs)
        self.pairs.remove(best)
        return best[2], best[3]

    def __len__(self):
        return len(self.pairs)


def buchberger(ideal, order=None, limits=None):
    """Reduced Gröbner basis of ``ideal`` under ``order``.

    :param ideal: Ideal
    :param order: MonomialOrder, the ring order by default
    :param limits: Limits; ResourceError carries the state reached
    :return: GroebnerBasis
    """
    ring = ideal.ring
    order = order or ring.order
    limits = limits or DEFAULT_LIMITS
    key = order.key
    p = ring.p

    polys = []
    leads = []
    active = []
    queue = _PairQueue(key, limits)

    def reducers():
        return [(leads[i], _tail(leads[i], polys[i])) for i in active]

    def unit_basis():
        return GroebnerBasis(ring, [ring.one()], order)

    for g in ideal.generators:
        terms = _full_reduce(g.terms, reducers(), key, p, limits.max_terms)
        if not terms:
            continue
        lead, terms = _monic_terms(terms, key, p)
        if not any(lead):
            return unit_basis()
        polys.append(terms)
        leads.append(lead)
        active = queue.update(leads, active, len(polys) - 1)

    processed = 0
    top_degree = max([sum(lead) for lead in leads] or [0])
    while len(queue):
        i, j = queue.pop()
        processed += 1
        lcm = poly.mono_lcm(leads[i], leads[j])
        s_terms = dict()
        for src, lead, sign in ((polys[i], leads[i], 1),
                                (polys[j], leads[j], -1)):
            q = poly.mono_div(lcm, lead)
            for m, c in src.items():
                nm = poly.mono_mul(m, q)
                value = (s_terms.get(nm, 0) + sign * c) % p
                if value:
                    s_terms[nm] = value
                else:
                    s_terms.pop(nm, None)
        terms = _full_reduce(s_terms, reducers(), key, p, limits.max_terms)
        if processed % 100 == 0:
            log.debug("buchberger: %d pairs processed, %d pending, "
                      "basis %d, degree %d", processed, len(queue),
                      len(active), top_degree)
        if not terms:
            continue
        lead, terms = _monic_terms(terms, key, p)
        if not any(lead):
            return unit_basis()
        degree = max(sum(m) for m in terms)
        top_degree = max(top_degree, degree)
        if degree > limits.max_degree:
            raise exceptions.ResourceError(
                'degree cap of %d exceeded' % limits.max_degree,
                {'pairs_processed': processed,
                 'pairs_pending': len(queue),
                 'basis_size': len(active),
                 'degree_reached': degree,
                 'cap': 'max_degree'})
        polys.append(terms)
        leads.append(lead)
        active = queue.update(leads, active, len(polys) - 1)

    # interreduce the minimal basis left in ``active``
    reduced = []
    for i in active:
        others = [(leads[j], _tail(leads[j], polys[j]))
                  for j in active if j != i]
        tail = _full_reduce(_tail(leads[i], polys[i]), others, key, p)
        tail[leads[i]] = 1
        reduced.append(poly.Polynomial.from_trusted(ring, tail))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)), reverse=True)
    log.debug("buchberger: done after %d pairs, %d elements under %s",
              processed, len(reduced), order.name)
    return GroebnerBasis(ring, reduced, order)


def satisfies_buchberger_criterion(basis):
    """Every S-polynomial of the basis reduces to zero."""
    for f, g in itertools.combinations(basis.elements, 2):
        if normal_form(s_polynomial(f, g, basis.order), basis):
            return False
    return True


class Ideal(object):
    """An ideal of a PolyRing given by generators.

    Zero and repeated generators are dropped, so the zero ideal has an
    empty generator list.  Reduced Gröbner bases are cached per order.
    """

    def __init__(self, ring, generators=()):
        gens = []
        seen = set()
        for g in generators:
            if g.ring != ring:
                if g.ring.char != ring.char:
                    raise exceptions.CharacteristicMismatch(
                        'generator %s is not in %r' % (g, ring))
                raise exceptions.DomainError(
                    'generator %s is not in %r' % (g, ring))
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self._bases = {}

    @classmethod
    def from_monomials(cls, ring, monomials):
        return cls(ring, [ring.monomial(m) for m in monomials])

    def basis(self, order=None, limits=None):
        order = order or self.ring.order
        if order not in self._bases:
            self._bases[order] = buchberger(self, order, limits)
        return self._bases[order]

    def is_zero(self):
        return not self.generators

    def is_unit(self, limits=None):
        if self.is_zero():
            return False
        return self.basis(limits=limits).is_unit()

    def is_proper(self, limits=None):
        return not self.is_unit(limits)

    def contains(self, f, limits=None):
        return ideal_membership(f, self, limits)

    def contains_ideal(self, other, limits=None):
        return all(self.contains(g, limits) for g in other.generators)

    def same_ideal(self, other, limits=None):
        return (self.contains_ideal(other, limits) and
                other.contains_ideal(self, limits))

    def is_monomial(self):
        return all(g.is_monomial() for g in self.generators)

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.generators)

    def __add__(self, other):
        if isinstance(other, poly.Polynomial):
            other = Ideal(self.ring, [other])
        if other.ring != self.ring:
            raise exceptions.DomainError(
                'ring mismatch: %r vs %r' % (self.ring, other.ring))
        return Ideal(self.ring, self.generators + other.generators)

    def map_to(self, ring, index_map):
        return Ideal(ring, [g.map_to(ring, index_map)
                            for g in self.generators])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self):
        return 'Ideal(%r, %s)' % (self.ring, self)

    def __str__(self):
        return '(%s)' % ', '.join(str(g) for g in self.generators)


def ideal_membership(f, ideal, limits=None):
    if f.ring != ideal.ring:
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (f.ring, ideal.ring))
    if not f:
        return True
    if ideal.is_zero():
        return False
    return not normal_form(f, ideal.basis(limits=limits), limits)


def monomial_ideal_membership(f, generators):
    """f lies in the monomial ideal when each of its terms does.

    :param generators: exponent tuples, or single-term Polynomials
    """
    monos = []
    for g in generators:
        if isinstance(g, poly.Polynomial):
            if not g.is_monomial():
                raise exceptions.DomainError(
                    '%s is not a monomial generator' % g)
            g = next(iter(g.terms))
        monos.append(tuple(g))
    for mono in f.terms:
        if not any(poly.mono_divides(g, mono) for g in monos):
            return False
    return True


def fresh_names(ring, count, stem='_t'):
    names = []
    i = 0
    while len(names) < count:
        candidate = '%s%d' % (stem, i)
        if candidate not in ring.variables:
            names.append(candidate)
        i += 1
    return names


def _prepend_variables(ring, count, order):
    """Ring with ``count`` fresh variables in front of the old ones."""
    names = fresh_names(ring, count)
    big = poly.PolyRing(ring.char, names + list(ring.variables), order)
    into = [count + i for i in range(ring.nvars)]
    back = [None] * count + list(range(ring.nvars))
    return big, into, back


def intersect(left, right, limits=None):
    """left ∩ right, by eliminating t from t*left + (1-t)*right."""
    ring = left.ring
    if right.ring != ring:
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (ring, right.ring))
    if left.is_zero() or right.is_zero():
        return Ideal(ring)
    order = poly.MonomialOrder.elimination(1)
    big, into, back = _prepend_variables(ring, 1, order)
    t = big.gen(0)
    gens = [t * g.map_to(big, into) for g in left.generators]
    gens += [(1 - t) * g.map_to(big, into) for g in right.generators]
    basis = Ideal(big, gens).basis(order, limits)
    kept = [g.map_to(ring, back) for g in basis
            if 0 not in g.support()]
    return Ideal(ring, kept)


def eliminate(ideal, drop, limits=None):
    """Generators of ideal ∩ k[variables not in ``drop``].

    :param drop: iterable of variable indices (or names) to eliminate
    """
    ring = ideal.ring
    drop = sorted(set(ring.index(v) if isinstance(v, str) else v
                      for v in drop))
    if not drop:
        return Ideal(ring, ideal.generators)
    keep = [i for i in range(ring.nvars) if i not in drop]
    permutation = drop + keep
    order = poly.MonomialOrder.elimination(len(drop))
    big = poly.PolyRing(ring.char,
                        [ring.variables[i] for i in permutation], order)
    into = [permutation.index(i) for i in range(ring.nvars)]
    basis = ideal.map_to(big, into).basis(order, limits)
    block = set(range(len(drop)))
    kept = [g.map_to(ring, permutation) for g in basis
            if not (g.support() & block)]
    return Ideal(ring, kept)


def radical_membership(f, ideal, limits=None):
    """f in the radical of ideal, by Rabinowitsch's trick."""
    if not f:
        return True
    ring = ideal.ring
    big, into, _ = _prepend_variables(ring, 1, poly.DEFAULT_ORDER)
    t = big.gen(0)
    extended = ideal.map_to(big, into) + (1 - t * f.map_to(big, into))
    return extended.is_unit(limits)


def krull_dimension(ideal, limits=None):
    """Dimension of the affine scheme cut out by ``ideal``.

    The largest set of variables that no leading monomial of a Gröbner
    basis lives in; equivalently n minus the smallest set of variables
    meeting the support of every leading monomial.
    """
    ring = ideal.ring
    if ideal.is_zero():
        return ring.nvars
    basis = ideal.basis(poly.DEFAULT_ORDER, limits)
    if basis.is_unit():
        raise exceptions.DomainError(
            'the unit ideal defines the empty scheme')
    supports = [frozenset(i for i, e in enumerate(lead) if e)
                for lead in basis.leading_monomials]
    variables = sorted(set().union(*supports))
    for size in range(1, len(variables) + 1):
        for cover in itertools.combinations(variables, size):
            cover = set(cover)
            if all(support & cover for support in supports):
                return ring.nvars - size
    return ring.nvars - len(variables)


def colon(left, right, limits=None):
    """(left : right) = {g : g*right ⊆ left}.

    Intersects (left : f) over the generators f of ``right``; each of
    those is left ∩ (f) divided through by f.
    """
    ring = left.ring
    if right.ring != ring:
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (ring, right.ring))
    if right.is_zero():
        raise exceptions.DomainError('colon by the zero ideal')
    result = None
    for f in right.generators:
        meet = intersect(left, Ideal(ring, [f]), limits)
        part = Ideal(ring, [poly.exact_divide(g, f)
                            for g in meet.generators])
        result = part if result is None else intersect(result, part, limits)
    return result
