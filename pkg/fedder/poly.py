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

"""Sparse multivariate polynomials over F_p.

A monomial is a plain tuple of exponents whose length is the arity of
its ring.  A polynomial maps monomials to least-residue coefficients
and never stores a zero coefficient, so the zero polynomial is the
empty map and equality is structural.
"""

import logging
import re
import types

from fedder import arith
from fedder import exceptions

log = logging.getLogger("fedder.poly")

LEX = 'lex'
GREVLEX = 'grevlex'
ELIMINATION = 'elim'

# Exponents beyond this are treated as runaway computations.
MAX_EXPONENT = 2 ** 31 - 1

_IDENTIFIER = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


def _grevlex_key(mono):
    return (sum(mono),) + tuple(-e for e in reversed(mono))


class MonomialOrder(object):
    """A term order, exposed as a sort key.

    ``key(m)`` returns a flat tuple of integers; a larger key means a
    larger monomial.  Elimination orders compare the first ``split``
    variables by graded reverse lexicographic order and break ties with
    the same order on the remaining variables, so any monomial involving
    the first block beats every monomial free of it.
    """

    __slots__ = ('kind', 'split', 'key')

    def __init__(self, kind=GREVLEX, split=None):
        if kind == LEX:
            self.key = tuple
        elif kind == GREVLEX:
            self.key = _grevlex_key
        elif kind == ELIMINATION:
            if split is None or split < 1:
                raise exceptions.DomainError(
                    'elimination order needs a positive split index')

            def key(mono, split=split):
                return _grevlex_key(mono[:split]) + _grevlex_key(mono[split:])
            self.key = key
        else:
            raise exceptions.DomainError('unknown monomial order %r' % kind)
        self.kind = kind
        self.split = split if kind == ELIMINATION else None

    @classmethod
    def from_name(cls, name):
        if name in (LEX, GREVLEX):
            return cls(name)
        match = re.match(r'^elim\((\d+)\)$', name or '')
        if match:
            return cls(ELIMINATION, int(match.group(1)))
        raise exceptions.DomainError('unknown monomial order %r' % name)

    @classmethod
    def elimination(cls, split):
        return cls(ELIMINATION, split)

    @property
    def name(self):
        if self.kind == ELIMINATION:
            return 'elim(%d)' % self.split
        return self.kind

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and
                self.kind == other.kind and self.split == other.split)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        return 'MonomialOrder(%s)' % self.name


DEFAULT_ORDER = MonomialOrder(GREVLEX)


# Monomial helpers.  Monomials are exponent tuples.

def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when the monomial a divides b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def mono_degree(a):
    return sum(a)


class PolyRing(object):
    """k[x_1..x_n] over a prime field, with a monomial order.

    Rings compare by content: same characteristic, same variable names in
    the same positions, same order.
    """

    def __init__(self, char, variables, order=None):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(',')]
        variables = tuple(variables)
        if not variables:
            raise exceptions.DomainError('a ring needs at least one variable')
        for name in variables:
            if not name or not _IDENTIFIER.match(name):
                raise exceptions.DomainError(
                    'bad variable name %r' % (name,))
        if len(set(variables)) != len(variables):
            raise exceptions.DomainError(
                'duplicate variable names in %s' % ','.join(variables))
        self.char = arith.as_char(char)
        self.variables = variables
        self.order = order or DEFAULT_ORDER
        self._index = dict((name, i) for i, name in enumerate(variables))

    @property
    def p(self):
        return self.char.p

    @property
    def nvars(self):
        return len(self.variables)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise exceptions.DomainError('unknown variable %r' % name)

    def with_order(self, order):
        return PolyRing(self.char, self.variables, order)

    def unit_exponent(self, i):
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    def one_monomial(self):
        return (0,) * self.nvars

    def gen(self, which):
        if isinstance(which, str):
            which = self.index(which)
        return Polynomial.from_trusted(self, {self.unit_exponent(which): 1})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def zero(self):
        return Polynomial.from_trusted(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, value):
        value = int(value) % self.p
        if not value:
            return self.zero()
        return Polynomial.from_trusted(self, {self.one_monomial(): value})

    def monomial(self, exponents, coefficient=1):
        return Polynomial(self, {tuple(exponents): int(coefficient)})

    def describe(self):
        return {'char': self.p,
                'vars': list(self.variables),
                'order': self.order.name}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.char == other.char and
                self.variables == other.variables and
                self.order == other.order)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.char, self.variables, self.order))

    def __repr__(self):
        return 'PolyRing(F_%d[%s], %s)' % (
            self.p, ','.join(self.variables), self.order.name)


def _check_same_ring(f, g):
    if f.ring != g.ring:
        if f.ring.char != g.ring.char:
            raise exceptions.CharacteristicMismatch(
                'characteristic mismatch: %r vs %r' % (f.ring, g.ring))
        raise exceptions.DomainError(
            'ring mismatch: %r vs %r' % (f.ring, g.ring))


def _mul_terms(a, b, p):
    out = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = get(m, 0) + ca * cb
    return dict((m, c % p) for m, c in out.items() if c % p)


def _mul_terms_below(a, b, p, bound):
    # drops every product with an exponent >= bound: those lie in the
    # monomial ideal generated by the bound-th powers of the variables
    out = {}
    get = out.get
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            if max(m) >= bound:
                continue
            out[m] = get(m, 0) + ca * cb
    return dict((m, c % p) for m, c in out.items() if c % p)


class Polynomial(object):
    """An immutable polynomial in a PolyRing.

    ``terms`` is a read-only mapping from exponent tuples to least
    residue integer coefficients; ``coefficient_of`` returns them as
    FieldElements.
    """

    __slots__ = ('ring', '_terms', '_sorted', '_hash')

    def __init__(self, ring, terms=None):
        p = ring.p
        n = ring.nvars
        clean = {}
        for mono, coeff in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != n:
                raise exceptions.DomainError(
                    'monomial %r does not match arity %d' % (mono, n))
            if any(e < 0 for e in mono):
                raise exceptions.DomainError(
                    'negative exponent in %r' % (mono,))
            value = (clean.get(mono, 0) + int(coeff)) % p
            if value:
                clean[mono] = value
            else:
                clean.pop(mono, None)
        self.ring = ring
        self._terms = clean
        self._sorted = None
        self._hash = None

    @classmethod
    def from_trusted(cls, ring, terms):
        """Wrap an already canonical term dict without re-checking it."""
        self = cls.__new__(cls)
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None
        return self

    @property
    def terms(self):
        return types.MappingProxyType(self._terms)

    def sorted_monomials(self, order=None):
        """Monomials in descending order (the ring order by default)."""
        if order is None or order == self.ring.order:
            if self._sorted is None:
                self._sorted = sorted(self._terms, key=self.ring.order.key,
                                      reverse=True)
            return list(self._sorted)
        return sorted(self._terms, key=order.key, reverse=True)

    def sorted_terms(self, order=None):
        return [(m, self._terms[m]) for m in self.sorted_monomials(order)]

    def __len__(self):
        return len(self._terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(not any(m) for m in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def constant_term(self):
        return self._terms.get(self.ring.one_monomial(), 0)

    def leading_monomial(self, order=None):
        if not self._terms:
            raise exceptions.DomainError('the zero polynomial has no '
                                         'leading monomial')
        if order is None or order == self.ring.order:
            return self.sorted_monomials()[0]
        return max(self._terms, key=order.key)

    def leading_coefficient(self, order=None):
        return self._terms[self.leading_monomial(order)]

    def support(self):
        """Indices of the variables that occur in some term."""
        used = set()
        for mono in self._terms:
            used.update(i for i, e in enumerate(mono) if e)
        return used

    def is_homogeneous(self):
        return len(set(sum(m) for m in self._terms)) <= 1

    def total_degree(self):
        if not self._terms:
            raise exceptions.DomainError('the zero polynomial has no degree')
        return max(sum(m) for m in self._terms)

    def order_at_origin(self):
        """Largest s with f in m^s, m the ideal of the origin."""
        if not self._terms:
            raise exceptions.DomainError('the zero polynomial has no order')
        return min(sum(m) for m in self._terms)

    def coefficient_of(self, mono):
        return arith.FieldElement(self._terms.get(tuple(mono), 0),
                                  self.ring.char)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            _check_same_ring(self, other)
            return other
        if isinstance(other, arith.FieldElement):
            if other.char != self.ring.char:
                raise exceptions.CharacteristicMismatch(
                    'cannot combine F_%d data with %r' % (
                        other.char.p, self.ring))
            return self.ring.constant(other.value)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.ring.p
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            value = (out.get(mono, 0) + coeff) % p
            if value:
                out[mono] = value
            else:
                out.pop(mono, None)
        return Polynomial.from_trusted(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial.from_trusted(
            self.ring, dict((m, p - c) for m, c in self._terms.items()))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Polynomial.from_trusted(
            self.ring, _mul_terms(self._terms, other._terms, self.ring.p))

    __rmul__ = __mul__

    def __pow__(self, k):
        return p_power(self, k)

    def scale(self, c):
        c = int(c) % self.ring.p
        if not c:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial.from_trusted(
            self.ring, dict((m, v * c % p) for m, v in self._terms.items()))

    def mul_term(self, mono, c=1):
        """Multiply by the single term c * x^mono."""
        c = int(c) % self.ring.p
        if not c:
            return self.ring.zero()
        p = self.ring.p
        return Polynomial.from_trusted(
            self.ring,
            dict((mono_mul(m, mono), v * c % p)
                 for m, v in self._terms.items()))

    def monic(self, order=None):
        if not self._terms:
            return self
        lc = self.leading_coefficient(order)
        return self.scale(arith.inverse_mod(lc, self.ring.p))

    def frobenius(self, e=1):
        return frobenius_endo(self, e)

    def map_to(self, ring, index_map):
        """Rename variables: x_i becomes y_{index_map[i]} of ``ring``."""
        if ring.char != self.ring.char:
            raise exceptions.CharacteristicMismatch(
                'cannot move %r into %r' % (self.ring, ring))
        n = ring.nvars
        out = {}
        for mono, coeff in self._terms.items():
            target = [0] * n
            for i, e in enumerate(mono):
                if e:
                    if index_map[i] is None:
                        raise exceptions.DomainError(
                            'variable %s has no image in %r' % (
                                self.ring.variables[i], ring))
                    target[index_map[i]] += e
            target = tuple(target)
            out[target] = (out.get(target, 0) + coeff) % ring.p
        return Polynomial(ring, out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self.ring.constant(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return 'Polynomial(%r, %s)' % (self.ring, self)

    def __str__(self):
        if not self._terms:
            return '0'
        pieces = []
        for mono, coeff in self.sorted_terms():
            text = format_monomial(self.ring, mono)
            if text == '1':
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(text)
            else:
                pieces.append('%d*%s' % (coeff, text))
        return ' + '.join(pieces)


def format_monomial(ring, mono):
    factors = []
    for name, e in zip(ring.variables, mono):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append('%s^%d' % (name, e))
    return '*'.join(factors) or '1'


def p_add(f, g):
    _check_same_ring(f, g)
    return f + g


def p_sub(f, g):
    _check_same_ring(f, g)
    return f - g


def p_mul(f, g):
    _check_same_ring(f, g)
    return f * g


def p_neg(f):
    return -f


def p_power(f, k, max_terms=None):
    """f ** k by square and multiply.

    :raises ResourceError: when an intermediate power has more than
        ``max_terms`` terms
    """
    if k < 0:
        raise exceptions.DomainError('negative exponent %d' % k)

    def checked(g, step):
        if max_terms is not None and len(g) > max_terms:
            log.debug("f^%d: %d terms after %d squarings", k, len(g), step)
            raise exceptions.ResourceError(
                'power expansion exceeded %d terms' % max_terms,
                {'power': k, 'step': step, 'terms': len(g)})
        return g

    result = f.ring.one()
    base = f
    step = 0
    while k >> step:
        if (k >> step) & 1:
            result = checked(result * base, step)
        step += 1
        if k >> step:
            base = checked(base * base, step)
    return result


def frobenius_exponent(p, e):
    """q = p ** e, refused once it passes MAX_EXPONENT.

    :raises DomainError: for e < 1 or an iterate too large to represent
    """
    if e < 1:
        raise exceptions.DomainError('Frobenius iterate must be >= 1')
    q = 1
    for _ in range(e):
        q *= p
        if q > MAX_EXPONENT:
            raise exceptions.DomainError(
                'Frobenius iterate e = %d is too large for p = %d' % (e, p))
    return q


def frobenius_endo(f, e=1):
    """f ** (p ** e), one term at a time.

    Frobenius is additive in characteristic p and fixes F_p, so each
    coefficient stays put and each exponent is multiplied by p ** e.
    """
    q = frobenius_exponent(f.ring.p, e)
    top = max([max(m) for m in f._terms] or [0])
    if top * q > MAX_EXPONENT:
        raise exceptions.ResourceError(
            'exponent overflow computing the %d-th Frobenius iterate' % e,
            {'p': f.ring.p, 'e': e, 'max_exponent': top})
    return Polynomial.from_trusted(
        f.ring,
        dict((tuple(x * q for x in m), c) for m, c in f._terms.items()))


def total_degree(f):
    return f.total_degree()


def order_at_origin(f):
    return f.order_at_origin()


def coefficient_of(f, mono):
    return f.coefficient_of(mono)


def power_mod_bracket(f, k, bound=None, max_terms=None):
    """The normal form of f ** k modulo (x_1^b, .., x_n^b).

    ``bound`` defaults to the characteristic, which gives f^k modulo the
    Frobenius power of the maximal ideal at the origin.  Products are
    truncated after every multiplication.
    """
    if k < 0:
        raise exceptions.DomainError('negative exponent %d' % k)
    ring = f.ring
    if bound is None:
        bound = ring.p
    p = ring.p

    def truncate(terms):
        return dict((m, c) for m, c in terms.items() if max(m) < bound)

    base = truncate(f._terms)
    result = truncate({ring.one_monomial(): 1})
    for step in range(k):
        result = _mul_terms_below(result, base, p, bound)
        if not result:
            log.debug("f^%d vanishes modulo the bracket after %d steps",
                      k, step + 1)
            break
        if max_terms is not None and len(result) > max_terms:
            raise exceptions.ResourceError(
                'power expansion exceeded %d terms' % max_terms,
                {'power': k, 'step': step + 1, 'terms': len(result)})
    return Polynomial.from_trusted(ring, result)


def exact_divide(f, g):
    """f / g when g divides f; DomainError otherwise."""
    _check_same_ring(f, g)
    if g.is_zero():
        raise exceptions.FieldDivisionError('division by the zero polynomial')
    order = f.ring.order
    lm_g = g.leading_monomial()
    inv = arith.inverse_mod(g.leading_coefficient(), f.ring.p)
    quotient = f.ring.zero()
    remainder = f
    while remainder:
        lm = remainder.leading_monomial(order)
        if not mono_divides(lm_g, lm):
            raise exceptions.DomainError('%s does not divide %s' % (g, f))
        c = remainder.leading_coefficient(order) * inv
        q = mono_div(lm, lm_g)
        quotient = quotient + f.ring.monomial(q, c)
        remainder = remainder - g.mul_term(q, c)
    return quotient


def divides(g, f):
    try:
        exact_divide(f, g)
    except exceptions.DomainError:
        return False
    return True
