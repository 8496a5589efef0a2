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

"""Polynomial expressions over a declared ring.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := nat | var ('^' nat)? | '(' expr ')' ('^' nat)?

Juxtaposition multiplies, coefficients are reduced mod p, and a list of
generators is expressions separated by commas.  Errors report the byte
offset into the UTF-8 source.
"""

import collections
import logging
import re

from fedder import exceptions
from fedder import poly

log = logging.getLogger("fedder.parser")

Token = collections.namedtuple('Token', ['kind', 'text', 'offset'])

_TOKENS = re.compile(r'''
    (?P<space>\s+)
  | (?P<nat>[0-9]+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[-+*^(),])
  | (?P<bad>.)
''', re.VERBOSE)

END = 'end'

# Parentheses nest at most this deep.
MAX_NESTING = 64


def _byte_offset(text, index):
    return len(text[:index].encode('utf-8'))


def tokenize(text):
    """Split ``text`` into tokens, ending with an ``end`` token."""
    tokens = []
    for match in _TOKENS.finditer(text):
        kind = match.lastgroup
        offset = _byte_offset(text, match.start())
        if kind == 'space':
            continue
        if kind == 'bad':
            raise exceptions.ParseError(
                'unexpected character %r' % match.group(), offset, text)
        if kind == 'op':
            kind = match.group()
        tokens.append(Token(kind, match.group(), offset))
    tokens.append(Token(END, '', _byte_offset(text, len(text))))
    return tokens


class _Parser(object):

    def __init__(self, text, ring, limits=None):
        self.text = text
        self.ring = ring
        self.max_terms = limits.max_terms if limits is not None else None
        self.tokens = tokenize(text)
        self.pos = 0
        self.depth = 0

    @property
    def current(self):
        return self.tokens[self.pos]

    def fail(self, message, token=None):
        token = token or self.current
        raise exceptions.ParseError(message, token.offset, self.text)

    def take(self, kind):
        token = self.current
        if token.kind != kind:
            if token.kind == END:
                self.fail('expected %r, found end of input' % kind)
            self.fail('expected %r, found %r' % (kind, token.text))
        self.pos += 1
        return token

    def at(self, *kinds):
        return self.current.kind in kinds

    def sized(self, value, token):
        if self.max_terms is not None and len(value) > self.max_terms:
            raise exceptions.ResourceError(
                'expression exceeded %d terms at byte %d' % (
                    self.max_terms, token.offset),
                {'terms': len(value), 'offset': token.offset})
        return value

    def expression(self):
        negate = False
        if self.at('+', '-'):
            negate = self.take(self.current.kind).kind == '-'
        value = self.term()
        if negate:
            value = -value
        while self.at('+', '-'):
            op = self.take(self.current.kind).kind
            right = self.term()
            value = value + right if op == '+' else value - right
        return value

    def term(self):
        value = self.factor()
        while True:
            token = self.current
            if self.at('*'):
                self.take('*')
                value = self.sized(value * self.factor(), token)
            elif self.at('nat', 'name', '('):
                value = self.sized(value * self.factor(), token)
            else:
                return value

    def exponent(self):
        if not self.at('^'):
            return None
        self.take('^')
        token = self.current
        if token.kind != 'nat':
            self.fail('malformed exponent %r' % token.text)
        self.pos += 1
        value = int(token.text)
        if value > poly.MAX_EXPONENT:
            self.fail('exponent %d is too large' % value, token)
        return value

    def factor(self):
        token = self.current
        if token.kind == 'nat':
            self.pos += 1
            return self.ring.constant(int(token.text))
        if token.kind == 'name':
            self.pos += 1
            try:
                index = self.ring.index(token.text)
            except exceptions.DomainError:
                self.fail('unknown variable %r' % token.text, token)
            e = self.exponent()
            mono = [0] * self.ring.nvars
            mono[index] = 1 if e is None else e
            return self.ring.monomial(mono)
        if token.kind == '(':
            if self.depth >= MAX_NESTING:
                self.fail('parentheses nested deeper than %d' % MAX_NESTING)
            self.pos += 1
            self.depth += 1
            inner = self.expression()
            self.take(')')
            self.depth -= 1
            e = self.exponent()
            if e is None:
                return inner
            try:
                return poly.p_power(inner, e, self.max_terms)
            except exceptions.ResourceError as exc:
                exc.diagnostics['offset'] = token.offset
                raise
        if token.kind == END:
            self.fail('unexpected end of input')
        self.fail('unexpected %r' % token.text)

    def polynomial(self):
        if self.at(END):
            self.fail('empty expression')
        value = self.expression()
        if not self.at(END):
            self.fail('unexpected %r' % self.current.text)
        return value

    def generators(self):
        if self.at(END):
            self.fail('empty generator list')
        found = [self.expression()]
        while self.at(','):
            self.take(',')
            found.append(self.expression())
        if not self.at(END):
            self.fail('unexpected %r' % self.current.text)
        return found


def parse_polynomial(text, ring, limits=None):
    """Parse one polynomial of ``ring``.

    :param limits: groebner.Limits; products and powers may not grow past
        its term cap
    :raises ParseError: on unknown variables, malformed exponents, empty
        input, stray characters or parentheses nested too deeply
    :raises ResourceError: when an intermediate value is too large
    """
    return _Parser(text, ring, limits).polynomial()


def parse_generators(text, ring, limits=None):
    """Parse a comma separated list of polynomials of ``ring``."""
    found = _Parser(text, ring, limits).generators()
    log.debug("parsed %d generators in %r", len(found), ring)
    return found


class ParsedExpression(object):
    """Source text, the ring it was read in and what it parsed to."""

    def __init__(self, source, ring, value):
        self.source = source
        self.ring = ring
        self.value = value

    @classmethod
    def polynomial(cls, source, ring, limits=None):
        return cls(source, ring, parse_polynomial(source, ring, limits))

    @classmethod
    def generators(cls, source, ring, limits=None):
        return cls(source, ring, parse_generators(source, ring, limits))

    def to_dict(self):
        if isinstance(self.value, list):
            value = [str(g) for g in self.value]
        else:
            value = str(self.value)
        return {'source': self.source, 'parsed': value}

    def __repr__(self):
        return 'ParsedExpression(%r in %r)' % (self.source, self.ring)
