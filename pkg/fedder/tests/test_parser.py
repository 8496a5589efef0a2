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

import random

from oslotest import base

from fedder import exceptions
from fedder import groebner
from fedder import parser
from fedder import poly
from fedder.tests import helpers


class TestTokenize(base.BaseTestCase):

    def test_kinds(self):
        tokens = parser.tokenize('2x^3 + y')
        self.assertEqual(['nat', 'name', '^', 'nat', '+', 'name', 'end'],
                         [t.kind for t in tokens])
        self.assertEqual([0, 1, 2, 3, 5, 7, 8], [t.offset for t in tokens])

    def test_byte_offsets(self):
        tokens = parser.tokenize('x\u00a0+ w')
        self.assertEqual([0, 3, 5, 6], [t.offset for t in tokens])

    def test_bad_character(self):
        e = self.assertRaises(exceptions.ParseError, parser.tokenize,
                              'x $ y')
        self.assertEqual(2, e.offset)
        self.assertEqual('x $ y', e.source)


class TestParsePolynomial(base.BaseTestCase):

    def setUp(self):
        super(TestParsePolynomial, self).setUp()
        self.ring = poly.PolyRing(3, 'x,y,z')
        self.x, self.y, self.z = self.ring.gens()

    def parse(self, text):
        return parser.parse_polynomial(text, self.ring)

    def test_power_of_sum(self):
        x, y, z = self.x, self.y, self.z
        f = self.parse('(y^2 - x^2 z)^2')
        self.assertEqual((y ** 2 - x ** 2 * z) ** 2, f)
        self.assertEqual(y ** 4 + x ** 2 * y ** 2 * z + x ** 4 * z ** 2, f)

    def test_juxtaposition(self):
        x, y = self.x, self.y
        self.assertEqual(2 * x * y, self.parse('2x y'))
        self.assertEqual(2 * x * y, self.parse('2*x*y'))
        self.assertEqual(x * (x + y), self.parse('x(x + y)'))

    def test_coefficients_reduce(self):
        self.assertEqual(self.ring.one(), self.parse('3x + 4'))
        self.assertEqual(self.ring.zero(), self.parse('x - x'))

    def test_leading_sign(self):
        x, y = self.x, self.y
        self.assertEqual(2 * x + y, self.parse('-x + y'))
        self.assertEqual(x, self.parse('+x'))

    def test_errors(self):
        cases = [
            ('', 'empty expression', 0),
            ('   ', 'empty expression', 3),
            ('x +', 'unexpected end of input', 3),
            ('x^', 'malformed exponent', 2),
            ('x^-1', 'malformed exponent', 2),
            ('x^99999999999', 'too large', 2),
            ('(x', "expected ')'", 2),
            ('x)', "unexpected ')'", 1),
            ('--x', "unexpected '-'", 1),
            ('xy', "unknown variable 'xy'", 0),
            ('x + w', "unknown variable 'w'", 4),
            ('x\u00a0+ w', "unknown variable 'w'", 5),
        ]
        for text, message, offset in cases:
            e = self.assertRaises(exceptions.ParseError, self.parse, text)
            self.assertIn(message, str(e), text)
            self.assertEqual(offset, e.offset, text)

    def test_nesting_limit(self):
        depth = parser.MAX_NESTING
        self.assertEqual(self.x, self.parse('(' * depth + 'x' + ')' * depth))
        self.assertEqual(self.x ** 100, self.parse('(x)' * 100))
        deep = '(' * 400 + 'x' + ')' * 400
        e = self.assertRaises(exceptions.ParseError, self.parse, deep)
        self.assertIn('nested deeper', str(e))
        self.assertEqual(depth, e.offset)

    def test_term_cap(self):
        ring = poly.PolyRing(10007, 'x,y,z')
        limits = groebner.Limits(max_terms=1000)
        self.assertEqual(6, len(parser.parse_polynomial('(x+y+z)^2', ring,
                                                        limits)))
        e = self.assertRaises(exceptions.ResourceError,
                              parser.parse_polynomial, '(x+y+z)^150', ring,
                              limits)
        self.assertEqual(0, e.diagnostics['offset'])
        self.assertRaises(exceptions.ResourceError,
                          parser.parse_generators, 'x, (x+y+z)^150', ring,
                          limits)
        # unbounded without limits
        self.assertEqual(6, len(parser.parse_polynomial('(x+y+z)^2', ring)))

    def test_product_term_cap(self):
        ring = poly.PolyRing(7, 'x,y,z')
        limits = groebner.Limits(max_terms=15)
        text = '(x+y+z+1)(x+y+z+2)(x+y+z+3)'
        e = self.assertRaises(exceptions.ResourceError,
                              parser.parse_polynomial, text, ring, limits)
        self.assertEqual(18, e.diagnostics['offset'])
        self.assertEqual(20, e.diagnostics['terms'])
        self.assertEqual(20, len(parser.parse_polynomial(text, ring)))

    def test_parse_error_is_domain_error(self):
        self.assertRaises(exceptions.DomainError, self.parse, 'q')

    def test_round_trip(self):
        rng = random.Random(7)
        ring = poly.PolyRing(7, 'x,y,z')
        for _ in range(200):
            f = helpers.random_polynomial(rng, ring, 4, 5)
            self.assertEqual(f, parser.parse_polynomial(str(f), ring),
                             str(f))


class TestParseGenerators(base.BaseTestCase):

    def setUp(self):
        super(TestParseGenerators, self).setUp()
        self.ring = poly.PolyRing(5, 'x,y')

    def test_list(self):
        x, y = self.ring.gens()
        self.assertEqual([x, y ** 2 - x],
                         parser.parse_generators('x, y^2 - x', self.ring))

    def test_errors(self):
        for text in ('', 'x,,y', 'x,'):
            self.assertRaises(exceptions.ParseError,
                              parser.parse_generators, text, self.ring)

    def test_parsed_expression(self):
        parsed = parser.ParsedExpression.polynomial('x + x', self.ring)
        self.assertEqual({'source': 'x + x', 'parsed': '2*x'},
                         parsed.to_dict())
        parsed = parser.ParsedExpression.generators('x, y', self.ring)
        self.assertEqual(['x', 'y'], parsed.to_dict()['parsed'])
