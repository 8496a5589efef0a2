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

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
from oslotest import base
import testscenarios

from fedder import arith
from fedder import exceptions
from fedder import groebner
from fedder import poly
from fedder.tests import helpers


R3 = poly.PolyRing(3, 'x,y,z')
R5 = poly.PolyRing(5, 'x,y,z')


class TestPolyRing(base.BaseTestCase):

    def test_variables_from_string(self):
        self.assertEqual(('x', 'y', 'z'), R3.variables)
        self.assertEqual(3, R3.nvars)
        self.assertEqual(3, R3.p)

    def test_bad_variables(self):
        self.assertRaises(exceptions.DomainError, poly.PolyRing, 3, 'x,x')
        self.assertRaises(exceptions.DomainError, poly.PolyRing, 3, '')
        self.assertRaises(exceptions.DomainError, poly.PolyRing, 3, '1x')
        self.assertRaises(exceptions.DomainError, poly.PolyRing, 4, 'x')

    def test_equality_by_content(self):
        self.assertEqual(R3, poly.PolyRing(3, ['x', 'y', 'z']))
        self.assertNotEqual(R3, R5)
        self.assertNotEqual(R3, R3.with_order(poly.MonomialOrder(poly.LEX)))

    def test_unknown_variable(self):
        self.assertRaises(exceptions.DomainError, R3.gen, 'w')

    def test_describe(self):
        self.assertEqual({'char': 3, 'vars': ['x', 'y', 'z'],
                          'order': 'grevlex'}, R3.describe())


class TestMonomialOrder(base.BaseTestCase):

    def test_lex(self):
        lex = poly.MonomialOrder(poly.LEX)
        self.assertEqual(1, lex.compare((1, 0, 0), (0, 5, 5)))
        self.assertEqual(-1, lex.compare((0, 1, 0), (0, 1, 1)))
        self.assertEqual(0, lex.compare((1, 2, 3), (1, 2, 3)))

    def test_grevlex(self):
        grevlex = poly.MonomialOrder(poly.GREVLEX)
        # degree first
        self.assertEqual(1, grevlex.compare((0, 0, 2), (1, 0, 0)))
        # then the smaller power of the last variable wins
        self.assertEqual(1, grevlex.compare((0, 3, 0), (1, 0, 2)))
        self.assertEqual(1, grevlex.compare((1, 1, 0), (0, 2, 0)))

    def test_elimination(self):
        elim = poly.MonomialOrder.elimination(1)
        self.assertEqual(1, elim.compare((1, 0, 0), (0, 9, 9)))
        self.assertEqual('elim(1)', elim.name)
        self.assertEqual(elim, poly.MonomialOrder.from_name('elim(1)'))

    def test_bad_names(self):
        self.assertRaises(exceptions.DomainError,
                          poly.MonomialOrder.from_name, 'deglex')
        self.assertRaises(exceptions.DomainError,
                          poly.MonomialOrder.elimination, 0)


monomials3 = st.tuples(*[st.integers(0, 6)] * 3)
orders = st.sampled_from([poly.MonomialOrder(poly.LEX),
                          poly.MonomialOrder(poly.GREVLEX),
                          poly.MonomialOrder.elimination(1),
                          poly.MonomialOrder.elimination(2)])


class TestMonomialOrderProperties(base.BaseTestCase):

    @settings(derandomize=True, max_examples=150, deadline=None)
    @given(orders, monomials3, monomials3, monomials3)
    def test_multiplicative(self, order, a, b, c):
        self.assertEqual(order.compare(a, b),
                         order.compare(poly.mono_mul(a, c),
                                       poly.mono_mul(b, c)))

    @settings(derandomize=True, max_examples=100, deadline=None)
    @given(orders, monomials3)
    def test_one_is_smallest(self, order, a):
        one = (0, 0, 0)
        if a == one:
            self.assertEqual(0, order.compare(a, one))
        else:
            self.assertEqual(1, order.compare(a, one))

    @settings(derandomize=True, max_examples=100, deadline=None)
    @given(orders, monomials3, monomials3)
    def test_total(self, order, a, b):
        self.assertEqual(order.compare(a, b), -order.compare(b, a))
        self.assertEqual(a == b, order.compare(a, b) == 0)


class TestPolynomial(base.BaseTestCase):

    def setUp(self):
        super(TestPolynomial, self).setUp()
        self.x, self.y, self.z = R3.gens()

    def test_coefficients_are_reduced(self):
        f = poly.Polynomial(R3, {(1, 0, 0): 4, (0, 0, 0): -1})
        self.assertEqual({(1, 0, 0): 1, (0, 0, 0): 2}, dict(f.terms))

    def test_zero_terms_dropped(self):
        self.assertTrue((self.x - self.x).is_zero())
        self.assertEqual(0, len(self.x * 3))

    def test_bad_monomials(self):
        self.assertRaises(exceptions.DomainError, poly.Polynomial, R3,
                          {(1, 0): 1})
        self.assertRaises(exceptions.DomainError, poly.Polynomial, R3,
                          {(1, -1, 0): 1})

    def test_str(self):
        f = 2 * self.x ** 2 * self.y + self.z + 1
        self.assertEqual('2*x^2*y + z + 1', str(f))
        self.assertEqual('0', str(R3.zero()))
        self.assertEqual('2', str(-R3.one()))

    def test_leading_term(self):
        f = self.x + self.y ** 2
        self.assertEqual((0, 2, 0), f.leading_monomial())
        lex = poly.MonomialOrder(poly.LEX)
        self.assertEqual((1, 0, 0), f.leading_monomial(lex))
        self.assertRaises(exceptions.DomainError,
                          R3.zero().leading_monomial)

    def test_degrees(self):
        f = self.x * self.y + self.z ** 3
        self.assertEqual(3, poly.total_degree(f))
        self.assertEqual(2, poly.order_at_origin(f))
        self.assertRaises(exceptions.DomainError, R3.zero().order_at_origin)

    def test_coefficient_of(self):
        f = 2 * self.x * self.y
        self.assertEqual(arith.FieldElement(2, 3),
                         poly.coefficient_of(f, (1, 1, 0)))
        self.assertEqual(0, f.coefficient_of((0, 0, 1)))

    def test_ring_mismatch(self):
        other = R5.gen('x')
        self.assertRaises(exceptions.CharacteristicMismatch, poly.p_add,
                          self.x, other)
        lex = R3.with_order(poly.MonomialOrder(poly.LEX))
        self.assertRaises(exceptions.DomainError, poly.p_mul, self.x,
                          lex.gen('x'))

    def test_field_element_coercion(self):
        self.assertEqual(self.x + 2,
                         self.x + arith.FieldElement(2, 3))
        self.assertRaises(exceptions.CharacteristicMismatch,
                          lambda: self.x + arith.FieldElement(2, 5))

    def test_square(self):
        f = self.y ** 2 - self.x ** 2 * self.z
        expected = (self.y ** 4 + self.x ** 2 * self.y ** 2 * self.z +
                    self.x ** 4 * self.z ** 2)
        self.assertEqual(expected, poly.p_power(f, 2))

    def test_negative_power(self):
        self.assertRaises(exceptions.DomainError, poly.p_power, self.x, -1)

    def test_homogeneous(self):
        self.assertTrue((self.x * self.y - self.z ** 2).is_homogeneous())
        self.assertFalse((self.x - self.z ** 2).is_homogeneous())

    def test_support(self):
        self.assertEqual({0, 2}, (self.x * self.z + self.z).support())

    def test_map_to(self):
        big = poly.PolyRing(3, 'a,x,y,z')
        f = self.x * self.z + 1
        moved = f.map_to(big, [1, 2, 3])
        self.assertEqual('x*z + 1', str(moved))
        self.assertEqual(f, moved.map_to(R3, [None, 0, 1, 2]))
        self.assertRaises(exceptions.DomainError,
                          big.gen('a').map_to, R3, [None, 0, 1, 2])

    def test_exact_divide(self):
        f = (self.x + self.y) * (self.x - self.z)
        self.assertEqual(self.x - self.z,
                         poly.exact_divide(f, self.x + self.y))
        self.assertTrue(poly.divides(self.x + self.y, f))
        self.assertFalse(poly.divides(self.y, f))
        self.assertRaises(exceptions.FieldDivisionError, poly.exact_divide,
                          f, R3.zero())

    def test_frobenius_overflow(self):
        f = R3.monomial((2 ** 30, 0, 0))
        self.assertRaises(exceptions.ResourceError, poly.frobenius_endo,
                          f, 1)

    def test_frobenius_exponent(self):
        self.assertEqual(9, poly.frobenius_exponent(3, 2))
        self.assertEqual(2 ** 30, poly.frobenius_exponent(2, 30))
        for p, e in ((2, 31), (3, 10 ** 9), (5, 0)):
            self.assertRaises(exceptions.DomainError,
                              poly.frobenius_exponent, p, e)
        self.assertRaises(exceptions.DomainError, poly.frobenius_endo,
                          self.x, 10 ** 9)

    def test_power_term_cap(self):
        ring = poly.PolyRing(10007, 'x,y,z')
        f = sum(ring.gens(), ring.zero())
        self.assertEqual(f * f * f, poly.p_power(f, 3, max_terms=100))
        e = self.assertRaises(exceptions.ResourceError, poly.p_power,
                              f, 150, 1000)
        self.assertEqual(150, e.diagnostics['power'])
        self.assertGreater(e.diagnostics['terms'], 1000)


class TestPolynomialProperties(base.BaseTestCase):

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(helpers.polynomials(R3), helpers.polynomials(R3),
           helpers.polynomials(R3))
    def test_ring_axioms(self, f, g, h):
        self.assertEqual(f * (g + h), f * g + f * h)
        self.assertEqual(f + g, g + f)
        self.assertEqual(f * g, g * f)
        self.assertTrue((f - f).is_zero())

    @settings(derandomize=True, max_examples=60, deadline=None)
    @given(helpers.polynomials(R5, max_degree=2),
           helpers.polynomials(R5, max_degree=2))
    def test_frobenius_is_additive(self, f, g):
        self.assertEqual(poly.frobenius_endo(f + g),
                         poly.frobenius_endo(f) + poly.frobenius_endo(g))
        self.assertEqual(poly.frobenius_endo(f), poly.p_power(f, 5))

    @settings(derandomize=True, max_examples=40, deadline=None)
    @given(helpers.polynomials(R3, max_degree=2),
           st.integers(min_value=0, max_value=4))
    def test_power_by_repeated_multiplication(self, f, k):
        expected = R3.one()
        for _ in range(k):
            expected = expected * f
        self.assertEqual(expected, f ** k)


class TestPowerModBracket(testscenarios.WithScenarios, base.BaseTestCase):

    scenarios = [('p%d' % p, dict(p=p)) for p in (2, 3, 5)]

    def test_matches_normal_form(self):
        ring = poly.PolyRing(self.p, 'x,y,z')
        bracket = groebner.Ideal.from_monomials(
            ring, [tuple(self.p if j == i else 0 for j in range(3))
                   for i in range(3)])
        basis = bracket.basis()
        rng = random.Random(self.p)
        for _ in range(10):
            f = helpers.random_polynomial(rng, ring, max_degree=2)
            for k in (1, self.p - 1, self.p + 1):
                expected = groebner.normal_form(poly.p_power(f, k), basis)
                self.assertEqual(expected, poly.power_mod_bracket(f, k))

    def test_custom_bound(self):
        ring = poly.PolyRing(self.p, 'x,y')
        x, y = ring.gens()
        self.assertEqual(ring.one(), poly.power_mod_bracket(x + y, 0, 1))
        self.assertTrue(poly.power_mod_bracket(x + y, 3, 2).is_zero())

    def test_term_cap(self):
        ring = poly.PolyRing(self.p, 'x,y,z')
        f = sum(ring.gens(), ring.one())
        self.assertRaises(exceptions.ResourceError, poly.power_mod_bracket,
                          f, 4, 50, 3)
