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

"""Arithmetic in the prime field F_p.

Values are kept as least residues and every operation reduces eagerly,
so two equal field elements always compare and hash equal.
"""

import sympy

from fedder import exceptions

MAX_CHARACTERISTIC = 2 ** 31 - 1


class PrimeChar(object):
    """The characteristic p of a prime field."""

    __slots__ = ('p',)

    def __init__(self, p):
        if isinstance(p, PrimeChar):
            p = p.p
        if isinstance(p, bool) or not isinstance(p, int):
            raise exceptions.DomainError(
                'characteristic must be an integer, got %r' % (p,))
        if p > MAX_CHARACTERISTIC:
            raise exceptions.DomainError(
                'characteristic %d exceeds the cap %d' % (
                    p, MAX_CHARACTERISTIC))
        if not sympy.isprime(p):
            raise exceptions.DomainError('%d is not a prime' % p)
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeChar) and self.p == other.p

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('PrimeChar', self.p))

    def __int__(self):
        return self.p

    def __repr__(self):
        return 'PrimeChar(%d)' % self.p

    def element(self, value):
        return FieldElement(value, self)


def as_char(p):
    if isinstance(p, PrimeChar):
        return p
    return PrimeChar(p)


def inverse_mod(value, p):
    """Inverse of an integer modulo the prime p."""
    value %= p
    if value == 0:
        raise exceptions.FieldDivisionError(
            'division by zero in F_%d' % p)
    return pow(value, p - 2, p)


class FieldElement(object):
    """An element of F_p stored as its least residue."""

    __slots__ = ('value', 'char')

    def __init__(self, value, char):
        char = as_char(char)
        self.char = char
        self.value = int(value) % char.p

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.char != self.char:
                raise exceptions.CharacteristicMismatch(
                    'cannot combine elements of F_%d and F_%d' % (
                        self.char.p, other.char.p))
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        return None

    def __add__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value + value, self.char)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value - value, self.char)

    def __rsub__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(value - self.value, self.char)

    def __mul__(self, other):
        value = self._coerce(other)
        if value is None:
            return NotImplemented
        return FieldElement(self.value * value, self.char)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.char)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.char.p), self.char)

    def inverse(self):
        return FieldElement(inverse_mod(self.value, self.char.p), self.char)

    def is_zero(self):
        return self.value == 0

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.char == other.char and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.char.p
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.value, self.char.p))

    def __repr__(self):
        return 'FieldElement(%d, %d)' % (self.value, self.char.p)

    def __str__(self):
        return str(self.value)


def _check_same(a, b):
    if a.char != b.char:
        raise exceptions.CharacteristicMismatch(
            'cannot combine elements of F_%d and F_%d' % (a.char.p, b.char.p))


def fe_add(a, b):
    _check_same(a, b)
    return a + b


def fe_sub(a, b):
    _check_same(a, b)
    return a - b


def fe_mul(a, b):
    _check_same(a, b)
    return a * b


def fe_neg(a):
    return -a


def fe_inverse(a):
    """Multiplicative inverse; raises FieldDivisionError on zero."""
    return a.inverse()


def binomial_mod_p(n, k, char):
    """C(n, k) reduced mod p, by Lucas' theorem.

    The base-p digits of n and k are paired off and the small binomials
    multiplied together; a digit of k larger than the matching digit of n
    makes the whole coefficient vanish.

    :param n: natural number
    :param k: natural number; k > n gives 0
    :param char: PrimeChar or prime integer
    :return: FieldElement
    """
    char = as_char(char)
    p = char.p
    if n < 0 or k < 0:
        raise exceptions.DomainError('binomial arguments must be natural')
    if k > n:
        return FieldElement(0, char)
    result = 1
    while n or k:
        n, n_digit = divmod(n, p)
        k, k_digit = divmod(k, p)
        if k_digit > n_digit:
            return FieldElement(0, char)
        result = result * _small_binomial(n_digit, k_digit, p) % p
    return FieldElement(result, char)


def _small_binomial(n, k, p):
    # n < p here, so every factor of k! is invertible
    k = min(k, n - k)
    numerator = 1
    denominator = 1
    for i in range(k):
        numerator = numerator * (n - i) % p
        denominator = denominator * (i + 1) % p
    return numerator * inverse_mod(denominator, p) % p
