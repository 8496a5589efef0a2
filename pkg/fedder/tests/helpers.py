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

"""Brute force oracles and random data for the test suites."""

import itertools

from hypothesis import strategies as st

from fedder import arith
from fedder import poly


def monomials_of_degree(n, d):
    """All exponent tuples of total degree d in n variables."""
    for cut in itertools.combinations(range(d + n - 1), n - 1):
        edges = (-1,) + cut + (d + n - 1,)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(n))


def _reduce_row(row, pivots, p):
    row = dict(row)
    while row:
        lead = max(row)
        pivot = pivots.get(lead)
        if pivot is None:
            return lead, row
        c = row[lead]
        for m, v in pivot.items():
            value = (row.get(m, 0) - c * v) % p
            if value:
                row[m] = value
            else:
                row.pop(m, None)
    return None, row


def macaulay_membership(f, generators):
    """f in (generators), for homogeneous generators, by linear algebra.

    A homogeneous ideal is spanned in degree d by the products m * g with
    deg m = d - deg g, so each homogeneous part of f is tested against
    the row echelon form of those products.
    """
    ring = f.ring
    p = ring.p
    for g in generators:
        assert g.is_homogeneous(), g
    parts = {}
    for mono, c in f.terms.items():
        parts.setdefault(sum(mono), {})[mono] = c
    for d, part in parts.items():
        pivots = {}
        for g in generators:
            if not g:
                continue
            shift = d - g.total_degree()
            if shift < 0:
                continue
            for m in monomials_of_degree(ring.nvars, shift):
                lead, row = _reduce_row(g.mul_term(m).terms, pivots, p)
                if lead is not None:
                    inv = arith.inverse_mod(row[lead], p)
                    pivots[lead] = dict((k, v * inv % p)
                                        for k, v in row.items())
        lead, _ = _reduce_row(part, pivots, p)
        if lead is not None:
            return False
    return True


def random_polynomial(rng, ring, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        degree = rng.randint(0, max_degree)
        mono = [0] * ring.nvars
        for _ in range(degree):
            mono[rng.randrange(ring.nvars)] += 1
        terms[tuple(mono)] = rng.randrange(ring.p)
    return poly.Polynomial(ring, terms)


def random_homogeneous(rng, ring, degree, max_terms=4):
    choices = list(monomials_of_degree(ring.nvars, degree))
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.choice(choices)] = rng.randrange(1, ring.p)
    return poly.Polynomial(ring, terms)


def random_ideal_generators(rng, ring, max_gens=3, max_degree=3,
                            max_terms=4):
    gens = []
    while not gens:
        for _ in range(rng.randint(1, max_gens)):
            f = random_polynomial(rng, ring, max_degree, max_terms)
            if f:
                gens.append(f)
    return gens


def in_maximal(f):
    """f with its constant term removed."""
    return f - f.constant_term()


@st.composite
def polynomials(draw, ring, max_degree=3, max_terms=5):
    """Hypothesis strategy for polynomials of ``ring``."""
    exponents = st.lists(st.integers(0, max_degree), min_size=ring.nvars,
                         max_size=ring.nvars).map(tuple)
    terms = draw(st.dictionaries(exponents, st.integers(0, ring.p - 1),
                                 max_size=max_terms))
    return poly.Polynomial(ring, terms)
