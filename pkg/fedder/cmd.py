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

import argparse
import logging
import sys

from fedder import exceptions
from fedder import frobenius
from fedder import fsing
from fedder import groebner
from fedder import parser as expr_parser
from fedder import poly
from fedder import report
from fedder import utils
from fedder import zoo

log = logging.getLogger("fedder.cmd")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


class ArgumentParser(argparse.ArgumentParser):
    """argparse, but usage errors raise instead of exiting."""

    def error(self, message):
        raise exceptions.DomainError('%s: %s' % (self.prog, message))


def _ring(args):
    if args.char is None:
        raise exceptions.DomainError('--char is required')
    names = utils.split_list(args.vars)
    if not names:
        raise exceptions.DomainError('--vars is required')
    order = poly.MonomialOrder.from_name(args.order)
    return poly.PolyRing(args.char, names, order)


def _limits(args):
    return groebner.Limits(max_pairs=args.max_pairs,
                           max_degree=args.max_degree,
                           max_terms=args.max_terms)


def _strs(polys):
    return [str(f) for f in polys]


def _parsed(args, field, ring, limits, build):
    source = getattr(args, field)
    try:
        return build(source, ring, limits)
    except exceptions.ParseError as e:
        raise exceptions.ParseError('%s: %s' % (field, e.reason), e.offset,
                                    source)


def _polynomial(args, field, ring, limits):
    return _parsed(args, field, ring, limits,
                   expr_parser.ParsedExpression.polynomial).value


def _generators(args, field, ring, limits):
    return _parsed(args, field, ring, limits,
                   expr_parser.ParsedExpression.generators).value


def do_fpure(args, ring, limits):
    inputs = {'expression': args.expression, 'ideal': args.ideal}
    if args.ideal:
        gens = _generators(args, 'expression', ring, limits)
        verdict = fsing.fedder_general(groebner.Ideal(ring, gens), limits)
    else:
        f = _polynomial(args, 'expression', ring, limits)
        verdict = fsing.decide_fpurity(f, limits)
    return inputs, _fpurity_payload(verdict), [verdict.certificate]


def _fpurity_payload(verdict):
    return {'outcome': verdict.outcome,
            'method': verdict.method,
            'locality': verdict.locality,
            'polynomials': _strs(verdict.polynomials)}


def do_fpure_product(args, ring, limits):
    factors = _generators(args, 'factors', ring, limits)
    verdict = fsing.fedder_product(factors, limits)
    return ({'factors': args.factors}, _fpurity_payload(verdict),
            [verdict.certificate])


def do_groebner(args, ring, limits):
    gens = _generators(args, 'generators', ring, limits)
    basis = groebner.Ideal(ring, gens).basis(limits=limits)
    return ({'generators': args.generators},
            {'basis': _strs(basis), 'unit': basis.is_unit()},
            [{'order': ring.order.name,
              'leading_monomials': [
                  poly.format_monomial(ring, m)
                  for m in basis.leading_monomials]}])


def do_member(args, ring, limits):
    f = _polynomial(args, 'element', ring, limits)
    ideal = groebner.Ideal(
        ring, _generators(args, 'generators', ring, limits))
    if ideal.is_zero():
        remainder = f
    else:
        remainder = groebner.normal_form(f, ideal.basis(limits=limits),
                                         limits)
    return ({'element': args.element, 'generators': args.generators},
            {'member': not remainder},
            [{'normal_form': str(remainder)}])


def do_frobpow(args, ring, limits):
    poly.frobenius_exponent(ring.p, args.e)
    gens = _generators(args, 'generators', ring, limits)
    ideal = groebner.Ideal(ring, gens)
    power = frobenius.frobenius_power(ideal, args.e)
    return ({'generators': args.generators, 'e': args.e},
            {'generators': _strs(power.generators)}, [])


def do_frobroot(args, ring, limits):
    poly.frobenius_exponent(ring.p, args.e)
    gens = _generators(args, 'generators', ring, limits)
    ideal = groebner.Ideal(ring, gens)
    root = frobenius.pe_th_root(ideal, args.e)
    contained = frobenius.frobenius_power(root, args.e).contains_ideal(
        ideal, limits)
    return ({'generators': args.generators, 'e': args.e},
            {'generators': _strs(root.generators)},
            [{'ideal_in_root_power': contained}])


def _quotient(args, ring, limits):
    defining = []
    if args.quotient:
        defining = _generators(args, 'quotient', ring, limits)
    return frobenius.QuotientPresentation(ring, defining, limits)


def do_frobclosure(args, ring, limits):
    poly.frobenius_exponent(ring.p, args.max_e)
    quotient = _quotient(args, ring, limits)
    gens = _generators(args, 'generators', ring, limits)
    ideal = groebner.Ideal(ring, gens)
    closure = frobenius.is_frobenius_closed(
        ideal, quotient, args.max_e, args.stop_on_stable, limits)
    payload = closure.to_dict()
    return ({'generators': args.generators, 'quotient': args.quotient,
             'max_e': args.max_e},
            {'status': payload['status'], 'level': payload['level'],
             'witness': payload['witness']},
            [payload])


def do_finj_cm(args, ring, limits):
    poly.frobenius_exponent(ring.p, args.max_e)
    quotient = _quotient(args, ring, limits)
    params = _generators(args, 'params', ring, limits)
    verdict = fsing.finjective_cm_quotient(
        quotient, params, args.max_e, not args.no_assume_cm,
        args.stop_on_stable, limits)
    return ({'quotient': args.quotient, 'params': args.params,
             'max_e': args.max_e},
            {'outcome': verdict.outcome, 'basis': verdict.basis,
             'flags': verdict.flags},
            [verdict.detail])


def do_union_check(args, ring, limits):
    g = _polynomial(args, 'first', ring, limits)
    h = _polynomial(args, 'second', ring, limits)
    verdict = fsing.union_decomposition_check(g, h, limits)
    return ({'first': args.first, 'second': args.second},
            {'outcome': verdict.outcome, 'basis': verdict.basis},
            [verdict.detail])


def do_subring(args, ring, limits):
    images = _generators(args, 'images', ring, limits)
    names = utils.split_list(args.names)
    presented = frobenius.QuotientPresentation.from_subring(
        ring, images, names, limits)
    return ({'images': args.images, 'names': args.names},
            presented.describe(), [])


def do_zoo_list(args, limits):
    return {}, {'cases': [case.to_dict() for case in zoo.CATALOG]}, []


def _case_payload(reports, omit_timing):
    rows = []
    for rep in reports:
        row = rep.to_dict()
        if omit_timing:
            row['wall_ms'] = 0
        rows.append(row)
    return rows


def do_zoo_verify(args, limits):
    if args.char is None:
        raise exceptions.DomainError('--char is required')
    rep = zoo.verify_case(args.case, args.char, args.r, args.d,
                          args.tail_terms, args.seed, limits)
    row = _case_payload([rep], args.omit_timing)[0]
    return ({'case': args.case, 'p': args.char, 'r': args.r, 'd': args.d},
            {'computed': rep.computed, 'expected': rep.expected,
             'match': rep.match},
            [row])


def do_zoo_sweep(args, limits):
    chars = utils.int_list(args.chars)
    if args.min_r > args.max_r:
        raise exceptions.DomainError('--min-r is larger than --max-r')
    reports = zoo.verify_all(chars, range(args.min_r, args.max_r + 1),
                             args.doherty, args.jobs, limits,
                             args.tail_terms, args.seed)
    checked = [rep for rep in reports if rep.excluded is None]
    return ({'chars': chars, 'min_r': args.min_r, 'max_r': args.max_r,
             'doherty': args.doherty},
            {'instances': len(checked),
             'excluded': len(reports) - len(checked),
             'errors': len([rep for rep in checked if rep.error]),
             'all_match': all(rep.match for rep in checked)},
            _case_payload(reports, args.omit_timing))


def _common_parser():
    common = ArgumentParser(add_help=False)
    common.add_argument(
        '--char', dest='char', type=int, default=None,
        help='Characteristic p of the coefficient field')
    common.add_argument(
        '--vars', dest='vars', default=None,
        help='Comma separated variable names')
    common.add_argument(
        '--order', dest='order', default=poly.GREVLEX,
        choices=[poly.LEX, poly.GREVLEX], help='Monomial order')
    common.add_argument(
        '--json', dest='json', action='store_true',
        help='Print the report as JSON')
    common.add_argument(
        '--max-e', dest='max_e', type=int, default=frobenius.DEFAULT_MAX_E,
        help='Highest Frobenius level examined')
    common.add_argument(
        '--stop-on-stable', dest='stop_on_stable', action='store_true',
        help='Stop closure chains once two levels agree')
    common.add_argument(
        '--seed', dest='seed', type=int, default=0,
        help='Seed for generated data')
    common.add_argument(
        '--max-pairs', dest='max_pairs', type=int,
        default=groebner.DEFAULT_MAX_PAIRS,
        help='Critical pair cap for Groebner bases')
    common.add_argument(
        '--max-degree', dest='max_degree', type=int,
        default=groebner.DEFAULT_MAX_DEGREE,
        help='Degree cap for Groebner basis elements')
    common.add_argument(
        '--max-terms', dest='max_terms', type=int,
        default=groebner.DEFAULT_MAX_TERMS,
        help='Term cap for intermediate polynomials')
    common.add_argument(
        '--omit-timing', dest='omit_timing', action='store_true',
        help='Report zero timings so output is byte stable')
    common.add_argument(
        '--debug', dest='debug', action='store_true',
        help="Enable debugging output")
    return common


def build_parser():
    common = _common_parser()
    parser = ArgumentParser(
        prog='fedder',
        description="F-purity and F-injectivity at the origin")
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def add(name, func, help_text, ring=True):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(func=func, needs_ring=ring)
        return sub

    sub = add('fpure', do_fpure, "Fedder's test for S/(f) or S/I")
    sub.add_argument('expression', help='Polynomial, or generators with '
                     '--ideal')
    sub.add_argument('--ideal', action='store_true',
                     help='Treat the expression as generators of I')

    sub = add('fpure-product', do_fpure_product,
              "Fedder's test for a complete intersection")
    sub.add_argument('factors', help='Comma separated factors')

    sub = add('groebner', do_groebner, 'Reduced Groebner basis')
    sub.add_argument('generators')

    sub = add('member', do_member, 'Ideal membership')
    sub.add_argument('element')
    sub.add_argument('generators')

    for name, func, text in (('frobpow', do_frobpow, 'Frobenius power'),
                             ('frobroot', do_frobroot, 'p^e-th root')):
        sub = add(name, func, text)
        sub.add_argument('generators')
        sub.add_argument('--e', dest='e', type=int, default=1,
                         help='Frobenius iterate')

    sub = add('frobclosure', do_frobclosure,
              'Frobenius closure test of J in S/I')
    sub.add_argument('generators', help='Generators of J')
    sub.add_argument('--quotient', default=None,
                     help='Generators of I (default: zero ideal)')

    sub = add('finj-cm', do_finj_cm,
              'F-injectivity through a parameter ideal')
    sub.add_argument('--quotient', default=None,
                     help='Generators of I (default: zero ideal)')
    sub.add_argument('--params', required=True,
                     help='System of parameters')
    sub.add_argument('--no-assume-cm', dest='no_assume_cm',
                     action='store_true',
                     help='Do not assert that S/I is Cohen-Macaulay')

    sub = add('union-check', do_union_check,
              'F-injectivity of a union of two hypersurfaces')
    sub.add_argument('first')
    sub.add_argument('second')

    sub = add('subring', do_subring, 'Present a monomial subring')
    sub.add_argument('images', help='Generators of the subring')
    sub.add_argument('--names', required=True,
                     help='Names for the new variables')

    zoo_parser = commands.add_parser('zoo', help='Catalog of local models')
    zoo_commands = zoo_parser.add_subparsers(dest='zoo_command',
                                             metavar='action')
    zoo_commands.required = True
    sub = zoo_commands.add_parser('list', parents=[common],
                                  help='List the catalog')
    sub.set_defaults(func=do_zoo_list, needs_ring=False)
    sub = zoo_commands.add_parser('verify', parents=[common],
                                  help='Check one instance')
    sub.set_defaults(func=do_zoo_verify, needs_ring=False)
    sub.add_argument('case', choices=[c.case_id for c in zoo.CATALOG])
    sub.add_argument('--r', dest='r', type=int, default=None)
    sub.add_argument('--d', dest='d', type=int, default=None)
    sub.add_argument('--tail-terms', dest='tail_terms', type=int,
                     default=0)
    sub = zoo_commands.add_parser('sweep', parents=[common],
                                  help='Check every admissible instance')
    sub.set_defaults(func=do_zoo_sweep, needs_ring=False)
    sub.add_argument('--chars', default='5,7,11,13')
    sub.add_argument('--min-r', dest='min_r', type=int, default=1)
    sub.add_argument('--max-r', dest='max_r', type=int, default=5)
    sub.add_argument('--doherty', action='store_true',
                     help='Include the multiplicity 32 family')
    sub.add_argument('--jobs', type=int, default=1)
    sub.add_argument('--tail-terms', dest='tail_terms', type=int,
                     default=0)
    return parser


class CommandResult(object):
    """Exit code plus either a report or an error message."""

    def __init__(self, code, report=None, error=None, as_json=False):
        self.code = code
        self.report = report
        self.error = error
        self.as_json = as_json


def run_command(argv):
    """Parse ``argv``, run the command and build its report.

    :return: CommandResult
    """
    try:
        args = build_parser().parse_args(argv)
        if args.debug:
            logging.basicConfig(level=logging.DEBUG)
        else:
            logging.basicConfig(level=logging.WARNING)
        log.debug("Running %s", args.command)
        limits = _limits(args)
        with utils.Timer() as timer:
            if args.needs_ring:
                ring = _ring(args)
                inputs, verdict, certs = args.func(args, ring, limits)
            else:
                ring = None
                inputs, verdict, certs = args.func(args, limits)
        elapsed = 0 if args.omit_timing else timer.elapsed_ms
        name = args.command
        if name == 'zoo':
            name = 'zoo %s' % args.zoo_command
        result = report.build_report(name, inputs, ring, verdict, certs,
                                     elapsed)
        return CommandResult(EXIT_OK, result, as_json=args.json)
    except exceptions.ResourceError as e:
        log.debug("resource diagnostics: %s", e.diagnostics)
        return CommandResult(EXIT_RESOURCE, error=str(e))
    except exceptions.DomainError as e:
        return CommandResult(EXIT_INPUT, error=str(e))
    except exceptions.FedderError as e:
        return CommandResult(EXIT_FAILURE, error=str(e))


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    result = run_command(argv)
    if result.error is not None:
        print('Error: %s' % result.error, file=sys.stderr)
    if result.report is not None:
        if result.as_json:
            print(report.dumps(result.report))
        else:
            print(report.render_text(result.report))
    return result.code


if __name__ == '__main__':
    sys.exit(main())
