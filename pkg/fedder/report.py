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

"""Machine readable reports.

Every command produces one report; ``--json`` prints it, otherwise a
short text summary is printed.  The schema is versioned separately from
the tool so stored reports stay comparable across releases.
"""

import json
import logging

from pbr import version
import voluptuous as v

from fedder import exceptions

log = logging.getLogger("fedder.report")

SCHEMA_VERSION = 1

RING_SCHEMA = v.Schema({
    v.Required('char'): v.All(int, v.Range(min=2)),
    v.Required('vars'): [str],
    v.Required('order'): str,
})

REPORT_SCHEMA = v.Schema({
    v.Required('schema_version'): SCHEMA_VERSION,
    v.Required('tool_version'): str,
    v.Required('command'): str,
    v.Required('inputs'): dict,
    v.Required('ring'): v.Any(None, RING_SCHEMA),
    v.Required('verdict'): dict,
    v.Required('certificates'): [dict],
    v.Required('timing_ms'): v.All(v.Any(int, float), v.Range(min=0)),
})


def tool_version():
    try:
        return version.VersionInfo('fedder').version_string()
    except Exception:
        log.debug("no package metadata for fedder")
        return 'unknown'


def build_report(command, inputs, ring, verdict, certificates=(),
                 timing_ms=0.0):
    """Assemble and validate a report.

    :param ring: PolyRing the command worked in, or None
    :param verdict: dict describing the outcome
    :param certificates: dicts carrying whatever re-checks the verdict
    """
    report = {
        'schema_version': SCHEMA_VERSION,
        'tool_version': tool_version(),
        'command': command,
        'inputs': dict(inputs),
        'ring': None if ring is None else ring.describe(),
        'verdict': verdict,
        'certificates': list(certificates),
        'timing_ms': round(timing_ms, 3),
    }
    return validate(report)


def validate(report):
    try:
        return REPORT_SCHEMA(report)
    except v.Invalid as e:
        raise exceptions.FedderError('report does not match schema '
                                     'version %d: %s' % (SCHEMA_VERSION, e))


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2)


def _flatten(prefix, value, lines):
    if isinstance(value, dict):
        for key in sorted(value):
            _flatten('%s.%s' % (prefix, key) if prefix else key,
                     value[key], lines)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, item in enumerate(value):
            _flatten('%s[%d]' % (prefix, i), item, lines)
    else:
        lines.append('%s: %s' % (prefix, value))


def render_text(report):
    """A plain ``key: value`` listing of the verdict."""
    lines = ['%s (%s)' % (report['command'], report['tool_version'])]
    if report['ring'] is not None:
        ring = report['ring']
        lines.append('ring: F_%d[%s] %s' % (ring['char'],
                                            ','.join(ring['vars']),
                                            ring['order']))
    _flatten('', report['verdict'], lines)
    return '\n'.join(lines)
