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

"""Expand testscenarios ``scenarios`` lists when collecting with pytest.

pytest does not honour ``load_tests`` or ``WithScenarios.run``, so every
TestCase class carrying a ``scenarios`` list is collected as one class
per scenario with the scenario attributes set on it.
"""

import inspect
import unittest

from _pytest import unittest as pytest_unittest


def pytest_pycollect_makeitem(collector, name, obj):
    if not (inspect.isclass(obj) and issubclass(obj, unittest.TestCase)):
        return None
    scenarios = getattr(obj, 'scenarios', None)
    if not scenarios or not collector.funcnamefilter(name) \
            and not collector.classnamefilter(name):
        return None
    items = []
    for scenario_name, attrs in scenarios:
        cls_name = '%s[%s]' % (name, scenario_name)
        namespace = dict(attrs)
        namespace['scenarios'] = None
        namespace['__module__'] = obj.__module__
        namespace['__qualname__'] = cls_name
        scenario_cls = type(cls_name, (obj,), namespace)
        item = pytest_unittest.UnitTestCase.from_parent(
            collector, name=cls_name)
        item._obj = scenario_cls
        items.append(item)
    return items
