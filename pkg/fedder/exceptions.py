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


class FedderError(Exception):
    """Base class for everything fedder raises on purpose."""


class DomainError(FedderError, ValueError):
    """An input violates the precondition of an operation."""


class CharacteristicMismatch(DomainError):
    pass


class FieldDivisionError(DomainError, ZeroDivisionError):
    pass


class ParseError(DomainError):
    """Malformed expression text.

    :param message: what went wrong
    :param offset: byte offset into the source text
    :param source: the text being parsed
    """

    def __init__(self, message, offset, source=None):
        self.reason = message
        self.offset = offset
        self.source = source
        super(ParseError, self).__init__(
            '%s (at offset %d)' % (message, offset))


class ResourceError(FedderError):
    """A computation hit one of the configured caps.

    ``diagnostics`` records the state reached when it gave up, so a
    caller can decide whether raising the cap is worthwhile.
    """

    def __init__(self, message, diagnostics=None):
        self.diagnostics = dict(diagnostics or {})
        super(ResourceError, self).__init__(message)
