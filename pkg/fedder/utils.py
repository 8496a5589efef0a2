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

import time

from fedder import exceptions


def split_list(text):
    """Split a comma separated flag value, dropping empty entries.

    :param text: flag value (eg: "x,y,z" or "5, 7")
    :return: list of stripped entries
    """
    if text is None:
        return []
    return [item.strip() for item in text.split(',') if item.strip()]


def int_list(text):
    try:
        return [int(item) for item in split_list(text)]
    except ValueError:
        raise exceptions.DomainError("Bad integer list %r" % text)


class Timer(object):
    """Context manager measuring wall time in milliseconds."""

    def __init__(self):
        self.start = None
        self.elapsed_ms = 0.0

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *args):
        self.elapsed_ms = (time.perf_counter() - self.start) * 1000.0
