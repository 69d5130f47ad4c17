# Copyright 2026 The compss Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Metric constants and complement topology for self-similar carpets."""

import json

from ._core import (
    BoundsError,
    ConfigError,
    DomainError,
    Error,
    IoError,
    NumericalError,
    ResourceError,
    __version__,
    analyze_text,
    classify,
    component_count,
    components,
    measure,
    path_constant,
    separation_constant,
    shape_metrics,
    winding_number,
)


def analyze(config_text):
    """Runs an analysis and returns the report as a dict."""
    return json.loads(analyze_text(config_text))


def analyze_file(path):
    with open(path, encoding="utf-8") as fh:
        return analyze(fh.read())


__all__ = [
    "BoundsError",
    "ConfigError",
    "DomainError",
    "Error",
    "IoError",
    "NumericalError",
    "ResourceError",
    "__version__",
    "analyze",
    "analyze_file",
    "analyze_text",
    "classify",
    "component_count",
    "components",
    "measure",
    "path_constant",
    "separation_constant",
    "shape_metrics",
    "winding_number",
]
