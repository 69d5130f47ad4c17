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

import math

import pytest

import compss


def test_version():
    assert compss.__version__ == "0.1.0"


def test_carpet_counts_and_measure():
    assert compss.component_count("sierpinski-carpet", 3) == 73
    assert len(compss.components("sierpinski-carpet", 3)) == 73
    m = compss.measure("sierpinski-carpet", 3)
    assert m["area_estimate"] == pytest.approx((8 / 9) ** 3, abs=1e-12)
    assert m["perimeter_sum"] == pytest.approx(0.8 * ((8 / 3) ** 3 - 1), abs=1e-9)


def test_separation():
    assert compss.separation_constant("sierpinski-carpet", 2) == pytest.approx(math.sqrt(2), abs=1e-9)
    assert compss.separation_constant("sierpinski-gasket", 2) is None


def test_shape_and_paths():
    square = [(0, 0), (1, 0), (1, 1), (0, 1)]
    s = compss.shape_metrics(square)
    assert s["diameter"] == pytest.approx(math.sqrt(2))
    assert s["roundness"] == pytest.approx(1 / (2 * math.sqrt(2)))
    assert compss.path_constant(square, 64) == pytest.approx(2.0, abs=1e-6)
    assert compss.winding_number(square, (0.5, 0.5)) == 1
    assert compss.winding_number(square, (2.0, 0.5)) == 0


def test_classify():
    labels, unbounded = compss.classify(
        "sierpinski-carpet", 2, 243.0, [(0.5, 0.5), (0.5, 0.55), (1 / 6, 1 / 6), (-1.0, -1.0)]
    )
    assert labels[0] == labels[1]
    assert labels[0] != labels[2]
    assert labels[3] == unbounded
    with pytest.raises(compss.DomainError):
        compss.classify("sierpinski-carpet", 2, 243.0, [(0.05, 0.05)])


def test_analyze_report():
    report = compss.analyze('preset = "sierpinski-carpet"\ndepth = 2\nresolution = 81\n')
    assert [d["depth"] for d in report["depths"]] == [1, 2]
    assert report["depths"][-1]["component_count"] == 9
    assert report["topology"]["label_count"] == 10


def test_config_error():
    with pytest.raises(compss.ConfigError):
        compss.analyze("depth = 0\n")
