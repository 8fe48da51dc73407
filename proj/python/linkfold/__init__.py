# Copyright 2026 The Linkfold Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS-IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact tools for self-touching linkage configurations."""

import json

from ._linkfold import (
    InputError,
    InternalError,
    annotate,
    cyclic_circumradius,
    delta_bound,
    emit_sa,
    is_nontouching,
    perturb,
    render_svg,
    run_cli,
    strictly_slender,
    validate,
)

__all__ = [
    "InputError",
    "InternalError",
    "annotate",
    "cli",
    "cyclic_circumradius",
    "delta_bound",
    "emit_sa",
    "is_nontouching",
    "perturb",
    "render_svg",
    "run_cli",
    "strictly_slender",
    "validate",
]


def cli(*args, stdin=""):
    """Run a command and decode its JSON report when there is one."""
    code, out, err = run_cli(list(args), stdin)
    try:
        return code, json.loads(out), err
    except ValueError:
        return code, out, err
