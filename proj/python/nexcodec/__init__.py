# Copyright 2026 The nexcodec Authors
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

"""Learned image codec with a channel-wise context model."""

import json

from ._nexcodec import (
    Codec,
    NxcError,
    bd_rate,
    psnr,
    read_header,
    synthetic_images,
)
from . import _nexcodec as _native

__all__ = [
    "Codec",
    "NxcError",
    "bd_rate",
    "param_count",
    "preset",
    "psnr",
    "read_header",
    "synthetic_images",
    "train",
]


def preset(name):
    """Model config of a named preset ("toy" or "full") as a dict."""
    return json.loads(_native.preset_json(name))


def param_count(config):
    """Parameter count of a model config given as a preset name or dict."""
    if isinstance(config, str):
        config = preset(config)
    return _native.param_count(json.dumps(config))


def train(job, out_dir, on_step=None):
    """Runs a training job dict (same schema as configs/*.json).

    Returns the per-step metrics as a list of dicts.
    """
    return _native.train(json.dumps(job), out_dir, on_step)
