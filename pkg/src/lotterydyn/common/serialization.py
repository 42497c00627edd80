#
# SPDX-FileCopyrightText: Copyright (c) 2025 provide.io llc. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#

"""JSON and msgpack persistence for run summaries."""

import json
from pathlib import Path
from typing import Any

import msgpack

from .exceptions import OutputError

SUPPORTED_SUFFIXES = (".json", ".msgpack", ".mpk")


def dump_document(data: dict[str, Any], filepath: Path) -> None:
    """Writes `data` as JSON or msgpack, chosen by the file suffix."""
    suffix = filepath.suffix.lower()
    if suffix not in SUPPORTED_SUFFIXES:
        raise OutputError(f"Unsupported output suffix '{suffix}', expected one of {SUPPORTED_SUFFIXES}")
    try:
        filepath.parent.mkdir(parents=True, exist_ok=True)
        if suffix == ".json":
            filepath.write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        else:
            filepath.write_bytes(msgpack.packb(data, use_bin_type=True))
    except (OSError, TypeError, ValueError) as e:
        raise OutputError(f"Error writing {filepath}: {e}") from e


def load_document(filepath: Path) -> dict[str, Any]:
    """Reads a document written by `dump_document`."""
    suffix = filepath.suffix.lower()
    try:
        if suffix == ".json":
            data = json.loads(filepath.read_text(encoding="utf-8"))
        elif suffix in SUPPORTED_SUFFIXES:
            data = msgpack.unpackb(filepath.read_bytes(), raw=False, use_list=True)
        else:
            raise OutputError(f"Unsupported input suffix '{suffix}'")
    except OSError as e:
        raise OutputError(f"Error reading {filepath}: {e}") from e
    except (json.JSONDecodeError, msgpack.UnpackException, ValueError) as e:
        raise OutputError(f"Error decoding {filepath}: {e}") from e
    if not isinstance(data, dict):
        raise OutputError(f"Expected a mapping in {filepath}, found {type(data).__name__}")
    return data


# 🎟️🎲🔚
