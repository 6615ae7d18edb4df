#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Centralized configuration for wreathchar.

This module provides:
- Environment variable loading with defaults (.env at the project root)
- Tagged, thread-safe log lines on stderr
- Group preset loading from presets.yaml
"""

import os
import sys
from pathlib import Path
from threading import Lock
from typing import Any, Dict, Optional

import yaml

PROJECT_ROOT = Path(__file__).parent.parent

# Load .env file if it exists
try:
    from dotenv import load_dotenv
    ENV_PATH = PROJECT_ROOT / ".env"
    if ENV_PATH.exists():
        load_dotenv(ENV_PATH)
except ImportError:
    ENV_PATH = PROJECT_ROOT / ".env"


def env(name: str, default: Optional[str] = None) -> str:
    """Get environment variable with optional default."""
    v = os.environ.get(name)
    if v is None or str(v).strip() == "":
        if default is None:
            return ""
        return default
    return str(v).strip()


def env_int(name: str, default: int) -> int:
    """Integer environment variable; malformed values fall back to the default."""
    raw = env(name)
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        log("WARNING", f"{name}={raw!r} is not an integer, using {default}")
        return default


def env_flag(name: str) -> bool:
    return env(name).lower() in ("1", "true", "yes", "on")


# -------------------------
# Logging
# -------------------------

_print_lock = Lock()


def log(tag: str, message: str) -> None:
    """Print a tagged line to stderr; stdout is reserved for command output."""
    with _print_lock:
        print(f"[{tag}] {message}", file=sys.stderr, flush=True)


def debug(tag: str, message: str) -> None:
    if DEBUG:
        log(tag, message)


# -------------------------
# Settings
# -------------------------

DEBUG = env_flag("WREATHCHAR_DEBUG")
DEFAULT_JOBS = max(1, env_int("WREATHCHAR_JOBS", 1))
DEFAULT_MAX_FAILURES = max(0, env_int("WREATHCHAR_MAX_FAILURES", 32))
CHI_CACHE_LIMIT = max(0, env_int("WREATHCHAR_CHI_CACHE_LIMIT", 0))
PRESETS_PATH = Path(env("WREATHCHAR_PRESETS", str(PROJECT_ROOT / "presets.yaml"))).expanduser()

# JSON output schema version
SCHEMA_VERSION = 1


def load_presets(path: Optional[Path] = None) -> Dict[str, Any]:
    """
    Read the group presets file.

    Returns the mapping under the top-level "groups" key. A missing file
    yields an empty mapping; a malformed one raises ValueError naming the file.
    """
    path = Path(path) if path is not None else PRESETS_PATH
    if not path.exists():
        debug("PRESET", f"No preset file at {path}")
        return {}
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except yaml.YAMLError as e:
        raise ValueError(f"Malformed preset file {path}: {e}") from e
    groups = data.get("groups", {}) if isinstance(data, dict) else None
    if not isinstance(groups, dict):
        raise ValueError(f"Malformed preset file {path}: expected a 'groups' mapping")
    debug("PRESET", f"Loaded {len(groups)} group preset(s) from {path}")
    return groups
