# -*- coding: utf-8 -*-
"""On-disk cache of Bruhat tables, one ``.npz`` archive per marked diagram."""
from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Dict, Optional

import numpy as np
from atomicwrites import atomic_write

from schurrigid import CACHE_DIRECTORY, CACHE_ENABLED
from schurrigid.config import Config

FORMAT_VERSION = 2

_directory: Optional[str] = CACHE_DIRECTORY if CACHE_ENABLED else None


def configure(directory: Optional[str]) -> None:
    global _directory  # pylint: disable=global-statement
    _directory = directory or None


def directory() -> Optional[str]:
    return _directory


def filename(type_name: str, k: int) -> str:
    return f"bruhat-v{FORMAT_VERSION}-{type_name}-{k}.npz"


def manifest() -> Optional[Config]:
    if not _directory:
        return None
    return Config(os.path.join(_directory, "manifest.ini"))


def load(type_name: str, k: int) -> Optional[Dict[str, np.ndarray]]:
    if not _directory:
        return None
    path = Path(_directory, filename(type_name, k))
    if not path.exists():
        return None
    try:
        with np.load(path, allow_pickle=False) as archive:
            arrays = {key: archive[key] for key in archive.files}
    except (OSError, ValueError) as e:
        logging.warning("Ignoring unreadable cache file %s: %s", path, e)
        return None
    if int(arrays.get("version", np.array(-1))) != FORMAT_VERSION:
        logging.warning("Ignoring stale cache file %s", path)
        return None
    logging.debug("Loaded Bruhat table for %s:%i from %s", type_name, k, path)
    return arrays


def store(type_name: str, k: int, arrays: Dict[str, np.ndarray]) -> None:
    if not _directory:
        return
    os.makedirs(_directory, exist_ok=True)
    path = os.path.join(_directory, filename(type_name, k))
    try:
        with atomic_write(path, mode="wb", overwrite=True) as f:
            np.savez(f, version=np.array(FORMAT_VERSION), **arrays)
    except OSError as e:
        logging.warning("Could not write cache file %s: %s", path, e)
        return
    config = manifest()
    if config:
        config.save(
            {
                filename(type_name, k): {
                    "type": type_name,
                    "marked": str(k),
                    "elements": str(len(arrays.get("perms", []))),
                }
            }
        )
    logging.debug("Stored Bruhat table for %s:%i in %s", type_name, k, path)
