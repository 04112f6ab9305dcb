"""Exact Schubert-variety combinatorics and Schur rigidity classification."""

import os
import sys

from schurrigid.config import Config
from schurrigid.util import to_bool

__author__ = "schurrigid developers"
__url__ = "https://github.com/schurrigid/schurrigid"
__license__ = "GPLv3"
__version__ = "0.4.0"


if getattr(sys, "frozen", False):
    pkgdir = os.path.dirname(os.path.realpath(sys.executable))
else:
    pkgdir = os.path.dirname(os.path.realpath(__file__))


settings = Config(os.path.join(pkgdir, "resources", "config.txt")).load()


for envvar, value in os.environ.items():
    if envvar.startswith("SCHURRIGID_"):
        words = envvar.split("_")
        if len(words) >= 3:
            section = words[1].lower()
            option = "_".join(words[2:]).lower()
            try:
                settings[section][option] = value
            except KeyError:
                settings[section] = {option: value}

try:
    APP_NAME = settings["application"]["name"]
except KeyError:
    APP_NAME = "schurrigid"


def _int_setting(section: str, option: str, default: int) -> int:
    value = settings.get(section, {}).get(option) or ""
    try:
        return int(value)
    except ValueError:
        return default


MAX_GROUP_ORDER = _int_setting("limits", "max_group_order", 1000000)
JSON_INDENT = _int_setting("output", "indent", 2)
CACHE_DIRECTORY = settings.get("cache", {}).get("directory") or ""
CACHE_ENABLED = to_bool(
    settings.get("cache", {}).get("enabled") or "true"
)
CATALOG_FILE = settings.get("catalog", {}).get("file") or "catalog.yaml"


def resource(filename: str) -> str:
    return os.path.join(pkgdir, "resources", filename)
