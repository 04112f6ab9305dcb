# -*- coding: utf-8 -*-
from __future__ import annotations

from collections import defaultdict
from configparser import NoOptionError, NoSectionError, RawConfigParser
from typing import Dict, Optional

from atomicwrites import atomic_write

Settings = Dict[str, Dict[str, str]]


class Config:
    """INI-backed settings; every write replaces the file atomically."""

    def __init__(self, filename: str) -> None:
        self.filename = filename

    def _read(self) -> RawConfigParser:
        parser = RawConfigParser(allow_no_value=True)
        parser.read(self.filename, encoding="utf-8")
        return parser

    def _write(self, parser: RawConfigParser) -> None:
        with atomic_write(self.filename, mode="w", overwrite=True) as f:
            parser.write(f)

    def set(self, section: str, option: str, value: str) -> None:
        self.save({section: {option: value}})

    def get(self, section: str, option: str) -> Optional[str]:
        try:
            return self._read().get(section, option)
        except (NoOptionError, NoSectionError):
            return None

    def get_int(self, section: str, option: str, default: int) -> int:
        value = self.get(section, option)
        if value is None or not value.strip():
            return default
        return int(value)

    def save(self, settings: Settings) -> None:
        parser = self._read()
        for section, options in settings.items():
            if not parser.has_section(section):
                parser.add_section(section)
            for option, value in options.items():
                parser.set(section, option, value)
        self._write(parser)

    def load(self) -> Settings:
        parser = self._read()
        settings: defaultdict = defaultdict(dict)
        for section in parser.sections():
            for option, value in parser.items(section):
                settings[section][option] = value
        return dict(settings)
