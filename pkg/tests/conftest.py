# -*- coding: utf-8 -*-

import pytest

from schurrigid import cache
from schurrigid.schubert import clear_tables


@pytest.fixture(autouse=True)
def no_disk_cache(monkeypatch):
    monkeypatch.setattr("schurrigid.cache._directory", None)
    yield
    clear_tables()


@pytest.fixture
def cache_dir(tmpdir):
    clear_tables()
    cache.configure(str(tmpdir))
    return str(tmpdir)


@pytest.fixture
def points_file(tmpdir):
    def write(text):
        path = tmpdir.join("points.json")
        path.write(text)
        return str(path)

    return write
