# -*- coding: utf-8 -*-

import os
import sys
from importlib import reload

import pytest

import schurrigid


@pytest.fixture
def reloaded(monkeypatch):
    yield monkeypatch
    monkeypatch.undo()
    reload(schurrigid)


def test_the_approval_of_RMS():  # :)
    assert schurrigid.__license__.startswith("GPL")


def test___version__():
    assert schurrigid.__version__


def test_pkgdir(reloaded):
    reloaded.setattr("sys.frozen", False, raising=False)
    reload(schurrigid)
    assert schurrigid.pkgdir == os.path.dirname(
        os.path.realpath(schurrigid.__file__)
    )


def test_frozen_pkgdir(reloaded):
    reloaded.setattr("sys.frozen", True, raising=False)
    reload(schurrigid)
    assert schurrigid.pkgdir == os.path.dirname(
        os.path.realpath(sys.executable)
    )


def test_default_settings():
    assert schurrigid.APP_NAME == "schurrigid"
    assert schurrigid.MAX_GROUP_ORDER == 1000000
    assert schurrigid.JSON_INDENT == 2
    assert schurrigid.CATALOG_FILE == "catalog.yaml"


def test_resource():
    assert os.path.isfile(schurrigid.resource("config.txt"))
    assert os.path.isfile(schurrigid.resource(schurrigid.CATALOG_FILE))


def test_override_settings_via_environment_variables(reloaded):
    reloaded.setenv("SCHURRIGID_APPLICATION_NAME", "TestApp")
    reload(schurrigid)
    assert schurrigid.settings["application"]["name"] == "TestApp"
    assert schurrigid.APP_NAME == "TestApp"


def test_add_settings_via_environment_variables(reloaded):
    reloaded.setenv("SCHURRIGID_TEST_SETTING_X", "123")
    reload(schurrigid)
    assert schurrigid.settings["test"]["setting_x"] == "123"


def test_short_environment_variables_are_ignored(reloaded):
    reloaded.setenv("SCHURRIGID_NAME", "ignored")
    reload(schurrigid)
    assert "name" not in schurrigid.settings


def test_integer_settings(reloaded):
    reloaded.setenv("SCHURRIGID_LIMITS_MAX_GROUP_ORDER", "500")
    reloaded.setenv("SCHURRIGID_OUTPUT_INDENT", "four")
    reload(schurrigid)
    assert schurrigid.MAX_GROUP_ORDER == 500
    assert schurrigid.JSON_INDENT == 2


def test_cache_can_be_disabled(reloaded):
    reloaded.setenv("SCHURRIGID_CACHE_ENABLED", "false")
    reload(schurrigid)
    assert schurrigid.CACHE_ENABLED is False
