# -*- coding: utf-8 -*-

import os

from schurrigid.config import Config


def test_config_set(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_set.ini"))
    config.set("limits", "max_group_order", "100")
    with open(config.filename) as f:
        assert f.read() == "[limits]\nmax_group_order = 100\n\n"


def test_config_get(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_get.ini"))
    with open(config.filename, "w") as f:
        f.write("[output]\nindent = 4\n\n")
    assert config.get("output", "indent") == "4"


def test_config_get_no_section_error(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_get_no_section.ini"))
    with open(config.filename, "w") as f:
        f.write("[output]\nindent = 4\n\n")
    assert config.get("cache", "indent") is None


def test_config_get_no_option_error(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_get_no_option.ini"))
    with open(config.filename, "w") as f:
        f.write("[output]\nindent = 4\n\n")
    assert config.get("output", "width") is None


def test_config_get_missing_file(tmpdir):
    config = Config(os.path.join(str(tmpdir), "missing.ini"))
    assert config.get("output", "indent") is None
    assert config.load() == {}


def test_config_get_int(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_get_int.ini"))
    with open(config.filename, "w") as f:
        f.write("[output]\nindent = 4\nwidth =\n\n")
    assert config.get_int("output", "indent", 2) == 4
    assert config.get_int("output", "width", 80) == 80
    assert config.get_int("output", "missing", 7) == 7


def test_config_save(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_save.ini"))
    config.save({"cache": {"enabled": "false"}})
    with open(config.filename) as f:
        assert f.read() == "[cache]\nenabled = false\n\n"


def test_config_save_keeps_other_sections(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_save_merge.ini"))
    config.save({"cache": {"enabled": "false"}})
    config.save({"output": {"indent": "4"}})
    assert config.load() == {
        "cache": {"enabled": "false"},
        "output": {"indent": "4"},
    }


def test_config_load(tmpdir):
    config = Config(os.path.join(str(tmpdir), "test_load.ini"))
    with open(config.filename, "w") as f:
        f.write("[catalog]\nfile = catalog.yaml\n\n")
    assert config.load() == {"catalog": {"file": "catalog.yaml"}}
