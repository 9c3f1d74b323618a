"""Cap loading: defaults, config files, environment, precedence."""

import pytest

from gramcalc import config
from gramcalc.errors import BoundExceeded, GramcalcError


def test_defaults():
    caps = config.Caps()
    assert caps.permutations == 9
    assert caps.cops == 8
    assert caps.signed == 5
    assert caps.matchings == 7
    assert caps.derive == 100
    assert caps.verify == 10


def test_check_passes_at_cap_and_fails_above():
    config.check("permutations", 9)
    with pytest.raises(BoundExceeded) as info:
        config.check("permutations", 10)
    assert info.value.cap == 9
    assert "GRAMCALC_CAP_PERMUTATIONS=10" in str(info.value)


def test_load_caps_from_file(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("# comment\npermutations = 11\n\nderive=7 # inline\n")
    caps = config.load_caps(str(path), environ={})
    assert caps.permutations == 11
    assert caps.derive == 7
    assert caps.cops == 8


def test_environment_beats_file(tmp_path):
    path = tmp_path / "caps.cfg"
    path.write_text("permutations = 11\n")
    caps = config.load_caps(
        str(path), environ={"GRAMCALC_CAP_PERMUTATIONS": "4"}
    )
    assert caps.permutations == 4


def test_load_caps_rejects_bad_input(tmp_path):
    bad_lines = ["what is this", "nope = 3", "derive = x", "derive = -1"]
    for line in bad_lines:
        path = tmp_path / "caps.cfg"
        path.write_text(line + "\n")
        with pytest.raises(GramcalcError):
            config.load_caps(str(path), environ={})
    with pytest.raises(GramcalcError):
        config.load_caps(None, environ={"GRAMCALC_CAP_DERIVE": "ten"})


def test_set_and_reset():
    config.set_caps(config.Caps(cops=3))
    with pytest.raises(BoundExceeded):
        config.check("cops", 4)
    config.reset_caps()
    config.check("cops", 4)
