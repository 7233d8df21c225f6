from __future__ import annotations

from fractions import Fraction

import pytest

from qtorus.config import load_config, parse_config, parse_rational
from qtorus.errors import ConfigError


def test_parse_full():
    cfg = parse_config("""
        # reference desk
        n = 3
        theta[1,2] = 1/3
        theta[3,1] = -1/4     # stored as theta[1,3] = 1/4
        theta[2,3] = -1/6
        degree_bound = 1
        model_M = 24
    """)
    assert cfg.n == 3 and cfg.degree_bound == 1
    assert cfg.theta(1, 3) == Fraction(1, 4) and cfg.theta(3, 1) == Fraction(-1, 4)
    assert cfg.conductor == 12 and cfg.M == 24
    assert cfg.as_dict()["theta"] == {"1,2": "1/3", "1,3": "1/4", "2,3": "-1/6"}


def test_defaults_and_catalog_conductor():
    cfg = parse_config("n = 3\n")
    assert cfg.conductor == 3 and cfg.M == 3 and cfg.degree_bound == 2
    assert parse_config("n = 2\ntheta[1,2] = 1/2").conductor == 2


@pytest.mark.parametrize("text", [
    "theta[1,2] = 1/3",                      # missing n
    "n = 2\ntheta[1,2] = 0.5",               # float
    "n = 2\ntheta[1,3] = 1/3",               # out of range
    "n = 2\ntheta[1,1] = 1/3",               # diagonal
    "n = 2\ntheta[1,2] = 1/3\ntheta[2,1] = 1/3",  # inconsistent
    "n = 9",
    "n = 2\nconductor = 4\ntheta[1,2] = 1/3",  # not a multiple
    "n = 2\nfoo = 1",
    "n = 2\nmodel_M = 0",
    "n = two",
    "n = 2\njust words",
])
def test_rejections(text):
    with pytest.raises(ConfigError):
        parse_config(text)


def test_rationals():
    assert parse_rational(" -3/6 ") == Fraction(-1, 2)
    with pytest.raises(ConfigError):
        parse_rational("1e-3")


def test_load(tmp_path):
    p = tmp_path / "c.txt"
    p.write_text("n = 2\ntheta[1,2] = 1/3\nirrep_table = t.json\n")
    cfg = load_config(str(p))
    assert cfg.irrep_table == str(tmp_path / "t.json")
    with pytest.raises(ConfigError):
        load_config(str(tmp_path / "missing.txt"))
