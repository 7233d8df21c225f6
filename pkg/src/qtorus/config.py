"""Session configuration: a flat ``key = value`` text file with exact rationals only.

    # comments start with '#'
    n = 3
    theta[1,2] = 1/3
    theta[2,3] = -1/6
    degree_bound = 2
    conductor = 12          # optional; must be a multiple of the required conductor
    model_M = 12            # optional; defaults to the conductor
    irrep_table = s4.json   # optional; user irreps for S_k blocks with k >= 4

Unlisted theta[i,j] (i<j) are zero; theta[j,i] = -theta[i,j] is implied.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from fractions import Fraction

from .catalog import CATALOG_CONDUCTOR, load_irrep_table
from .errors import ConfigError
from .scalar import conductor_for
from .torus import ThetaMatrix

MAX_N = 8
_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_THETA = re.compile(r"^theta\[\s*(\d+)\s*,\s*(\d+)\s*\]$")


def parse_rational(text: str, where: str = "") -> Fraction:
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ConfigError(f"{where}not an exact rational 'a' or 'a/b': {text!r} (floats are rejected)")
    return Fraction(text)


@dataclass
class SessionConfig:
    n: int
    theta: ThetaMatrix
    degree_bound: int = 2
    conductor_override: int | None = None
    model_M: int | None = None
    irrep_table: str | None = None

    @property
    def conductor(self) -> int:
        """lcm of the theta denominators and the catalog conductor (when S_3 blocks can occur)."""
        need = conductor_for(self.theta, [CATALOG_CONDUCTOR] if self.n >= 3 else [])
        if self.conductor_override is None:
            return need
        if self.conductor_override % need:
            raise ConfigError(f"conductor {self.conductor_override} is not a multiple of the required {need}")
        return self.conductor_override

    @property
    def M(self) -> int:
        return self.model_M if self.model_M is not None else self.conductor

    def user_tables(self):
        if not self.irrep_table:
            return None
        return load_irrep_table(self.irrep_table, self.conductor)

    def as_dict(self) -> dict:
        upper = {f"{i},{j}": str(self.theta(i, j)) for i in range(1, self.n + 1)
                 for j in range(i + 1, self.n + 1) if self.theta(i, j)}
        return {"n": self.n, "theta": upper, "degree_bound": self.degree_bound, "conductor": self.conductor,
                "model_M": self.M, "irrep_table": self.irrep_table}


def parse_config(text: str, base_dir: str = ".") -> SessionConfig:
    vals: dict = {}
    upper: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        where = f"line {lineno}: "
        m = _THETA.match(key)
        if m:
            i, j = int(m.group(1)), int(m.group(2))
            q = parse_rational(value, where)
            if i == j:
                if q:
                    raise ConfigError(f"{where}diagonal theta[{i},{i}] must be 0")
                continue
            a, b, q = (i, j, q) if i < j else (j, i, -q)
            if (a, b) in upper and upper[(a, b)] != q:
                raise ConfigError(f"{where}theta[{i},{j}] conflicts with an earlier entry")
            upper[(a, b)] = q
        elif key in ("n", "degree_bound", "conductor", "model_M"):
            if not re.match(r"^[+-]?\d+$", value):
                raise ConfigError(f"{where}{key} must be an integer, got {value!r}")
            vals[key] = int(value)
        elif key == "irrep_table":
            vals[key] = value if os.path.isabs(value) else os.path.join(base_dir, value)
        else:
            raise ConfigError(f"{where}unknown key {key!r}")
    if "n" not in vals:
        raise ConfigError("missing 'n'")
    n = vals["n"]
    if not 1 <= n <= MAX_N:
        raise ConfigError(f"n must be in 1..{MAX_N}, got {n}")
    for (i, j) in upper:
        if j > n:
            raise ConfigError(f"theta[{i},{j}] out of range for n={n}")
    bound = vals.get("degree_bound", 2)
    if bound < 0:
        raise ConfigError("degree_bound must be non-negative")
    for key in ("conductor", "model_M"):
        if key in vals and vals[key] <= 0:
            raise ConfigError(f"{key} must be positive")
    cfg = SessionConfig(n, ThetaMatrix.from_upper(n, upper), bound, vals.get("conductor"), vals.get("model_M"),
                        vals.get("irrep_table"))
    cfg.conductor  # validate the override early
    return cfg


def load_config(path: str) -> SessionConfig:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    return parse_config(text, os.path.dirname(os.path.abspath(path)))
