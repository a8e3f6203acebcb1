"""JSON job configuration for the command-line front end.

Schema::

    {
      "group": {"type": "cyclic", "order": 3},
      "tuple": [0, 1, 2],
      "units": {"blocks": [2, 1]}            # or {"pairs": [[1, 2], ...]}
      "coefficients": "rational",            # or {"mod": p}
      "degree_universe": [0, 1, 2],          # optional
      "tensor": {                            # optional
        "H": {"type": "cyclic", "order": 2},
        "bicharacter": "grassmann",          # or {"m": .., "beta": [[..]]} or a file name
        "truncation": 4
      }
    }

Table-group elements may be written by name, product elements as lists.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Any

from .errors import GradedPIError
from .grading import GradedSubalgebra, block_triangular_units, close_units, induce_grading
from .groups import Group, GroupElement, make_group
from .scalars import coefficient_ring
from .tensor.bicharacter import Bicharacter, grassmann_bicharacter, make_bicharacter


class ConfigError(GradedPIError):
    pass


@dataclass
class TensorSection:
    beta: Bicharacter
    truncation: int | None = None


@dataclass
class JobConfig:
    algebra: GradedSubalgebra
    modulus: int | None = None
    degree_universe: list | None = None
    tensor: TensorSection | None = None
    source: dict | None = None

    @property
    def group(self) -> Group:
        return self.algebra.group


def element_from_json(G: Group, x: Any) -> GroupElement:
    if G.kind == "table" and isinstance(x, str):
        if x not in G.names:
            raise ConfigError(f"{x!r} is not an element of {G}")
        return G.element(G.names.index(x))
    if G.kind == "product" and isinstance(x, (list, tuple)):
        if len(x) != len(G.factors):
            raise ConfigError(f"{x!r} does not have {len(G.factors)} components")
        return G.element(tuple(element_from_json(f, y).value for f, y in zip(G.factors, x)))
    return G.element(x)


def _units(desc, n):
    if not isinstance(desc, dict) or len(desc) != 1:
        raise ConfigError("'units' must be {\"blocks\": [...]} or {\"pairs\": [...]}")
    if "blocks" in desc:
        units = block_triangular_units(list(desc["blocks"]))
        if units.n != n:
            raise ConfigError(f"blocks sum to {units.n} but the tuple has length {n}")
        return units
    if "pairs" in desc:
        return close_units([tuple(p) for p in desc["pairs"]], n)
    raise ConfigError(f"unknown unit specification {sorted(desc)}")


def _bicharacter(desc, H, base_dir):
    if desc == "grassmann":
        beta = grassmann_bicharacter()
        if H is not None and H != beta.group:
            raise ConfigError("the Grassmann bicharacter lives on Z_2")
        return beta
    if isinstance(desc, str):
        path = desc if os.path.isabs(desc) else os.path.join(base_dir, desc)
        desc = _read_json(path)
        if "H" in desc:
            H = make_group(desc["H"])
    if not isinstance(desc, dict) or "m" not in desc or "beta" not in desc:
        raise ConfigError("bicharacter must be \"grassmann\" or an object with 'm' and 'beta'")
    if H is None:
        raise ConfigError("tensor section needs 'H' for a non-Grassmann bicharacter")
    return make_bicharacter(H, int(desc["m"]), desc["beta"])


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def config_from_dict(data: dict, base_dir: str = ".", modulus: int | None = None) -> JobConfig:
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    for key in ("group", "tuple", "units"):
        if key not in data:
            raise ConfigError(f"missing required key {key!r}")
    G = make_group(data["group"])
    tuple_ = [element_from_json(G, x) for x in data["tuple"]]
    B = induce_grading(G, tuple_, _units(data["units"], len(tuple_)))

    coeffs = data.get("coefficients", "rational")
    file_mod = None
    if isinstance(coeffs, dict) and "mod" in coeffs:
        file_mod = int(coeffs["mod"])
    elif coeffs != "rational":
        raise ConfigError("'coefficients' must be \"rational\" or {\"mod\": p}")
    mod = modulus if modulus is not None else file_mod
    if mod is not None:
        try:
            coefficient_ring(mod)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    universe = None
    if data.get("degree_universe") is not None:
        universe = [element_from_json(G, x) for x in data["degree_universe"]]

    tensor = None
    if data.get("tensor") is not None:
        t = data["tensor"]
        H = make_group(t["H"]) if "H" in t else None
        beta = _bicharacter(t.get("bicharacter", "grassmann"), H, base_dir)
        trunc = t.get("truncation")
        tensor = TensorSection(beta, None if trunc is None else int(trunc))
        if mod is not None:
            raise ConfigError("prime-modulus coefficients are not supported with a tensor section (characteristic 0 only)")
    return JobConfig(B, mod, universe, tensor, data)


def load_config(path: str, modulus: int | None = None) -> JobConfig:
    data = _read_json(path)
    return config_from_dict(data, os.path.dirname(os.path.abspath(path)), modulus)


def parse_universe(text: str, G: Group) -> list[GroupElement]:
    """A comma-separated degree list, e.g. ``0,1,2`` or ``(0,1),(1,0)``."""
    try:
        data = json.loads("[" + text.replace("(", "[").replace(")", "]") + "]")
    except json.JSONDecodeError:
        data = [s.strip() for s in text.split(",") if s.strip()]
    return [element_from_json(G, x) for x in data]


def fixture_path(name: str) -> str:
    return os.path.join(os.path.dirname(__file__), "fixtures", name)


__all__ = [
    "ConfigError",
    "JobConfig",
    "TensorSection",
    "config_from_dict",
    "element_from_json",
    "fixture_path",
    "load_config",
    "parse_universe",
]
