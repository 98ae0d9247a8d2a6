"""Reference values transcribed from the published tables (``data/paper_tables.json``)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .polyring import Polynomial

TABLES = ("wgl_c", "wgl_p", "wbar_c", "wbar_p")


@lru_cache(maxsize=None)
def raw_tables() -> dict:
    text = resources.files("glweight").joinpath("data/paper_tables.json").read_text()
    data = json.loads(text)
    if data.get("version") != 1:
        raise ValueError("unsupported golden table version")
    return data


def table(name: str) -> dict:
    """``{n: Polynomial}`` for one of :data:`TABLES`."""
    return {int(n): Polynomial.parse(s) for n, s in raw_tables()[name].items()}


def phi_list() -> dict:
    return {int(k): Polynomial.parse(s) for k, s in raw_tables()["phi"].items()}


def example(name: str) -> Polynomial:
    return Polynomial.parse(raw_tables()["examples"][name])
