"""Universal gl weight system of permutations via the swap recursion.

For neighbouring positions ``k, k+1`` the commutator of their matrix units
gives

    w(sigma) = w(t sigma t) + s1 * w(tau1) + s2 * w(tau2),    t = (k k+1),

where ``tau1``/``tau2`` live on ``m - 1`` elements (``k`` and ``k+1`` merged)
and the scalars are ``+1, -1`` generically, ``+N`` when ``sigma(k) = k+1`` and
``-N`` when ``sigma(k+1) = k``.  A merged vertex that becomes a fixed point
contributes a factor ``C1``.

A fixed-point-free indecomposable block is driven towards its normal form (a
concatenation of standard ascending cycles) by a bubble-sort word of
adjacent transpositions; every merge term strictly shrinks ``m``.
"""

from __future__ import annotations

import base64
import json
import os
from dataclasses import dataclass
from typing import Literal

from .diagrams import (
    Images,
    Permutation,
    canonical_images,
    conjugate_adjacent,
    cycles,
    decode_key,
    encode_images,
    is_indecomposable,
    split_images,
    strip_images,
)
from .polyring import NVAR, ONE, C, Polynomial

CACHE_FORMAT = "glweight-wgl-cache"
CACHE_VERSION = 1

_N = Polynomial.var(NVAR)
_C1 = Polynomial.var(C(1))


@dataclass(frozen=True)
class SwapOutcome:
    swapped: Permutation
    merge_terms: tuple  # ((Polynomial, Permutation), ...)


def _swap_images(images: Images, k: int) -> tuple:
    """Return ``(t sigma t, [(scalar, tau), ...])`` on raw image tuples."""
    m = len(images)
    sk, sk1 = images[k - 1], images[k]

    def relabel(x):
        return x if x <= k else x - 1

    def merged(overrides, merged_target):
        new = [0] * (m - 1)
        for p in range(1, m + 1):
            if p == k or p == k + 1:
                continue
            new[relabel(p) - 1] = relabel(overrides.get(p, images[p - 1]))
        new[k - 1] = relabel(merged_target)
        return new

    terms = []
    # E_{i_k i_sk} E_{i_k+1 i_sk1} - (swapped) = delta(i_sk, i_k+1) E_{i_k i_sk1} - ...
    if sk == k + 1:
        scalar, tau = _N, merged({}, sk1)
    else:
        a = images.index(k + 1) + 1
        scalar, tau = ONE, merged({a: sk}, sk1)
    terms.append((scalar, tau))
    # ... - delta(i_sk1, i_k) E_{i_k+1 i_sk}
    if sk1 == k:
        scalar, tau = -_N, merged({}, sk)
    else:
        b = images.index(k) + 1
        scalar, tau = -ONE, merged({b: sk1}, sk)
    terms.append((scalar, tau))

    out = []
    for scalar, tau in terms:
        if tau[k - 1] == k:
            # merged vertex closed into a loop: sum over its index is C1
            del tau[k - 1]
            tau = [x if x < k else x - 1 for x in tau]
            scalar = scalar * _C1
        out.append((scalar, tuple(tau)))
    return conjugate_adjacent(images, k), out


def swap_step(p: Permutation, k: int) -> SwapOutcome:
    m = len(p)
    if not 1 <= k < m:
        raise ValueError(f"swap position {k} out of range 1..{m - 1}")
    if p(k) == k or p(k + 1) == k + 1:
        raise ValueError(f"fixed point at position {k} or {k + 1}; strip fixed points first")
    swapped, terms = _swap_images(p.images, k)
    return SwapOutcome(Permutation(swapped), tuple((s, Permutation(t)) for s, t in terms))


def normal_form_ranks(images: Images) -> list:
    """Target position of each element: cycles by minimum, laid out as standard cycles."""
    ranks = [0] * len(images)
    pos = 1
    for cyc in cycles(images):
        for j, x in enumerate(cyc):
            ranks[x - 1] = pos + j
        pos += len(cyc)
    return ranks


def conjugator_word(images: Images, strategy: str = "left") -> list:
    """Adjacent transpositions (positions k) carrying ``images`` to its normal form."""
    r = normal_form_ranks(images)
    m = len(r)
    word = []
    positions = range(1, m) if strategy == "left" else range(m - 1, 0, -1)
    changed = True
    while changed:
        changed = False
        for k in positions:
            if r[k - 1] > r[k]:
                r[k - 1], r[k] = r[k], r[k - 1]
                word.append(k)
                changed = True
    return word


def is_standard_cycle(images: Images) -> bool:
    m = len(images)
    return m > 0 and images[m - 1] == 1 and all(images[i] == i + 2 for i in range(m - 1))


class MemoCache:
    """Map from block keys to weight-system values.

    Keys are rotation-canonical by default.  Inserts are idempotent: a key
    always maps to the same polynomial, so concurrent writers cannot conflict.
    """

    def __init__(self, rotation_keys: bool = True):
        self.rotation_keys = rotation_keys
        self._data: dict = {}

    def key(self, images: Images) -> bytes:
        if self.rotation_keys:
            images = canonical_images(images)
        return encode_images(images)

    def get(self, images: Images):
        return self._data.get(self.key(images))

    def put(self, images: Images, value: Polynomial) -> None:
        self._data.setdefault(self.key(images), value)

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, images) -> bool:
        return self.key(images) in self._data

    def items(self):
        return self._data.items()

    def save(self, path: str | os.PathLike) -> None:
        header = {"format": CACHE_FORMAT, "version": CACHE_VERSION,
                  "keys": "rotation" if self.rotation_keys else "plain"}
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            fh.write(json.dumps(header) + "\n")
            for key in sorted(self._data):
                rec = {"key": base64.b64encode(key).decode("ascii"),
                       "value": self._data[key].to_json_obj()}
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> MemoCache:
        with open(path) as fh:
            lines = fh.read().splitlines()
        if not lines:
            raise ValueError(f"{path}: empty cache file")
        header = json.loads(lines[0])
        if header.get("format") != CACHE_FORMAT or header.get("version") != CACHE_VERSION:
            raise ValueError(f"{path}: unsupported cache header {header}")
        if header.get("keys") not in ("rotation", "plain"):
            raise ValueError(f"{path}: unknown key scheme {header.get('keys')!r}")
        cache = cls(rotation_keys=header["keys"] == "rotation")
        for lineno, line in enumerate(lines[1:], 2):
            if not line.strip():
                continue
            rec = json.loads(line)
            key = base64.b64decode(rec["key"])
            images = decode_key(key)
            if cache.key(images) != key:
                raise ValueError(f"{path}:{lineno}: key is not in canonical form")
            value = Polynomial.from_json_obj(rec["value"])
            if any(not (g.kind == 0 or g.is_casimir) for g in value.generators()):
                raise ValueError(f"{path}:{lineno}: value uses generators other than N, C_k")
            if not value.is_integral():
                raise ValueError(f"{path}:{lineno}: value has non-integral coefficients")
            cache._data[key] = value
        return cache


@dataclass(frozen=True)
class EngineConfig:
    strategy: Literal["left", "right"] = "left"
    # stop walking the conjugator word once the current permutation splits or is cached
    early_stop: bool = True


class WeightSystem:
    """Evaluator of ``w_GL`` sharing one memo cache across calls."""

    def __init__(self, cache: MemoCache | None = None, config: EngineConfig | None = None):
        self.cache = cache if cache is not None else MemoCache()
        self.config = config or EngineConfig()

    def __call__(self, p: Permutation | Images) -> Polynomial:
        images = p.images if isinstance(p, Permutation) else tuple(p)
        return self.value(images)

    def value(self, images: Images) -> Polynomial:
        fixed, reduced = strip_images(images)
        result = _C1 ** fixed if fixed else ONE
        for block in split_images(reduced):
            result = result * self._block(block)
        return result

    def _block(self, images: Images) -> Polynomial:
        if is_standard_cycle(images):
            return Polynomial.var(C(len(images)))
        cached = self.cache.get(images)
        if cached is not None:
            return cached
        early = self.config.early_stop
        total = None
        cur = images
        for k in conjugator_word(images, self.config.strategy):
            cur, terms = _swap_images(cur, k)
            for scalar, tau in terms:
                assert len(tau) < len(images)
                part = scalar * self.value(tau)
                total = part if total is None else total + part
            if early and (not is_indecomposable(cur) or cur in self.cache):
                break
        rest = self.value(cur)
        total = rest if total is None else total + rest
        self.cache.put(images, total)
        return total


_default = WeightSystem()


def wgl(p: Permutation | Images, cache: MemoCache | None = None,
        config: EngineConfig | None = None) -> Polynomial:
    """Universal polynomial ``w_GL(p)`` in ``N, C1, C2, ...``."""
    if cache is None and config is None:
        return _default(p)
    return WeightSystem(cache, config)(p)


def wsl(p: Permutation | Images, cache: MemoCache | None = None) -> Polynomial:
    """``w_SL`` values: ``w_GL`` with ``C1 = 0``."""
    return wgl(p, cache).substitute({C(1): 0})
