"""Permutations and chord diagrams, 1-based throughout.

A permutation of ``{1..m}`` is stored as its image sequence, ``images[i-1] =
sigma(i)``.  The elements sit left to right on an oriented line (the Wilson
loop cut at a base point) and each ``i`` carries the matrix unit
``E_{i, sigma(i)}``.  A chord diagram with ``n`` chords is a fixed-point-free
involution of ``{1..2n}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Images = tuple  # tuple[int, ...], 1-based


def _check_images(images: Sequence[int]) -> None:
    m = len(images)
    if sorted(images) != list(range(1, m + 1)):
        raise ValueError(f"{list(images)} is not a permutation of 1..{m}")


@dataclass(frozen=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        _check_images(imgs)
        object.__setattr__(self, "images", imgs)

    def __len__(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"

    @classmethod
    def identity(cls, m: int) -> Permutation:
        return cls(tuple(range(1, m + 1)))

    def inverse(self) -> Permutation:
        return Permutation(inverse(self.images))

    def cycles(self) -> list:
        return cycles(self.images)

    def cycle_type(self) -> tuple:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def is_involution_without_fixed_points(self) -> bool:
        return all(self(self(i)) == i and self(i) != i for i in range(1, len(self) + 1))


def inverse(images: Images) -> Images:
    inv = [0] * len(images)
    for i, s in enumerate(images, 1):
        inv[s - 1] = i
    return tuple(inv)


def cycles(images: Images) -> list:
    """Cycles in order of their minimal element, each starting at that minimum."""
    seen = set()
    out = []
    for start in range(1, len(images) + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        x = images[start - 1]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = images[x - 1]
        out.append(cyc)
    return out


def concat(*perms: Images) -> Images:
    out = []
    shift = 0
    for p in perms:
        out.extend(x + shift for x in p)
        shift += len(p)
    return tuple(out)


def conjugate_adjacent(images: Images, k: int) -> Images:
    """``t sigma t`` for the transposition ``t = (k k+1)``."""
    def t(x):
        return k + 1 if x == k else k if x == k + 1 else x

    out = list(images)
    out[k - 1], out[k] = t(images[k]), t(images[k - 1])
    for i in range(len(out)):
        if i != k - 1 and i != k:
            out[i] = t(out[i])
    return tuple(out)


def rotate(images: Images, s: int = 1) -> Images:
    """``r^s sigma r^-s`` with ``r = (1 2 ... m)``."""
    m = len(images)
    if m == 0:
        return images
    return tuple((images[(i - s) % m] - 1 + s) % m + 1 for i in range(m))


# -- constructors ----------------------------------------------------------


def perm_from_cycles(cycle_list: Iterable[Sequence[int]], m: int) -> Permutation:
    images = list(range(1, m + 1))
    seen = set()
    for cyc in cycle_list:
        for x in cyc:
            if not 1 <= x <= m:
                raise ValueError(f"element {x} out of range 1..{m}")
            if x in seen:
                raise ValueError(f"element {x} repeated in cycles")
            seen.add(x)
        for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
            images[a - 1] = b
    return Permutation(tuple(images))


@dataclass(frozen=True, order=True)
class ChordDiagram:
    """Chords as a sorted tuple of sorted pairs covering ``1..2n``."""

    pairs: tuple

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in self.pairs))
        ends = [x for p in pairs for x in p]
        if sorted(ends) != list(range(1, len(ends) + 1)):
            raise ValueError(f"chords {pairs} do not pair up 1..{len(ends)}")
        if any(a == b for a, b in pairs):
            raise ValueError("a chord must join two distinct points")
        object.__setattr__(self, "pairs", pairs)

    @property
    def n(self) -> int:
        return len(self.pairs)

    def __str__(self) -> str:
        return ",".join(f"{a}-{b}" for a, b in self.pairs) or "()"


EMPTY_DIAGRAM = ChordDiagram(())


def chord_to_perm(d: ChordDiagram) -> Permutation:
    images = [0] * (2 * d.n)
    for a, b in d.pairs:
        images[a - 1] = b
        images[b - 1] = a
    return Permutation(tuple(images))


def perm_to_chord(p: Permutation) -> ChordDiagram:
    if not p.is_involution_without_fixed_points():
        raise ValueError(f"{p} is not a fixed-point-free involution")
    return ChordDiagram(tuple((i, p(i)) for i in range(1, len(p) + 1) if i < p(i)))


def make_kn(n: int) -> ChordDiagram:
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return ChordDiagram(tuple((i, n + i) for i in range(1, n + 1)))


# -- canonical key ---------------------------------------------------------


def canonical_images(images: Images) -> Images:
    """Lexicographically least image sequence among all rotation conjugates."""
    m = len(images)
    best = images
    for s in range(1, m):
        cand = tuple((images[(i - s) % m] - 1 + s) % m + 1 for i in range(m))
        if cand < best:
            best = cand
    return best


def encode_images(images: Images) -> bytes:
    if len(images) > 255:
        raise ValueError("keys are limited to permutations of at most 255 elements")
    return bytes((len(images), *images))


def decode_key(key: bytes) -> Images:
    if not key or key[0] != len(key) - 1:
        raise ValueError("malformed canonical key")
    images = tuple(key[1:])
    _check_images(images)
    return images


def canonical_key(p: Permutation | Images) -> bytes:
    images = p.images if isinstance(p, Permutation) else tuple(p)
    return encode_images(canonical_images(images))


# -- decompositions --------------------------------------------------------


def split_images(images: Images) -> list:
    blocks = []
    start = 0
    reach = 0
    for i, s in enumerate(images, 1):
        reach = max(reach, s)
        if reach == i:
            blocks.append(tuple(x - start for x in images[start:i]))
            start = i
    return blocks


def split_blocks(p: Permutation) -> list:
    return [Permutation(b) for b in split_images(p.images)]


def is_indecomposable(images: Images) -> bool:
    reach = 0
    m = len(images)
    for i, s in enumerate(images, 1):
        if s > reach:
            reach = s
        if reach == i and i < m:
            return False
    return True


def strip_images(images: Images) -> tuple:
    keep = [i for i, s in enumerate(images, 1) if s != i]
    if len(keep) == len(images):
        return 0, images
    relabel = {old: new for new, old in enumerate(keep, 1)}
    return len(images) - len(keep), tuple(relabel[images[i - 1]] for i in keep)


def strip_fixed_points(p: Permutation) -> tuple:
    count, reduced = strip_images(p.images)
    return count, Permutation(reduced)


# -- text formats ----------------------------------------------------------


class InputParseError(ValueError):
    pass


def parse_permutation(text: str) -> Permutation:
    """``(1 3 2)(4 5)`` cycle notation or ``[3,1,2]`` image notation."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise InputParseError(f"unterminated image list {s!r}")
        body = s[1:-1].strip()
        items = [t.strip() for t in body.split(",")] if body else []
        for t in items:
            if not t.isdigit():
                raise InputParseError(f"bad image entry {t!r}")
        try:
            return Permutation(tuple(int(t) for t in items))
        except ValueError as exc:
            raise InputParseError(str(exc)) from None
    if s in ("", "()"):
        return Permutation(())
    cycle_list = []
    for m in re.finditer(r"\(([^()]*)\)|(\S)", s):
        if m.group(2) is not None:
            raise InputParseError(f"unexpected token {m.group(2)!r} in cycle notation")
        toks = m.group(1).replace(",", " ").split()
        for t in toks:
            if not t.isdigit():
                raise InputParseError(f"bad cycle entry {t!r}")
        cycle_list.append([int(t) for t in toks])
    elems = [x for c in cycle_list for x in c]
    if any(x < 1 for x in elems):
        raise InputParseError("cycle entries must be positive")
    m_size = max(elems, default=0)
    try:
        return perm_from_cycles(cycle_list, m_size)
    except ValueError as exc:
        raise InputParseError(str(exc)) from None


def parse_chord_diagram(text: str) -> ChordDiagram:
    """``1-3,2-4`` chord list or the ``K5`` shorthand."""
    s = text.strip()
    m = re.fullmatch(r"K_?(\d+)", s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise InputParseError(f"bad diagram {s!r}: K_n needs n >= 1")
        return make_kn(n)
    pairs = []
    for tok in filter(None, (t.strip() for t in s.split(","))):
        pm = re.fullmatch(r"(\d+)\s*-\s*(\d+)", tok)
        if pm is None:
            raise InputParseError(f"bad chord {tok!r}")
        pairs.append((int(pm.group(1)), int(pm.group(2))))
    try:
        return ChordDiagram(tuple(pairs))
    except ValueError as exc:
        raise InputParseError(str(exc)) from None
