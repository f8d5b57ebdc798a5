"""Wire-monoid elements: matchings on 2n pins plus a count of free circles.

Pins are stored 0-based: left pin ``i`` (1-based) is index ``i - 1`` and
right pin ``i'`` is index ``n + i - 1``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

CIRCLE_LIMIT = 2**63 - 1


class DegreeMismatch(ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} vs {right}")
        self.degrees = (left, right)


class ChipParseError(ValueError):
    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"line 1, column {column}: {message} in {text!r}")
        self.column = column


class WireKind(enum.Enum):
    LWIRE = "l"
    RWIRE = "r"
    TWIRE = "t"


@dataclass(frozen=True, order=True)
class Matching:
    """A fixed-point-free involution on the 2n pins of a chip."""

    degree: int
    partner: tuple[int, ...]

    def __post_init__(self):
        n = self.degree
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"degree must be a positive integer, got {n!r}")
        p = self.partner
        if len(p) != 2 * n:
            raise ValueError(f"partner array has length {len(p)}, expected {2 * n}")
        for k, q in enumerate(p):
            if not 0 <= q < 2 * n:
                raise ValueError(f"pin index {q} out of range")
            if q == k:
                raise ValueError(f"pin {pin_label(k, n)} is matched to itself")
            if p[q] != k:
                raise ValueError(f"partner array is not an involution at {pin_label(k, n)}")

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[tuple[int, int]]) -> "Matching":
        """Build from 0-based pin pairs, rejecting duplicated or missing pins."""
        partner = [-1] * (2 * n)
        for block in blocks:
            if len(block) != 2:
                raise ValueError(f"block {block!r} does not have exactly 2 pins")
            a, b = block
            for x in (a, b):
                if not 0 <= x < 2 * n:
                    raise ValueError(f"pin index {x} out of range for degree {n}")
                if partner[x] != -1:
                    raise ValueError(f"pin {pin_label(x, n)} is duplicated")
            if a == b:
                raise ValueError(f"pin {pin_label(a, n)} is duplicated")
            partner[a], partner[b] = b, a
        missing = [pin_label(k, n) for k, q in enumerate(partner) if q == -1]
        if missing:
            raise ValueError(f"pins not covered: {', '.join(missing)}")
        return cls(n, tuple(partner))

    @classmethod
    def _unchecked(cls, n: int, partner: tuple[int, ...]) -> "Matching":
        # for partner arrays that are valid by construction
        m = object.__new__(cls)
        object.__setattr__(m, "degree", n)
        object.__setattr__(m, "partner", partner)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matching":
        return cls(n, tuple(range(n, 2 * n)) + tuple(range(n)))

    def blocks(self) -> list[tuple[int, int]]:
        return [(k, q) for k, q in enumerate(self.partner) if k < q]

    def star(self) -> "Matching":
        n = self.degree
        p = self.partner
        swapped = [q + n if q < n else q - n for q in p]
        return Matching._unchecked(n, tuple(swapped[n:] + swapped[:n]))

    def rotate(self) -> "Matching":
        n = self.degree
        # 180 degree turn: left pin i <-> right pin (n+1-i)'
        last = 2 * n - 1
        return Matching._unchecked(n, tuple(last - q for q in reversed(self.partner)))

    def is_planar(self) -> bool:
        return is_noncrossing(self)


@dataclass(frozen=True, order=True)
class Chip:
    matching: Matching
    circles: int = 0

    def __post_init__(self):
        if not isinstance(self.circles, int) or self.circles < 0:
            raise ValueError(f"circle count must be a non-negative integer, got {self.circles!r}")
        if self.circles > CIRCLE_LIMIT:
            raise OverflowError(f"circle count {self.circles} exceeds the 64-bit bound")

    @property
    def degree(self) -> int:
        return self.matching.degree

    def __mul__(self, other: "Chip") -> "Chip":
        return multiply(self, other)

    def __str__(self) -> str:
        return format_chip(self)


def pin_label(k: int, n: int) -> str:
    return str(k + 1) if k < n else f"{k - n + 1}'"


def new_chip(n: int, blocks: Iterable[tuple[int, int]], d: int = 0) -> Chip:
    """Build a chip from 0-based pin pairs and a circle count."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"degree must be a positive integer, got {n!r}")
    return Chip(Matching.from_blocks(n, blocks), d)


def identity(n: int) -> Chip:
    return Chip(Matching.identity(n), 0)


def circle(n: int) -> Chip:
    return Chip(Matching.identity(n), 1)


def hook(n: int, i: int) -> Chip:
    """The hook h_i: pins i, i+1 joined on each side, all others straight."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"hook index {i} out of range 1..{n - 1}")
    blocks = [(i - 1, i), (n + i - 1, n + i)]
    blocks += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
    return new_chip(n, blocks)


def alpha(n: int) -> Chip:
    """Antidiagonal permutation chip: j joined to (n+1-j)'."""
    return new_chip(n, [(j, 2 * n - 1 - j) for j in range(n)])


def _add_circles(*counts: int) -> int:
    total = sum(counts)
    if total > CIRCLE_LIMIT:
        raise OverflowError(f"circle count {total} exceeds the 64-bit bound")
    return total


def multiply(xi: Chip, eta: Chip) -> Chip:
    """Glue the right pins of ``xi`` to the left pins of ``eta``.

    Paths through the n interface nodes alternate between r-wires of ``xi``
    and l-wires of ``eta``; closed alternating loops become new circles.
    """
    n = xi.degree
    if eta.degree != n:
        raise DegreeMismatch(n, eta.degree)
    p1, p2 = xi.matching.partner, eta.matching.partner
    out = [-1] * (2 * n)
    seen = [False] * n

    def walk(m: int, into_eta: bool) -> int:
        # returns the product pin where the path leaves the interface
        while True:
            seen[m] = True
            if into_eta:
                q = p2[m]
                if q >= n:
                    return q
                m = q
            else:
                q = p1[n + m]
                if q < n:
                    return q
                m = q - n
            into_eta = not into_eta

    for k in range(n):
        if out[k] != -1:
            continue
        q = p1[k]
        end = q if q < n else walk(q - n, True)
        out[k], out[end] = end, k
    for k in range(n, 2 * n):
        if out[k] != -1:
            continue
        q = p2[k]
        end = q if q >= n else walk(q, False)
        out[k], out[end] = end, k

    loops = 0
    for m in range(n):
        if not seen[m]:
            # every remaining interface node sits on a closed loop
            loops += 1
            start, cur, into_eta = m, m, True
            while True:
                seen[cur] = True
                cur = p2[cur] if into_eta else p1[n + cur] - n
                into_eta = not into_eta
                if cur == start and into_eta:
                    break
    return Chip(Matching._unchecked(n, tuple(out)), _add_circles(xi.circles, eta.circles, loops))


def star(xi: Chip) -> Chip:
    return Chip(xi.matching.star(), xi.circles)


def rotate(xi: Chip) -> Chip:
    """Rotation by 180 degrees; agrees with alpha * star(xi) * alpha."""
    return Chip(xi.matching.rotate(), xi.circles)


def boundary_position(k: int, n: int) -> int:
    """Position of pin ``k`` in the cyclic order 1..n, n'..1'."""
    return k if k < n else 3 * n - 1 - k


def is_noncrossing(m: Matching) -> bool:
    n = m.degree
    order = sorted(range(2 * n), key=lambda k: boundary_position(k, n))
    stack: list[int] = []
    for k in order:
        if stack and stack[-1] == m.partner[k]:
            stack.pop()
        else:
            stack.append(k)
    return not stack


def is_planar(xi: Chip) -> bool:
    return is_noncrossing(xi.matching)


def forget(xi: Chip) -> Matching:
    return xi.matching


def wire_kind(m: Matching, block: Sequence[int]) -> WireKind:
    a, b = block
    if not (0 <= a < 2 * m.degree and m.partner[a] == b):
        raise ValueError(f"{block!r} is not a block of the matching")
    n = m.degree
    if a < n and b < n:
        return WireKind.LWIRE
    if a >= n and b >= n:
        return WireKind.RWIRE
    return WireKind.TWIRE


# -- literal grammar:  W<n>:<pin>-<pin>,...;<d>

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<sym>[W:;,\-']))")


def _pin_key(k: int, n: int) -> tuple[int, int]:
    # canonical printing order 1 < 1' < 2 < 2' < ...
    return (k, 0) if k < n else (k - n, 1)


def format_chip(xi: Chip) -> str:
    n = xi.degree
    pairs = [tuple(sorted(b, key=lambda k: _pin_key(k, n))) for b in xi.matching.blocks()]
    pairs.sort(key=lambda b: _pin_key(b[0], n))
    body = ",".join(f"{pin_label(a, n)}-{pin_label(b, n)}" for a, b in pairs)
    return f"W{n}:{body};{xi.circles}"


def parse_chip(text: str) -> Chip:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        mt = _TOKEN.match(stripped, pos)
        if mt is None:
            raise ChipParseError(f"unexpected character {stripped[pos]!r}", text, pos + 1)
        col = mt.start(mt.lastgroup) + 1
        kind = "int" if mt.group("int") is not None else mt.group("sym")
        tokens.append((kind, mt.group(mt.lastgroup), col))
        pos = mt.end()
    tokens.append(("end", "", len(stripped) + 1))
    idx = 0

    def expect(kind: str) -> tuple[str, str, int]:
        nonlocal idx
        tok = tokens[idx]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ChipParseError(f"expected {kind!r}, found {what}", text, tok[2])
        idx += 1
        return tok

    expect("W")
    _, nval, ncol = expect("int")
    n = int(nval)
    if n < 1:
        raise ChipParseError("degree must be positive", text, ncol)
    expect(":")

    def pin() -> tuple[int, int]:
        nonlocal idx
        _, val, col = expect("int")
        label = int(val)
        if not 1 <= label <= n:
            raise ChipParseError(f"pin {label} out of range 1..{n}", text, col)
        if tokens[idx][0] == "'":
            idx += 1
            return n + label - 1, col
        return label - 1, col

    blocks = []
    while True:
        (a, col), _, (b, _) = pin(), expect("-"), pin()
        blocks.append(((a, b), col))
        if tokens[idx][0] == ",":
            idx += 1
            continue
        break
    expect(";")
    _, dval, _ = expect("int")
    expect("end")
    try:
        return new_chip(n, [b for b, _ in blocks], int(dval))
    except ValueError as exc:
        raise ChipParseError(str(exc), text, blocks[0][1]) from None
