"""Brauer, Jones and Kauffman monoids as concrete finite (or truncated)
objects, the fibre increments of the circle-forgetting map, and the chip
embeddings between degrees."""
from __future__ import annotations

import os
import random
from typing import Iterator, Optional

from .chips import (
    Chip,
    DegreeMismatch,
    Matching,
    circle,
    hook,
    identity,
    is_noncrossing,
    is_planar,
    multiply,
    rotate,
    star,
)
from .semigroups import FiniteSemigroup, closure, materialize_quotient

BRAUER_BOUND_ENV = "WIREMONOIDS_MAX_BRAUER"
JONES_BOUND_ENV = "WIREMONOIDS_MAX_JONES"


class BoundExceeded(ValueError):
    pass


def _bound(env: str, default: int) -> int:
    raw = os.environ.get(env)
    return int(raw) if raw else default


def brauer_bound() -> int:
    return _bound(BRAUER_BOUND_ENV, 7)


def jones_bound() -> int:
    return _bound(JONES_BOUND_ENV, 10)


def brauer_multiply(p1: Matching, p2: Matching) -> Matching:
    """Compose two Brauer diagrams, discarding closed loops.

    Connectivity only, via union-find on the glued 4n pins; deliberately
    independent of the path tracer in :func:`multiply`.
    """
    n = p1.degree
    if p2.degree != n:
        raise DegreeMismatch(n, p2.degree)
    # pins 0..2n-1 belong to p1, 2n..4n-1 to p2
    parent = list(range(4 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    for k, q in enumerate(p1.partner):
        union(k, q)
    for k, q in enumerate(p2.partner):
        union(2 * n + k, 2 * n + q)
    for m in range(n):
        union(n + m, 2 * n + m)
    outer = list(range(n)) + list(range(3 * n, 4 * n))
    ends: dict[int, list[int]] = {}
    for pos, pin in enumerate(outer):
        ends.setdefault(find(pin), []).append(pos)
    partner = [0] * (2 * n)
    for a, b in ends.values():
        partner[a], partner[b] = b, a
    return Matching(n, tuple(partner))


def _pairings(items: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for j, other in enumerate(rest):
        for tail in _pairings(rest[:j] + rest[j + 1 :]):
            yield [(first, other)] + tail


def _from_pairs(n: int, pairs) -> Matching:
    partner = [0] * (2 * n)
    for a, b in pairs:
        partner[a], partner[b] = b, a
    return Matching(n, tuple(partner))


def enumerate_brauer(n: int, bound: Optional[int] = None) -> list[Matching]:
    """All perfect matchings on 2n pins, sorted by partner array."""
    bound = brauer_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the Brauer enumeration bound {bound}")
    return sorted(_from_pairs(n, p) for p in _pairings(list(range(2 * n))))


def _noncrossing(positions: list[int]) -> Iterator[list[tuple[int, int]]]:
    # the first position pairs with one at odd offset; the gap inside is closed
    if not positions:
        yield []
        return
    first = positions[0]
    for j in range(1, len(positions), 2):
        for inner in _noncrossing(positions[1:j]):
            for outer in _noncrossing(positions[j + 1 :]):
                yield [(first, positions[j])] + inner + outer


def enumerate_jones(n: int, bound: Optional[int] = None) -> list[Matching]:
    """All planar matchings of degree n (Catalan many), sorted."""
    bound = jones_bound() if bound is None else bound
    if n > bound:
        raise BoundExceeded(f"degree {n} exceeds the Jones enumeration bound {bound}")
    # boundary order 1..n, n'..1'
    pins = list(range(n)) + list(range(2 * n - 1, n - 1, -1))
    return sorted(_from_pairs(n, p) for p in _noncrossing(pins))


def brauer_monoid(n: int, involution: str = "star") -> FiniteSemigroup:
    elements = enumerate_brauer(n)
    return _matching_monoid(elements, involution)


def jones_monoid(n: int, involution: str = "star") -> FiniteSemigroup:
    """J_n as the closure of the hook images under Brauer multiplication."""
    gens = [hook(n, i).matching for i in range(1, n)]
    inv = Matching.star if involution == "star" else Matching.rotate
    return closure(gens, brauer_multiply, identity=Matching.identity(n), involution=inv)


def _matching_monoid(elements: list[Matching], involution: str) -> FiniteSemigroup:
    import numpy as np

    index = {m: i for i, m in enumerate(elements)}
    k = len(elements)
    table = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[brauer_multiply(x, y)]
    inv = Matching.star if involution == "star" else Matching.rotate
    S = FiniteSemigroup(tuple(elements), table, [index[inv(m)] for m in elements])
    S.identity = index[Matching.identity(elements[0].degree)]
    S.zero = S.detect_zero()
    return S


def random_chip(n: int, rng: random.Random, max_circles: int = 3) -> Chip:
    pins = list(range(2 * n))
    rng.shuffle(pins)
    blocks = [(pins[2 * j], pins[2 * j + 1]) for j in range(n)]
    return Chip(Matching.from_blocks(n, blocks), rng.randint(0, max_circles))


def fiber_increment(pi: Matching) -> int:
    """The m in (pi;0)(pi;0) = (pi;m) for a Brauer idempotent pi."""
    sq = multiply(Chip(pi), Chip(pi))
    if sq.matching != pi:
        raise ValueError("matching is not idempotent in the Brauer monoid")
    return sq.circles


def kauffman_ideal_c_member(xi: Chip) -> bool:
    """Membership in the ideal of K_n generated by the circle."""
    if not is_planar(xi):
        raise ValueError("chip is not planar, so not in the Kauffman monoid")
    return xi.circles >= 1


class ChipMonoid:
    """W_n (or its planar part K_n) as a context for word evaluation."""

    def __init__(self, n: int, involution: Optional[str] = "star"):
        if involution not in (None, "star", "rotate"):
            raise ValueError(f"unknown involution {involution!r}")
        self.degree = n
        self.involution = involution
        self.one = identity(n)

    def mul(self, x: Chip, y: Chip) -> Chip:
        return multiply(x, y)

    def star(self, x: Chip) -> Chip:
        if self.involution is None:
            raise ValueError("no involution chosen for this chip monoid")
        return star(x) if self.involution == "star" else rotate(x)

    @property
    def has_involution(self) -> bool:
        return self.involution is not None

    def generators(self) -> list[Chip]:
        return [circle(self.degree)] + [hook(self.degree, i) for i in range(1, self.degree)]

    def __repr__(self) -> str:
        return f"ChipMonoid({self.degree}, involution={self.involution!r})"


def k3_representatives() -> list[Chip]:
    """The circle-free part of K_3: 1, h1, h2, h1h2, h2h1."""
    h1, h2 = hook(3, 1), hook(3, 2)
    return [identity(3), h1, h2, multiply(h1, h2), multiply(h2, h1)]


K3_LABELS = ("1", "h1", "h2", "h1h2", "h2h1")


def k3_quotient(involution: Optional[str] = "star") -> FiniteSemigroup:
    """K_3/C as a 6-element semigroup with labels 1, h1, h2, h1h2, h2h1, 0."""
    reps = k3_representatives()
    inv = None
    if involution == "star":
        inv = star
    elif involution == "rotate":
        inv = rotate
    Q = materialize_quotient(reps, multiply, kauffman_ideal_c_member, inv, identity(3))
    return Q.relabel(K3_LABELS + ("0",))


# -- embeddings


def embed_pad(xi: Chip, top: int, bottom: int) -> Chip:
    """Add ``top`` straight wires above pin 1 and ``bottom`` below pin n."""
    if top < 0 or bottom < 0:
        raise ValueError("padding must be non-negative")
    n = xi.degree
    N = n + top + bottom

    def move(k: int) -> int:
        return k + top if k < n else N + (k - n) + top

    partner = [0] * (2 * N)
    for j in list(range(top)) + list(range(top + n, N)):
        partner[j], partner[N + j] = N + j, j
    for k, q in enumerate(xi.matching.partner):
        partner[move(k)] = move(q)
    return Chip(Matching(N, tuple(partner)), xi.circles)


def embed_double(xi: Chip) -> Chip:
    """Stack two copies of the chip: pins 1..n and n+1..2n."""
    n = xi.degree
    N = 2 * n

    def move(k: int, shift: int) -> int:
        return k + shift if k < n else N + (k - n) + shift

    partner = [0] * (2 * N)
    for shift in (0, n):
        for k, q in enumerate(xi.matching.partner):
            partner[move(k, shift)] = move(q, shift)
    return Chip(Matching(N, tuple(partner)), 2 * xi.circles)


def embed_insert_middle(xi: Chip) -> Chip:
    """Insert a straight wire at position n+1 of a chip of degree 2n."""
    if xi.degree % 2:
        raise ValueError(f"middle insertion needs an even degree, got {xi.degree}")
    half = xi.degree // 2
    m = xi.degree
    N = m + 1

    def move(k: int) -> int:
        side, j = (0, k) if k < m else (N, k - m)
        return side + (j if j < half else j + 1)

    partner = [0] * (2 * N)
    partner[half], partner[N + half] = N + half, half
    for k, q in enumerate(xi.matching.partner):
        partner[move(k)] = move(q)
    return Chip(Matching(N, tuple(partner)), xi.circles)


def embed_canonical(xi: Chip) -> Chip:
    """K_n into W_n: the planar chip itself."""
    if not is_planar(xi):
        raise ValueError("chip is not planar")
    return xi


def is_planar_matching(m: Matching) -> bool:
    return is_noncrossing(m)
