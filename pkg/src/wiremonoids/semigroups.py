"""Finite semigroups given by Cayley tables, and the machinery around them:
closure from generators, ideals, Rees quotients, isomorphism search and the
plain-text table format."""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Optional, Sequence

import numpy as np

DEFAULT_CLOSURE_LIMIT = 100_000


class ClosureLimitExceeded(RuntimeError):
    """The generated semigroup outgrew the limit (it may be infinite)."""


class NotAnIdeal(ValueError):
    pass


@dataclass(frozen=True)
class IdealSpec:
    members: frozenset[int]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(eq=False)
class FiniteSemigroup:
    """Cayley table over element indices ``0..k-1``.

    ``elements`` holds the labels (chips, matchings, strings ...); the
    optional ``involution`` is a unary table.
    """

    elements: tuple
    table: np.ndarray
    involution: Optional[np.ndarray] = None
    identity: Optional[int] = None
    zero: Optional[int] = None
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        self.table = np.asarray(self.table, dtype=np.int64)
        k = len(self.elements)
        if self.table.shape != (k, k):
            raise ValueError(f"table shape {self.table.shape} does not match {k} elements")
        if k and (self.table.min() < 0 or self.table.max() >= k):
            raise ValueError("table entries out of range")
        if self.involution is not None:
            self.involution = np.asarray(self.involution, dtype=np.int64)
            if self.involution.shape != (k,):
                raise ValueError("involution table has the wrong length")
        self._index = {x: i for i, x in enumerate(self.elements)}
        if len(self._index) != k:
            raise ValueError("element labels must be distinct")

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        extra = ", involution" if self.involution is not None else ""
        return f"<FiniteSemigroup of order {len(self)}{extra}>"

    def index(self, label: Hashable) -> int:
        return self._index[label]

    def label(self, i: int):
        return self.elements[i]

    # duck-typed monoid context used by the word evaluator
    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def star(self, x: int) -> int:
        if self.involution is None:
            raise ValueError("this semigroup carries no involution")
        return int(self.involution[x])

    @property
    def one(self) -> Optional[int]:
        return self.identity

    @property
    def has_involution(self) -> bool:
        return self.involution is not None

    def product(self, xs: Iterable[int]) -> int:
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = int(self.table[acc, x])
        return acc

    def is_associative(self) -> bool:
        t = self.table
        # (xy)z vs x(yz) for all triples at once
        return bool(np.array_equal(t[t, :], t[:, t]))

    def is_involution(self) -> bool:
        inv = self.involution
        if inv is None:
            return False
        if not np.array_equal(inv[inv], np.arange(len(self))):
            return False
        # (xy)* == y* x*
        return bool(np.array_equal(inv[self.table], self.table[np.ix_(inv, inv)].T))

    def check(self) -> None:
        """Raise if any structural invariant fails."""
        if not self.is_associative():
            raise ValueError("table is not associative")
        if self.involution is not None and not self.is_involution():
            raise ValueError("unary table is not an involution")
        k = np.arange(len(self))
        if self.identity is not None:
            e = self.identity
            if not (np.array_equal(self.table[e], k) and np.array_equal(self.table[:, e], k)):
                raise ValueError("identity is not neutral")
        if self.zero is not None:
            z = self.zero
            if not (np.all(self.table[z] == z) and np.all(self.table[:, z] == z)):
                raise ValueError("zero is not absorbing")

    def detect_identity(self) -> Optional[int]:
        k = np.arange(len(self))
        for e in range(len(self)):
            if np.array_equal(self.table[e], k) and np.array_equal(self.table[:, e], k):
                return e
        return None

    def detect_zero(self) -> Optional[int]:
        for z in range(len(self)):
            if np.all(self.table[z] == z) and np.all(self.table[:, z] == z):
                return z
        return None

    # -- text format

    def to_text(self) -> str:
        lines = [str(len(self))]
        lines += [" ".join(str(int(v)) for v in row) for row in self.table]
        if self.involution is not None:
            lines.append("inv: " + " ".join(str(int(v)) for v in self.involution))
        if self.identity is not None:
            lines.append(f"one: {self.identity}")
        if self.zero is not None:
            lines.append(f"zero: {self.zero}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FiniteSemigroup":
        rows = [ln.strip() for ln in text.splitlines()]
        rows = [(num, ln) for num, ln in enumerate(rows, 1) if ln and not ln.startswith("#")]
        if not rows:
            raise ValueError("line 1, column 1: empty table file")
        num, head = rows[0]
        try:
            k = int(head)
        except ValueError:
            raise ValueError(f"line {num}, column 1: expected the order k, found {head!r}") from None
        if len(rows) < k + 1:
            raise ValueError(f"line {rows[-1][0]}: expected {k} table rows, found {len(rows) - 1}")
        table = []
        for num, ln in rows[1 : k + 1]:
            try:
                row = [int(v) for v in ln.split()]
            except ValueError:
                raise ValueError(f"line {num}, column 1: non-integer table entry in {ln!r}") from None
            if len(row) != k:
                raise ValueError(f"line {num}: expected {k} entries, found {len(row)}")
            table.append(row)
        extras: dict[str, list[int]] = {}
        for num, ln in rows[k + 1 :]:
            key, sep, rest = ln.partition(":")
            key = key.strip()
            if not sep or key not in ("inv", "one", "zero"):
                raise ValueError(f"line {num}, column 1: unrecognised line {ln!r}")
            try:
                extras[key] = [int(v) for v in rest.split()]
            except ValueError:
                raise ValueError(f"line {num}, column {len(key) + 2}: non-integer in {ln!r}") from None
        one = extras.get("one", [None])[0]
        zero = extras.get("zero", [None])[0]
        S = cls(tuple(range(k)), np.array(table, dtype=np.int64).reshape(k, k),
                extras.get("inv"), one, zero)
        S.check()
        return S

    def relabel(self, labels: Sequence) -> "FiniteSemigroup":
        return FiniteSemigroup(tuple(labels), self.table, self.involution, self.identity, self.zero)


def trivial_monoid() -> FiniteSemigroup:
    return FiniteSemigroup(("1",), np.zeros((1, 1), dtype=np.int64), np.zeros(1, dtype=np.int64), 0, 0)


def closure(
    generators: Sequence[Hashable],
    mul: Callable,
    limit: int = DEFAULT_CLOSURE_LIMIT,
    identity: Hashable = None,
    involution: Optional[Callable] = None,
) -> FiniteSemigroup:
    """Breadth-first closure of ``generators`` under ``mul``.

    Passing ``identity`` makes the result a monoid containing it. Raises
    :class:`ClosureLimitExceeded` once more than ``limit`` elements appear.
    """
    elements: list = []
    index: dict = {}

    def add(x) -> None:
        if x not in index:
            if len(elements) >= limit:
                raise ClosureLimitExceeded(f"more than {limit} elements generated")
            index[x] = len(elements)
            elements.append(x)
            queue.append(x)

    queue: deque = deque()
    if identity is not None:
        add(identity)
    for g in generators:
        add(g)
    gens = list(dict.fromkeys(generators))
    while queue:
        x = queue.popleft()
        for g in gens:
            add(mul(x, g))
    # right multiplication by generators reaches every product; fill the table
    k = len(elements)
    table = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(elements):
        for j, y in enumerate(elements):
            table[i, j] = index[mul(x, y)]
    inv = None
    if involution is not None:
        inv = np.array([index[involution(x)] for x in elements], dtype=np.int64)
    S = FiniteSemigroup(tuple(elements), table, inv)
    S.identity = index[identity] if identity is not None else S.detect_identity()
    S.zero = S.detect_zero()
    return S


def idempotents(S: FiniteSemigroup) -> list[int]:
    k = np.arange(len(S))
    return [int(x) for x in np.nonzero(S.table[k, k] == k)[0]]


def ideal_generated(S: FiniteSemigroup, seed: Iterable[int]) -> IdealSpec:
    """Smallest two-sided ideal containing ``seed``, i.e. S^1 seed S^1."""
    members = set(int(s) for s in seed)
    queue = deque(members)
    while queue:
        x = queue.popleft()
        for y in itertools.chain(S.table[x, :], S.table[:, x]):
            y = int(y)
            if y not in members:
                members.add(y)
                queue.append(y)
    return IdealSpec(frozenset(members))


def is_ideal(S: FiniteSemigroup, members: Iterable[int]) -> bool:
    m = np.zeros(len(S), dtype=bool)
    m[list(members)] = True
    if not m.any():
        return False
    return bool(m[S.table[m, :]].all() and m[S.table[:, m]].all())


ZERO_LABEL = "0"


def rees_quotient(S: FiniteSemigroup, ideal, involution: Optional[bool] = None) -> FiniteSemigroup:
    """Collapse the ideal to a single zero.

    The involution descends when the ideal is closed under it; pass
    ``involution=True`` to insist (an error if it cannot descend) or
    ``False`` to drop it.
    """
    members = set(ideal.members if isinstance(ideal, IdealSpec) else ideal)
    if not is_ideal(S, members):
        raise NotAnIdeal("the given set is not an ideal")
    closed = S.involution is not None and all(int(S.involution[x]) in members for x in members)
    if involution and not closed:
        raise ValueError("the involution does not descend: ideal not closed under it")
    keep_inv = closed if involution is None else involution
    kept = [x for x in range(len(S)) if x not in members]
    new = {x: i for i, x in enumerate(kept)}
    z = len(kept)
    to_new = lambda x: new.get(int(x), z)  # noqa: E731
    k = z + 1
    table = np.full((k, k), z, dtype=np.int64)
    for x in kept:
        for y in kept:
            table[new[x], new[y]] = to_new(S.table[x, y])
    labels = [S.elements[x] for x in kept]
    labels.append(ZERO_LABEL if ZERO_LABEL not in labels else ("zero",))
    inv = None
    if keep_inv:
        inv = np.array([to_new(S.involution[x]) for x in kept] + [z], dtype=np.int64)
    one = new.get(S.identity) if S.identity is not None else None
    return FiniteSemigroup(tuple(labels), table, inv, one, z)


def materialize_quotient(
    representatives: Sequence[Hashable],
    mul: Callable,
    in_ideal: Callable[[Hashable], bool],
    involution: Optional[Callable] = None,
    identity: Hashable = None,
) -> FiniteSemigroup:
    """Rees quotient of a possibly infinite semigroup, given the complement
    of the ideal as ``representatives`` and a membership predicate.

    Every product outside the ideal must be one of the representatives.
    """
    reps = list(representatives)
    index = {x: i for i, x in enumerate(reps)}
    z = len(reps)

    def to_idx(x) -> int:
        if in_ideal(x):
            return z
        try:
            return index[x]
        except KeyError:
            raise ValueError(f"{x!r} lies outside the ideal but is not a representative") from None

    table = np.full((z + 1, z + 1), z, dtype=np.int64)
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            table[i, j] = to_idx(mul(x, y))
    inv = None
    if involution is not None:
        inv = np.array([to_idx(involution(x)) for x in reps] + [z], dtype=np.int64)
    one = index[identity] if identity is not None else None
    return FiniteSemigroup(tuple(reps) + (ZERO_LABEL,), table, inv, one, z)


# -- isomorphism search


def _generating_tree(S: FiniteSemigroup) -> tuple[list[int], dict[int, tuple[int, int]], list[int]]:
    """Greedy generating set, a parent pair (y, g) with x = y * g for every
    non-generator x, and an order in which parents precede children."""
    gens: list[int] = []
    # elements that are not products of others must be generators; try them first
    order = sorted(range(len(S)), key=lambda x: _is_product(S, x))
    reached: list[int] = []
    parent: dict[int, tuple[int, int]] = {}
    for x in order:
        if x in parent or x in gens:
            continue
        gens.append(x)
        reached = list(gens)
        seen = set(gens)
        parent = {}
        i = 0
        while i < len(reached):
            y = reached[i]
            for g in gens:
                w = S.mul(y, g)
                if w not in seen:
                    seen.add(w)
                    parent[w] = (y, g)
                    reached.append(w)
            i += 1
    return gens, parent, reached


def _is_product(S: FiniteSemigroup, x: int) -> bool:
    return bool((S.table == x).any())


def _signature(S: FiniteSemigroup, x: int, one: Optional[int], zero: Optional[int]) -> tuple:
    sq = S.mul(x, x)
    # index and period of the monogenic subsemigroup
    powers = [x]
    while True:
        nxt = S.mul(powers[-1], x)
        if nxt in powers:
            index = powers.index(nxt)
            break
        powers.append(nxt)
    return (
        sq == x,
        x == one,
        x == zero,
        index,
        len(powers) - index,
        int((S.table[x] == x).sum()),
        int((S.table[:, x] == x).sum()),
        None if S.involution is None else int(S.involution[x]) == x,
    )


def is_isomorphic(S: FiniteSemigroup, T: FiniteSemigroup, involution: bool = True) -> Optional[dict[int, int]]:
    """Search for a table-preserving bijection S -> T.

    When both structures carry an involution (and ``involution`` is left
    on) the bijection must also commute with it. Returns ``{s: t}`` or None.
    """
    if len(S) != len(T):
        return None
    use_inv = involution and S.involution is not None and T.involution is not None
    if not use_inv:
        S = FiniteSemigroup(S.elements, S.table, None, S.identity, S.zero)
        T = FiniteSemigroup(T.elements, T.table, None, T.identity, T.zero)
    # identity and zero read off the tables, not the optional fields
    sig_s = [_signature(S, x, S.detect_identity(), S.detect_zero()) for x in range(len(S))]
    sig_t = [_signature(T, x, T.detect_identity(), T.detect_zero()) for x in range(len(T))]
    if sorted(map(repr, sig_s)) != sorted(map(repr, sig_t)):
        return None
    gens, parent, derived = _generating_tree(S)
    candidates = [[t for t in range(len(T)) if sig_t[t] == sig_s[g]] for g in gens]

    def attempt(images: tuple[int, ...]) -> Optional[dict[int, int]]:
        f = dict(zip(gens, images))
        for x in derived:
            if x in f:
                continue
            y, g = parent[x]
            f[x] = T.mul(f[y], f[g])
        if len(set(f.values())) != len(S):
            return None
        fs = np.array([f[x] for x in range(len(S))])
        if not np.array_equal(fs[S.table], T.table[np.ix_(fs, fs)]):
            return None
        if use_inv and not np.array_equal(fs[S.involution], T.involution[fs]):
            return None
        return {x: int(fs[x]) for x in range(len(S))}

    def backtrack(prefix: tuple[int, ...]) -> Optional[dict[int, int]]:
        if len(prefix) == len(gens):
            return attempt(prefix)
        for t in candidates[len(prefix)]:
            if t in prefix:
                continue
            found = backtrack(prefix + (t,))
            if found is not None:
                return found
        return None

    return backtrack(())


def adjoin_identity(S: FiniteSemigroup, label: Hashable = "1") -> FiniteSemigroup:
    """S^1: a new neutral element appended at the end (even if S has one)."""
    k = len(S)
    table = np.empty((k + 1, k + 1), dtype=np.int64)
    table[:k, :k] = S.table
    table[k, :] = np.arange(k + 1)
    table[:, k] = np.arange(k + 1)
    inv = None
    if S.involution is not None:
        inv = np.append(S.involution, k)
    if label in S.elements:
        label = (label, "adjoined")
    return FiniteSemigroup(S.elements + (label,), table, inv, k, S.zero)


def subsemigroup(S: FiniteSemigroup, members: Sequence[int]) -> FiniteSemigroup:
    """Restrict to a subset closed under multiplication (and the involution
    if there is one)."""
    members = list(members)
    pos = {x: i for i, x in enumerate(members)}
    k = len(members)
    table = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(members):
        for j, y in enumerate(members):
            p = S.mul(x, y)
            if p not in pos:
                raise ValueError("subset is not closed under multiplication")
            table[i, j] = pos[p]
    inv = None
    if S.involution is not None:
        try:
            inv = np.array([pos[S.star(x)] for x in members], dtype=np.int64)
        except KeyError:
            raise ValueError("subset is not closed under the involution") from None
    T = FiniteSemigroup(tuple(S.elements[x] for x in members), table, inv)
    T.identity = T.detect_identity()
    T.zero = T.detect_zero()
    return T
