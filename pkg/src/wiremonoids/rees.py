"""Rees matrix semigroups M^0(I, G, Lambda; P) over finitely generated
abelian groups, plus the small named semigroups B_2^1, A_2 and TSL."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Optional, Sequence

import numpy as np

from .semigroups import FiniteSemigroup, materialize_quotient


@dataclass(frozen=True)
class AbelianGroup:
    """Z_{k_1} x ... x Z_{k_m} x Z^r; elements are integer tuples, residues first."""

    orders: tuple[int, ...] = ()
    rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(int(k) for k in self.orders))
        if any(k < 1 for k in self.orders) or self.rank < 0:
            raise ValueError("cyclic orders must be >= 1 and the rank non-negative")

    @property
    def dim(self) -> int:
        return len(self.orders) + self.rank

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def element(self, coords: Sequence[int]) -> tuple[int, ...]:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"group element needs {self.dim} coordinates, got {len(coords)}")
        m = len(self.orders)
        return tuple(c % k for c, k in zip(coords[:m], self.orders)) + coords[m:]

    def add(self, g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
        return self.element([a + b for a, b in zip(g, h)])

    def scale(self, g: tuple[int, ...], n: int) -> tuple[int, ...]:
        return self.element([n * a for a in g])

    def order(self, g: tuple[int, ...]):
        """Element order; ``math.inf`` when a free coordinate is nonzero."""
        m = len(self.orders)
        if any(g[m:]):
            return math.inf
        return math.lcm(1, *(k // math.gcd(k, a) for k, a in zip(self.orders, g[:m])))

    def elements(self) -> Iterator[tuple[int, ...]]:
        if not self.is_finite:
            raise ValueError("cannot enumerate an infinite group")
        return itertools.product(*(range(k) for k in self.orders))

    def __str__(self) -> str:
        parts = [f"Z{k}" for k in self.orders] + ["Z"] * self.rank
        return "x".join(parts) if parts else "E"


TRIVIAL_GROUP = AbelianGroup()


def parse_group(text: str) -> AbelianGroup:
    """``E`` (trivial), or factors like ``Z4xZ6xZ`` / ``Z^2`` joined by ``x``."""
    text = text.replace(" ", "")
    if text in ("E", "1", ""):
        return TRIVIAL_GROUP
    orders, rank = [], 0
    col = 1
    for part in text.split("x"):
        mt = re.fullmatch(r"Z(\d+)?(?:\^(\d+))?", part)
        if mt is None:
            raise ValueError(f"line 1, column {col}: bad group factor {part!r}")
        times = int(mt.group(2) or 1)
        if mt.group(1) is None:
            rank += times
        else:
            orders += [int(mt.group(1))] * times
        col += len(part) + 1
    return AbelianGroup(tuple(orders), rank)


class _Symbol:
    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return self.name


ZERO = _Symbol("ZERO")
ONE = _Symbol("ONE")


class Triple(NamedTuple):
    i: int
    g: tuple
    lam: int


@dataclass(frozen=True)
class SandwichMatrix:
    """Rows indexed by Lambda, columns by I; ``None`` is the zero symbol."""

    rows: tuple[tuple[Optional[tuple[int, ...]], ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("sandwich matrix needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("sandwich matrix rows have different lengths")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, key: tuple[int, int]):
        lam, i = key
        return self.rows[lam][i]

    def is_symmetric(self) -> bool:
        return self.n_rows == self.n_cols and all(
            self.rows[a][b] == self.rows[b][a] for a in range(self.n_rows) for b in range(self.n_cols)
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "SandwichMatrix":
        return SandwichMatrix(tuple(tuple(self.rows[r][c] for c in cols) for r in rows))


def parse_matrix(text: str, group: AbelianGroup) -> SandwichMatrix:
    """Rows split by ``;``, entries by ``,``: ``0``, ``e`` or ``(a1,..|b1,..)``."""
    rows: list[list] = [[]]
    pos = 0
    m = len(group.orders)
    s = text
    while pos < len(s):
        ch = s[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch == "0":
            rows[-1].append(None)
            pos += 1
        elif ch == "e":
            rows[-1].append(group.identity)
            pos += 1
        elif ch == "(":
            end = s.find(")", pos)
            if end < 0:
                raise ValueError(f"line 1, column {pos + 1}: unclosed '('")
            finite, bar, free = s[pos + 1 : end].partition("|")
            try:
                a = [int(x) for x in finite.split(",") if x.strip()]
                b = [int(x) for x in free.split(",") if x.strip()]
            except ValueError:
                raise ValueError(f"line 1, column {pos + 2}: non-integer coordinate") from None
            if not bar and group.rank and not group.orders:
                a, b = [], a
            elif m == 0 and a == [0]:
                # "(0|1)" over Z: a lone 0 stands for the empty residue part
                a = []
            if len(a) != m or len(b) != group.rank:
                raise ValueError(
                    f"line 1, column {pos + 1}: element needs {m} residues and {group.rank} free coordinates"
                )
            rows[-1].append(group.element(a + b))
            pos = end + 1
        else:
            raise ValueError(f"line 1, column {pos + 1}: unexpected {ch!r}")
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos < len(s):
            if s[pos] == ",":
                pos += 1
            elif s[pos] == ";":
                rows.append([])
                pos += 1
            else:
                raise ValueError(f"line 1, column {pos + 1}: expected ',' or ';', found {s[pos]!r}")
    try:
        return SandwichMatrix(tuple(tuple(r) for r in rows))
    except ValueError as exc:
        raise ValueError(f"line 1, column 1: {exc}") from None


class ReesMatrixSemigroup:
    """M^0(I, G, Lambda; P), optionally with an adjoined identity ``ONE``."""

    def __init__(self, group: AbelianGroup, matrix: SandwichMatrix, with_identity: bool = False):
        self.group = group
        self.matrix = matrix
        self.with_identity = with_identity
        for row in matrix.rows:
            for entry in row:
                if entry is not None and len(entry) != group.dim:
                    raise ValueError("sandwich entry does not belong to the group")

    @property
    def index_sets(self) -> tuple[range, range]:
        return range(self.matrix.n_cols), range(self.matrix.n_rows)

    def triple(self, i: int, g: Sequence[int], lam: int) -> Triple:
        I, L = self.index_sets
        if i not in I or lam not in L:
            raise IndexError(f"index out of range: ({i}, {lam})")
        return Triple(i, self.group.element(g), lam)

    def mul(self, a, b):
        return rm_multiply(a, b, self.matrix, self.group)

    @property
    def one(self):
        return ONE if self.with_identity else None

    @property
    def is_symmetric_square(self) -> bool:
        return self.matrix.is_symmetric()

    @property
    def has_involution(self) -> bool:
        return self.is_symmetric_square

    def star(self, a):
        if not self.is_symmetric_square:
            raise ValueError("involution needs I = Lambda and a symmetric sandwich matrix")
        return rm_involution(a)

    def elements(self) -> list:
        I, L = self.index_sets
        out: list = [ONE] if self.with_identity else []
        out += [Triple(i, g, lam) for i in I for g in self.group.elements() for lam in L]
        out.append(ZERO)
        return out

    def to_finite(self, labels: Optional[Sequence] = None) -> FiniteSemigroup:
        elems = self.elements()
        index = {x: k for k, x in enumerate(elems)}
        k = len(elems)
        table = np.empty((k, k), dtype=np.int64)
        for a, x in enumerate(elems):
            for b, y in enumerate(elems):
                table[a, b] = index[self.mul(x, y)]
        inv = [index[rm_involution(x)] for x in elems] if self.is_symmetric_square else None
        S = FiniteSemigroup(tuple(labels) if labels else tuple(elems), table, inv)
        S.identity = index[ONE] if self.with_identity else None
        S.zero = index[ZERO]
        return S


def rm_multiply(a, b, P: SandwichMatrix, G: AbelianGroup):
    if a is ONE:
        return b
    if b is ONE:
        return a
    if a is ZERO or b is ZERO:
        return ZERO
    i, g, lam = a
    j, h, mu = b
    for idx, size in ((i, P.n_cols), (j, P.n_cols), (lam, P.n_rows), (mu, P.n_rows)):
        if not 0 <= idx < size:
            raise IndexError(f"index {idx} out of range")
    p = P[lam, j]
    if p is None:
        return ZERO
    return Triple(i, G.add(G.add(g, p), h), mu)


def rm_involution(a):
    """(i, g, j)* = (j, g, i); fixes 0 and 1."""
    if a is ZERO or a is ONE:
        return a
    i, g, j = a
    return Triple(j, g, i)


def adjoin_identity_rm(S: ReesMatrixSemigroup) -> ReesMatrixSemigroup:
    return ReesMatrixSemigroup(S.group, S.matrix, with_identity=True)


# -- named small semigroups

B21_LABELS = ("1", "a", "b", "ab", "ba", "0")


def brandt_b21() -> FiniteSemigroup:
    """The 6-element Brandt monoid, built from 2x2 matrix units.

    a = E12, b = E21, ab = E11, ba = E22. The involution fixes a and b and
    swaps ab with ba.
    """
    E = np.zeros((2, 2), dtype=int)
    units = {
        "1": np.eye(2, dtype=int),
        "a": np.array([[0, 1], [0, 0]]),
        "b": np.array([[0, 0], [1, 0]]),
        "ab": np.array([[1, 0], [0, 0]]),
        "ba": np.array([[0, 0], [0, 1]]),
        "0": E,
    }
    key = {tuple(v.ravel()): k for k, v in units.items()}
    index = {k: i for i, k in enumerate(B21_LABELS)}
    table = np.empty((6, 6), dtype=np.int64)
    for x in B21_LABELS:
        for y in B21_LABELS:
            table[index[x], index[y]] = index[key[tuple((units[x] @ units[y]).ravel())]]
    inv = [index[s] for s in ("1", "a", "b", "ba", "ab", "0")]
    return FiniteSemigroup(B21_LABELS, table, inv, index["1"], index["0"])


def tsl() -> FiniteSemigroup:
    """Twisted semilattice {e, f, 0}: e, f idempotent, mixed products 0, e* = f."""
    table = [[0, 2, 2], [2, 1, 2], [2, 2, 2]]
    return FiniteSemigroup(("e", "f", "0"), table, [1, 0, 2], None, 2)


A2_MATRIX = SandwichMatrix(((TRIVIAL_GROUP.identity, TRIVIAL_GROUP.identity), (TRIVIAL_GROUP.identity, None)))
BRANDT_MATRIX = SandwichMatrix(((None, TRIVIAL_GROUP.identity), (TRIVIAL_GROUP.identity, None)))


def _triple_label(x) -> str:
    if x is ZERO:
        return "0"
    if x is ONE:
        return "1"
    return f"({x.i + 1},{x.lam + 1})"


def a2() -> FiniteSemigroup:
    """A_2: Rees matrix semigroup over the trivial group with P = (e e; e 0)."""
    S = ReesMatrixSemigroup(TRIVIAL_GROUP, A2_MATRIX)
    return S.to_finite([_triple_label(x) for x in S.elements()])


def brandt_core() -> FiniteSemigroup:
    """B_2: the 5-element Brandt semigroup, P = (0 e; e 0) over the trivial group."""
    S = ReesMatrixSemigroup(TRIVIAL_GROUP, BRANDT_MATRIX)
    return S.to_finite([_triple_label(x) for x in S.elements()])


# -- trivial-group collapse


def collapse_to_trivial(S: ReesMatrixSemigroup) -> tuple[ReesMatrixSemigroup, Callable]:
    """The quotient onto M^0 over the trivial group with every nonzero
    sandwich entry replaced by e, and the map (i,g,l) -> (i,e,l)."""
    bar = SandwichMatrix(
        tuple(tuple(None if p is None else TRIVIAL_GROUP.identity for p in row) for row in S.matrix.rows)
    )
    T = ReesMatrixSemigroup(TRIVIAL_GROUP, bar, with_identity=S.with_identity)

    def phi(x):
        if x is ZERO or x is ONE:
            return x
        return Triple(x.i, TRIVIAL_GROUP.identity, x.lam)

    return T, phi


def idempotent_fiber_is_commutative(S: ReesMatrixSemigroup, i: int, lam: int, sample: Sequence) -> bool:
    """On the given group elements, check that the fibre of the collapse over
    (i, e, lam) is closed and commutative. Meaningful when p[lam, i] != 0,
    i.e. when (i, e, lam) is idempotent downstairs."""
    fiber = [Triple(i, S.group.element(g), lam) for g in sample]
    for x in fiber:
        for y in fiber:
            xy = S.mul(x, y)
            if xy is ZERO or (xy.i, xy.lam) != (i, lam) or xy != S.mul(y, x):
                return False
    return True


# -- the three sandwich-submatrix certificates


class Certificate(NamedTuple):
    form: int
    rows: tuple[int, int]
    cols: tuple[int, int]


def _matches_form(P: SandwichMatrix, G: AbelianGroup, rows, cols) -> Optional[int]:
    (r0, r1), (c0, c1) = rows, cols
    tl, tr, bl, br = P[r0, c0], P[r0, c1], P[r1, c0], P[r1, c1]
    if br is None and tr is not None and bl is not None:
        return 1 if tl is not None else 2
    e = G.identity
    if (tl, tr, bl) == (e, e, e) and br is not None and G.order(br) == math.inf:
        return 3
    return None


def nfb_submatrix_classify(P: SandwichMatrix, G: AbelianGroup) -> Optional[Certificate]:
    """First 2x2 submatrix of shape (a b; c 0), (0 b; c 0) or (e e; e d)
    with d of infinite order.

    Row pairs are scanned in index order, then column pairs; within a pair
    both orientations are tried, so the reported rows/cols are listed in the
    order that puts the distinguished entry bottom-right.
    """
    for r0, r1 in itertools.combinations(range(P.n_rows), 2):
        for c0, c1 in itertools.combinations(range(P.n_cols), 2):
            for rows in ((r0, r1), (r1, r0)):
                for cols in ((c0, c1), (c1, c0)):
                    form = _matches_form(P, G, rows, cols)
                    if form is not None:
                        return Certificate(form, rows, cols)
    return None


class Form3Witness:
    """The subsemigroup R = {(k, d^n, nu) : n >= 0} and its ideal J (n >= 1)
    for a form-3 certificate; infinite, so exposed through predicates and a
    truncation."""

    def __init__(self, S: ReesMatrixSemigroup, cert: Certificate):
        if cert.form != 3:
            raise ValueError("R and J are defined for form-3 certificates only")
        self.S = S
        self.cols = cert.cols
        self.rows = cert.rows
        self.d = S.matrix[cert.rows[1], cert.cols[1]]

    def exponent(self, g) -> Optional[int]:
        """n >= 0 with g = d^n, or None."""
        G, d = self.S.group, self.d
        # d has infinite order, so some free coordinate of d is nonzero
        pos = next(k for k in range(len(G.orders), G.dim) if d[k])
        n, rem = divmod(g[pos], d[pos])
        if rem or n < 0 or G.scale(d, n) != tuple(g):
            return None
        return n

    def in_R(self, x) -> bool:
        if x is ZERO or x is ONE:
            return False
        return x.i in self.cols and x.lam in self.rows and self.exponent(x.g) is not None

    def in_J(self, x) -> bool:
        return self.in_R(x) and self.exponent(x.g) >= 1

    def truncated(self, bound: int) -> list[Triple]:
        G = self.S.group
        return [
            Triple(k, G.scale(self.d, n), nu) for n in range(bound + 1) for k in self.cols for nu in self.rows
        ]

    def quotient(self) -> FiniteSemigroup:
        """R/J, materialised over the four exponent-0 triples and 0."""
        reps = self.truncated(0)
        Q = materialize_quotient(reps, self.S.mul, self.in_J)
        return Q.relabel([_triple_label(x) for x in reps] + ["0"])
