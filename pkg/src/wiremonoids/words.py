"""Plain and involutory words, Zimin words, evaluation in (involution)
monoids, and identity checking: exhaustive over finite tables, bounded
refutation over generated monoids, bounded isoterm search."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Any, Callable, Mapping, Optional, Sequence, Union

import numpy as np

from .chips import CIRCLE_LIMIT, Chip, circle, hook
from .families import ChipMonoid
from .semigroups import FiniteSemigroup

Letter = tuple[int, bool]


@dataclass(frozen=True)
class InvWord:
    """Non-empty sequence of (letter id, starred) pairs; x_i has id i."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple((int(x), bool(s)) for x, s in self.letters)
        if not letters:
            raise ValueError("words are non-empty")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def plain(cls, ids: Sequence[int]) -> "InvWord":
        return cls(tuple((i, False) for i in ids))

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "InvWord") -> "InvWord":
        return InvWord(self.letters + other.letters)

    def __str__(self) -> str:
        return " ".join(f"x{x}{'*' if s else ''}" for x, s in self.letters)

    def __repr__(self) -> str:
        return f"InvWord({str(self)!r})"

    @property
    def is_plain(self) -> bool:
        return not any(s for _, s in self.letters)

    def alphabet(self) -> list[int]:
        return sorted({x for x, _ in self.letters})


@dataclass(frozen=True)
class Identity:
    lhs: InvWord
    rhs: InvWord

    @property
    def is_plain(self) -> bool:
        return self.lhs.is_plain and self.rhs.is_plain

    def alphabet(self) -> list[int]:
        return sorted(set(self.lhs.alphabet()) | set(self.rhs.alphabet()))

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


_LETTER = re.compile(r"\s*x(\d+)(\*?)")


def parse_word(text: str) -> InvWord:
    """``x1 x2* x1``; spaces between letters are optional."""
    pos, out = 0, []
    end = len(text.rstrip())
    while pos < end:
        mt = _LETTER.match(text, pos)
        if mt is None:
            col = pos + 1 + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ValueError(f"line 1, column {col}: expected a letter like x1 in {text!r}")
        if int(mt.group(1)) < 1:
            raise ValueError(f"line 1, column {mt.start(1) + 1}: letter ids start at 1")
        out.append((int(mt.group(1)), bool(mt.group(2))))
        pos = mt.end()
    if not out:
        raise ValueError("line 1, column 1: empty word")
    return InvWord(tuple(out))


def parse_identity(text: str) -> Identity:
    lhs, sep, rhs = text.partition("=")
    if not sep:
        raise ValueError(f"line 1, column {len(text) + 1}: expected '=' in identity {text!r}")
    try:
        right = parse_word(rhs)
    except ValueError as exc:
        # shift the column past the '='
        mt = re.search(r"column (\d+)", str(exc))
        col = int(mt.group(1)) + len(lhs) + 1 if mt else len(lhs) + 2
        raise ValueError(f"line 1, column {col}: bad right-hand side in {text!r}") from None
    return Identity(parse_word(lhs), right)


def zimin(n: int) -> InvWord:
    if n < 1:
        raise ValueError("Zimin words start at n = 1")
    ids = [1]
    for k in range(2, n + 1):
        ids = ids + [k] + ids
    return InvWord.plain(ids)


def word_star(w: InvWord) -> InvWord:
    return InvWord(tuple((x, not s) for x, s in reversed(w.letters)))


def occurrences(w: InvWord, letter: int, starred_only: bool = False) -> int:
    return sum(1 for x, s in w.letters if x == letter and (s or not starred_only))


# -- evaluation


def evaluate(w: InvWord, assignment: Mapping[int, Any], M) -> Any:
    """Left-to-right product of the letter images in ``M``.

    ``M`` needs ``mul`` and, for starred letters, ``star``.
    """
    acc = None
    for x, s in w.letters:
        try:
            val = assignment[x]
        except KeyError:
            raise KeyError(f"no value assigned to x{x}") from None
        if s:
            if not getattr(M, "has_involution", True):
                raise ValueError("starred letter but the structure has no involution")
            val = M.star(val)
        acc = val if acc is None else M.mul(acc, val)
    return acc


def _assignment_grid(k: int, n_letters: int) -> tuple[np.ndarray, ...]:
    # lexicographic order, first letter most significant
    return np.unravel_index(np.arange(k**n_letters), (k,) * n_letters)


def _evaluate_all(S: FiniteSemigroup, w: InvWord, columns: Mapping[int, np.ndarray]) -> np.ndarray:
    acc = None
    for x, s in w.letters:
        val = columns[x]
        if s:
            val = S.involution[val]
        acc = val if acc is None else S.table[acc, val]
    return acc


def find_counterexample(S: FiniteSemigroup, ident: Identity) -> Optional[dict[int, int]]:
    """Lexicographically first assignment (element indices) separating the
    two sides, or None if ``S`` satisfies the identity."""
    if not ident.is_plain and S.involution is None:
        raise ValueError("involutory identity but the semigroup has no involution")
    alphabet = ident.alphabet()
    grid = _assignment_grid(len(S), len(alphabet))
    columns = dict(zip(alphabet, grid))
    diff = np.nonzero(_evaluate_all(S, ident.lhs, columns) != _evaluate_all(S, ident.rhs, columns))[0]
    if diff.size == 0:
        return None
    first = int(diff[0])
    return {x: int(columns[x][first]) for x in alphabet}


def satisfies_identity(S: FiniteSemigroup, ident: Identity) -> bool:
    return find_counterexample(S, ident) is None


def reachable_values(
    generators: Sequence, mul: Callable, depth: int, one: Any = None
) -> list[tuple[Any, tuple[int, ...]]]:
    """Distinct products of at most ``depth`` generators, in shortlex order
    of their first generator word; the empty product is ``one`` if given."""
    out: list[tuple[Any, tuple[int, ...]]] = []
    seen: set = set()
    if one is not None:
        out.append((one, ()))
        seen.add(one)
    frontier: list[tuple[Any, tuple[int, ...]]] = []
    if depth >= 1:
        for j, g in enumerate(generators):
            if g not in seen:
                seen.add(g)
                out.append((g, (j,)))
            frontier.append((g, (j,)))
    for _ in range(depth - 1):
        nxt = []
        for val, word in frontier:
            for j, g in enumerate(generators):
                p = mul(val, g)
                if p not in seen:
                    seen.add(p)
                    out.append((p, word + (j,)))
                    nxt.append((p, word + (j,)))
        frontier = nxt
    return out


def refute_identity(
    ident: Identity,
    generators: Union[Sequence, Mapping[int, Sequence]],
    M,
    depth: int,
    use_identity: bool = True,
) -> Optional[dict[int, Any]]:
    """First assignment, letters to products of at most ``depth`` generators,
    on which the two sides differ; None if the bounded search finds nothing.

    ``generators`` may map individual letters to their own generator lists.
    The empty product is used when ``M.one`` is not None and
    ``use_identity`` is set.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    alphabet = ident.alphabet()
    one = getattr(M, "one", None) if use_identity else None
    if isinstance(generators, Mapping):
        pools = [[v for v, _ in reachable_values(generators[x], M.mul, depth, one)] for x in alphabet]
    else:
        shared = [v for v, _ in reachable_values(list(generators), M.mul, depth, one)]
        pools = [shared] * len(alphabet)
    for combo in itertools.product(*pools):
        a = dict(zip(alphabet, combo))
        if evaluate(ident.lhs, a, M) != evaluate(ident.rhs, a, M):
            return a
    return None


def isoterm_witnesses(S: FiniteSemigroup, v: InvWord, max_len: int) -> list[InvWord]:
    """All words v' != v of length <= max_len over the letters of v plus one
    fresh letter (starred letters too when S has an involution) such that S
    satisfies v = v'. Sorted by length, then lexicographically."""
    alphabet = v.alphabet()
    alphabet.append(alphabet[-1] + 1)
    use_star = S.involution is not None
    symbols = [(x, s) for x in alphabet for s in ((False, True) if use_star else (False,))]
    grid = _assignment_grid(len(S), len(alphabet))
    columns = dict(zip(alphabet, grid))
    sym_vals = [columns[x] if not s else S.involution[columns[x]] for x, s in symbols]
    target = _evaluate_all(S, v, columns)

    # can[p, t]: t lies in p S^1
    k = len(S)
    can = np.eye(k, dtype=bool)
    for p in range(k):
        can[p, S.table[p]] = True
    memo: dict[tuple[bytes, int], list[tuple[int, ...]]] = {}

    def completions(vec: np.ndarray, remaining: int) -> list[tuple[int, ...]]:
        key = (vec.tobytes(), remaining)
        if key in memo:
            return memo[key]
        out: list[tuple[int, ...]] = []
        if np.array_equal(vec, target):
            out.append(())
        if remaining > 0:
            for j, sv in enumerate(sym_vals):
                nxt = S.table[vec, sv]
                if can[nxt, target].all():
                    out.extend((j,) + tail for tail in completions(nxt, remaining - 1))
        memo[key] = out
        return out

    found = []
    for j, sv in enumerate(sym_vals):
        if can[sv, target].all():
            found.extend((j,) + tail for tail in completions(sv, max_len - 1))
    words = [InvWord(tuple(symbols[j] for j in idx)) for idx in found]
    words = [w for w in words if w != v]
    words.sort(key=lambda w: (len(w), [(x, s) for x, s in w.letters]))
    return words


# -- the Zimin substitutions in K_3


def zimin_fingerprint_k3(n: int, i: int, generator_choice: str, involution: Optional[str] = "star") -> Chip:
    """Value of Z_n in K_3 with x_i -> c (or h_1) and every other letter -> 1.

    Uses Z_{k+1} = Z_k x_{k+1} Z_k, so the cost is linear in n.
    """
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if 2 ** (n - i) > CIRCLE_LIMIT:
        raise OverflowError(f"c^(2^{n - i}) exceeds the 64-bit circle bound")
    if generator_choice not in ("c", "h1"):
        raise ValueError("generator_choice must be 'c' or 'h1'")
    M = ChipMonoid(3, involution)
    g = circle(3) if generator_choice == "c" else hook(3, 1)
    value = None
    for k in range(1, n + 1):
        letter = g if k == i else M.one
        value = letter if value is None else M.mul(M.mul(value, letter), value)
    return value
