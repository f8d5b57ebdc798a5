"""Named verification scenarios, one per acceptance criterion.

Each scenario returns a :class:`ScenarioResult`; ``run_scenario`` adds the
timing and the budget check. Scenario 7 is split in two: the reflection
half (``k3-quotient``) and the rotation half (``k3-rotation``).
"""
from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .chips import (
    Chip,
    Matching,
    alpha,
    circle,
    format_chip,
    hook,
    identity,
    is_planar,
    multiply,
    rotate,
    star,
)
from .families import (
    ChipMonoid,
    brauer_multiply,
    embed_double,
    embed_insert_middle,
    embed_pad,
    enumerate_brauer,
    enumerate_jones,
    fiber_increment,
    jones_monoid,
    k3_quotient,
    random_chip,
)
from .rees import (
    ONE,
    ZERO,
    AbelianGroup,
    Form3Witness,
    ReesMatrixSemigroup,
    SandwichMatrix,
    TRIVIAL_GROUP,
    a2,
    brandt_b21,
    collapse_to_trivial,
    idempotent_fiber_is_commutative,
    nfb_submatrix_classify,
    parse_group,
    parse_matrix,
    tsl,
)
from .semigroups import idempotents, is_isomorphic
from .words import (
    Identity,
    InvWord,
    evaluate,
    isoterm_witnesses,
    refute_identity,
    satisfies_identity,
    zimin,
)

DEFAULT_BUDGET = 60.0
SEED = 20140101


@dataclass
class ScenarioResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    seconds: float = 0.0
    budget: float = DEFAULT_BUDGET

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def summary_line(self) -> str:
        return f"RESULT name={self.name} status={self.status} seconds={self.seconds:.3f} budget={self.budget:g}"


class _Checks:
    """Collects named boolean checks; the scenario passes if all do."""

    def __init__(self, name: str):
        self.name = name
        self.details: list[str] = []
        self.ok = True

    def check(self, cond: bool, what: str) -> None:
        self.ok &= bool(cond)
        self.details.append(f"{'ok  ' if cond else 'FAIL'} {what}")

    def note(self, text: str) -> None:
        self.details.append(f"     {text}")

    def result(self) -> ScenarioResult:
        return ScenarioResult(self.name, self.ok, self.details)


# 1
def relations() -> ScenarioResult:
    c = _Checks("relations")
    bad = {"TL1": 0, "TL2": 0, "TL4": 0, "jones": 0}
    for n in range(2, 9):
        hs = {i: hook(n, i) for i in range(1, n)}
        cn = circle(n)
        fs = {i: h.matching for i, h in hs.items()}
        for i, j in itertools.product(hs, repeat=2):
            if abs(i - j) >= 2:
                bad["TL1"] += multiply(hs[i], hs[j]) != multiply(hs[j], hs[i])
                bad["jones"] += brauer_multiply(fs[i], fs[j]) != brauer_multiply(fs[j], fs[i])
            if abs(i - j) == 1:
                bad["TL2"] += multiply(multiply(hs[i], hs[j]), hs[i]) != hs[i]
                bad["jones"] += brauer_multiply(brauer_multiply(fs[i], fs[j]), fs[i]) != fs[i]
        for i, h in hs.items():
            sq = multiply(h, h)
            bad["TL4"] += not (sq == multiply(cn, h) == multiply(h, cn))
            bad["jones"] += brauer_multiply(fs[i], fs[i]) != fs[i]
    for rel, count in bad.items():
        c.check(count == 0, f"{rel} violations for 2 <= n <= 8: {count}")
    return c.result()


# 2
def _all_pairings(m: int) -> np.ndarray:
    """Every perfect matching of range(m) as an array (count, m/2, 2)."""
    if m == 0:
        return np.zeros((1, 0, 2), dtype=np.int8)
    sub = _all_pairings(m - 2)
    out = []
    for j in range(1, m):
        rest = np.array([x for x in range(1, m) if x != j], dtype=np.int8)
        first = np.broadcast_to(np.array([0, j], dtype=np.int8), (len(sub), 1, 2))
        out.append(np.concatenate([first, rest[sub]], axis=1))
    return np.concatenate(out)


def brute_planar_count(n: int) -> int:
    """Filter all (2n-1)!! matchings of the 2n boundary positions for
    pairwise non-interleaving blocks."""
    P = _all_pairings(2 * n)
    lo, hi = P.min(axis=2), P.max(axis=2)
    crossing = np.zeros(len(P), dtype=bool)
    for i, j in itertools.combinations(range(n), 2):
        a, b, c, d = lo[:, i], hi[:, i], lo[:, j], hi[:, j]
        crossing |= ((a < c) & (c < b) & (b < d)) | ((c < a) & (a < d) & (d < b))
    return int((~crossing).sum())


def catalan() -> ScenarioResult:
    c = _Checks("catalan")
    expected = [1, 2, 5, 14, 42, 132, 429, 1430]
    for n, want in enumerate(expected, 1):
        got = len(enumerate_jones(n))
        brute = brute_planar_count(n)
        formula = math.comb(2 * n, n) // (n + 1)
        c.check(got == want == formula == brute, f"n={n}: enumerate={got} brute={brute} catalan={formula}")
    return c.result()


# 3
def count_matchings(m: int) -> int:
    """Independent recursive count: pin 0 pairs with any of the other m-1."""
    if m == 0:
        return 1
    return (m - 1) * count_matchings(m - 2)


def brauer_counts() -> ScenarioResult:
    c = _Checks("brauer-counts")
    for n in range(1, 7):
        got = len(enumerate_brauer(n))
        dfact = math.prod(range(2 * n - 1, 0, -2))
        c.check(got == count_matchings(2 * n) == dfact, f"n={n}: {got} matchings, (2n-1)!! = {dfact}")
    return c.result()


# 4
def associativity(samples: int = 10_000) -> ScenarioResult:
    c = _Checks("associativity")
    rng = random.Random(SEED)
    for n in range(2, 7):
        bad = 0
        for _ in range(samples):
            x, y, z = (random_chip(n, rng) for _ in range(3))
            bad += multiply(multiply(x, y), z) != multiply(x, multiply(y, z))
        c.check(bad == 0, f"n={n}: {samples} random triples, {bad} failures")
    return c.result()


# 5
def involutions(samples: int = 10_000) -> ScenarioResult:
    c = _Checks("involutions")
    rng = random.Random(SEED + 5)
    for n in range(1, 7):
        bad = 0
        for _ in range(samples):
            x, y = random_chip(n, rng), random_chip(n, rng)
            xy = multiply(x, y)
            for inv in (star, rotate):
                bad += inv(inv(x)) != x
                bad += inv(xy) != multiply(inv(y), inv(x))
        c.check(bad == 0, f"n={n}: {samples} random pairs, {bad} law failures")
    gen_bad = 0
    for n in range(2, 9):
        gen_bad += star(circle(n)) != circle(n) or rotate(circle(n)) != circle(n)
        for i in range(1, n):
            gen_bad += rotate(hook(n, i)) != hook(n, n - i) or star(hook(n, i)) != hook(n, i)
    c.check(gen_bad == 0, f"rotate(h_i) = h_(n-i), both involutions fix c and star fixes h_i, n <= 8: {gen_bad} failures")
    return c.result()


# 6
def fiber_law() -> ScenarioResult:
    c = _Checks("fiber-law")
    for n in range(1, 5):
        J = jones_monoid(n) if n > 1 else None
        elems = list(J.elements) if J else [Matching.identity(1)]
        idem = [J.elements[x] for x in idempotents(J)] if J else elems
        bad = 0
        for pi in idem:
            m = fiber_increment(pi)
            for k, l in itertools.product(range(4), repeat=2):
                a, b = Chip(pi, k), Chip(pi, l)
                bad += multiply(a, b) != Chip(pi, k + l + m) or multiply(a, b) != multiply(b, a)
        c.check(bad == 0, f"n={n}: {len(idem)} idempotents of J_{n}, {bad} failures")
    return c.result()


# 7
def k3_quotient_star() -> ScenarioResult:
    c = _Checks("k3-quotient")
    Q = k3_quotient("star")
    B = brandt_b21()
    Q.check()
    c.check(len(Q) == 6, f"K_3/C has {len(Q)} elements")
    f = is_isomorphic(Q, B)
    c.check(f is not None, "K_3/C with reflection is isomorphic to B_2^1 as an involution monoid")
    if f is not None:
        c.note("bijection: " + ", ".join(f"{Q.elements[x]} -> {B.elements[y]}" for x, y in sorted(f.items())))
        ab, ba = B.index("ab"), B.index("ba")
        inv = {Q.elements[x]: Q.elements[int(Q.involution[x])] for x in range(len(Q))}
        back = {y: x for x, y in f.items()}
        c.check(
            inv[Q.elements[back[ab]]] == Q.elements[back[ba]],
            "the reflection-induced involution swaps ab and ba",
        )
    return c.result()


def k3_quotient_rotation() -> ScenarioResult:
    """The rotation clause as literally stated; it does not hold."""
    c = _Checks("k3-rotation")
    Q = k3_quotient("rotate")
    B = brandt_b21()
    Q.check()
    f = is_isomorphic(Q, B, involution=False)
    c.check(f is not None, "K_3/C is isomorphic to B_2^1 as a plain monoid")
    inv = {Q.elements[x]: Q.elements[int(Q.involution[x])] for x in range(len(Q))}
    c.note("rotation on K_3/C: " + ", ".join(f"{k} -> {v}" for k, v in inv.items()))
    back = {y: x for x, y in (f or {}).items()}
    swaps = bool(f) and inv[Q.elements[back[B.index("ab")]]] == Q.elements[back[B.index("ba")]]
    c.check(swaps, "the rotation-induced involution swaps ab and ba")
    return c.result()


# 8
def zimin_fingerprints() -> ScenarioResult:
    c = _Checks("zimin-fingerprints")
    M = ChipMonoid(3, "rotate")
    bad = 0
    for n in range(1, 7):
        Z = zimin(n)
        for i in range(1, n + 1):
            for g, want in (
                (circle(3), Chip(Matching.identity(3), 2 ** (n - i))),
                (hook(3, 1), Chip(hook(3, 1).matching, 2 ** (n - i) - 1)),
            ):
                a = {x: M.one for x in range(1, n + 1)}
                a[i] = g
                bad += evaluate(Z, a, M) != want
    c.check(bad == 0, f"c^(2^(n-i)) and c^(2^(n-i)-1) h_1 for all 1 <= i <= n <= 6: {bad} mismatches")
    return c.result()


# 9
def isoterm() -> ScenarioResult:
    c = _Checks("isoterm")
    B = brandt_b21()
    for n, max_len in ((2, 6), (3, 8)):
        w = isoterm_witnesses(B, zimin(n), max_len)
        c.check(not w, f"Z_{n} up to length {max_len} over B_2^1: {len(w)} witnesses")
    return c.result()


# 10
def refutation() -> ScenarioResult:
    c = _Checks("refutation")
    M = ChipMonoid(3, "star")
    gens = M.generators()
    comm = Identity(InvWord.plain([1, 2]), InvWord.plain([2, 1]))
    a = refute_identity(comm, gens, M, 1)
    c.check(a is not None, f"xy = yx refuted at depth 1: {_show(a)}")
    z2 = Identity(zimin(2), InvWord.plain([1, 1, 2]))
    a = refute_identity(z2, gens, M, 1)
    c.check(a is not None, f"Z_2 = x1 x1 x2 refuted at depth 1: {_show(a)}")
    tl2 = Identity(InvWord.plain([1, 2, 1]), InvWord.plain([1]))
    for i, j in ((1, 2), (2, 1)):
        a = refute_identity(tl2, {1: [hook(3, i)], 2: [hook(3, j)]}, M, 1, use_identity=False)
        c.check(a is None, f"x1 x2 x1 = x1 with x1 = h{i}, x2 = h{j}: no witness")
    return c.result()


def _show(a) -> str:
    if a is None:
        return "none"
    return ", ".join(f"x{k} -> {format_chip(v)}" for k, v in sorted(a.items()))


# 11
def embeddings() -> ScenarioResult:
    c = _Checks("embeddings")

    def chips_of(n: int) -> list[Chip]:
        return [Chip(m, d) for m in enumerate_jones(n) for d in (0, 1)]

    def homomorphic(f: Callable, elems: list[Chip], inv: Callable) -> tuple[bool, bool, bool]:
        images = [f(x) for x in elems]
        mult = all(f(multiply(x, y)) == multiply(f(x), f(y)) for x in elems for y in elems)
        injective = len(set(images)) == len(images)
        compat = all(f(inv(x)) == inv(f(x)) for x in elems)
        return mult, injective, compat

    for n in (2, 3):
        elems = chips_of(n)
        for name, f, inv in (
            ("pad(1,1)", lambda x: embed_pad(x, 1, 1), star),
            ("pad(1,1)", lambda x: embed_pad(x, 1, 1), rotate),
            ("pad(0,1)", lambda x: embed_pad(x, 0, 1), star),
            ("double", embed_double, rotate),
        ):
            mult, inj, compat = homomorphic(f, elems, inv)
            c.check(mult and inj and compat, f"{name} on J_{n} x circles: multiplicative={mult} injective={inj} {inv.__name__}-compatible={compat}")
    for n in (2, 4):
        mult, inj, compat = homomorphic(embed_insert_middle, chips_of(n), rotate)
        c.check(mult and inj and compat, f"insert-middle on J_{n} x circles: multiplicative={mult} injective={inj} rotate-compatible={compat}")
    gen_ok = True
    for n in range(2, 6):
        gen_ok &= embed_pad(circle(n), 1, 1) == circle(n + 2) and embed_double(circle(n)) == Chip(Matching.identity(2 * n), 2)
        for i in range(1, n):
            gen_ok &= embed_pad(hook(n, i), 1, 1) == hook(n + 2, i + 1)
            gen_ok &= embed_pad(hook(n, i), 0, 1) == hook(n + 1, i)
            gen_ok &= embed_double(hook(n, i)) == multiply(hook(2 * n, i), hook(2 * n, n + i))
    c.check(gen_ok, "generator images: h_i -> h_(i+1), c -> c; c -> c^2, h_i -> h_i h_(n+i)")
    return c.result()


# 12
def rees_matrix() -> ScenarioResult:
    c = _Checks("rees-matrix")
    for name, S in (("A_2", a2()), ("B_2^1", brandt_b21()), ("TSL", tsl())):
        ok = S.is_associative() and S.is_involution()
        c.check(ok, f"{name}: associative and involution laws hold on all {len(S)}^3 triples")
    B, T = brandt_b21(), tsl()
    emb = {T.index("e"): B.index("ab"), T.index("f"): B.index("ba"), T.index("0"): B.index("0")}
    hom = all(emb[T.mul(x, y)] == B.mul(emb[x], emb[y]) for x in emb for y in emb)
    inv = all(emb[T.star(x)] == B.star(emb[x]) for x in emb)
    c.check(hom and inv, "TSL embeds in B_2^1 via e -> ab, f -> ba, 0 -> 0 as an involution subsemigroup")

    z4 = parse_group("Z4")
    S = ReesMatrixSemigroup(z4, parse_matrix("(1),(2);(3),0", z4), with_identity=True)
    Tq, phi = collapse_to_trivial(S)
    els = S.elements()
    hom = all(phi(S.mul(x, y)) == Tq.mul(phi(x), phi(y)) for x in els for y in els)
    onto = {phi(x) for x in els} == set(Tq.elements())
    fibers = all(
        idempotent_fiber_is_commutative(S, i, lam, list(z4.elements()))
        for i in range(2) for lam in range(2) if S.matrix[lam, i] is not None
    )
    c.check(hom and onto and fibers, f"collapse over Z_4: homomorphism={hom} onto={onto} commutative idempotent fibres={fibers}")

    zz = parse_group("Z")
    S = ReesMatrixSemigroup(zz, parse_matrix("e,(0|2);(0|-1),(0|5)", zz), with_identity=True)
    Tq, phi = collapse_to_trivial(S)
    rng = random.Random(SEED + 12)
    sample = [S.triple(rng.randrange(2), (rng.randint(-9, 9),), rng.randrange(2)) for _ in range(60)] + [ZERO, ONE]
    hom = all(phi(S.mul(x, y)) == Tq.mul(phi(x), phi(y)) for x in sample for y in sample)
    fibers = all(
        idempotent_fiber_is_commutative(S, i, lam, [(g,) for g in range(-6, 7)])
        for i in range(2) for lam in range(2) if S.matrix[lam, i] is not None
    )
    c.check(hom and fibers, f"collapse over Z: homomorphism={hom} commutative idempotent fibres={fibers}")

    cases = [
        ("e,e;e,(0|1) over Z", zz, "e,e;e,(0|1)", 3),
        ("(1),(2);(3),0 over Z4", z4, "(1),(2);(3),0", 1),
        ("0,(1);(2),0 over Z4", z4, "0,(1);(2),0", 2),
        ("e,e;e,e over Z", zz, "e,e;e,e", None),
    ]
    for label, G, text, want in cases:
        cert = nfb_submatrix_classify(parse_matrix(text, G), G)
        got = cert.form if cert else None
        c.check(got == want, f"classify {label}: {'form ' + str(got) if got else 'no certificate'}")

    S = ReesMatrixSemigroup(zz, parse_matrix("e,e;e,(0|1)", zz))
    W = Form3Witness(S, nfb_submatrix_classify(S.matrix, zz))
    R = W.truncated(6)
    closed = all(W.in_R(S.mul(x, y)) for x in R for y in R)
    ideal = all(W.in_J(S.mul(x, y)) and W.in_J(S.mul(y, x)) for x in R if W.in_J(x) for y in R)
    quot = is_isomorphic(W.quotient(), a2(), involution=False) is not None
    c.check(closed and ideal and quot, f"form 3 over Z: R closed={closed}, J ideal in R={ideal}, R/J = A_2: {quot}")
    return c.result()


# 13
def random_identity(rng: random.Random, letters: int, starred: bool) -> Identity:
    def word() -> InvWord:
        return InvWord(tuple((rng.randint(1, letters), starred and rng.random() < 0.3) for _ in range(rng.randint(1, 4))))

    return Identity(word(), word())


def cross_oracle(samples: int = 10_000) -> ScenarioResult:
    c = _Checks("cross-oracle")
    rng = random.Random(SEED + 13)
    bad = 0
    for _ in range(samples):
        x, y = random_chip(5, rng), random_chip(5, rng)
        bad += multiply(x, y).matching != brauer_multiply(x.matching, y.matching)
    c.check(bad == 0, f"forget(xy) = forget(x) forget(y) on {samples} degree-5 pairs: {bad} failures")
    for name, S in (("B_2^1", brandt_b21()), ("A_2", a2()), ("TSL", tsl())):
        disagree = 0
        held = 0
        for _ in range(50):
            ident = random_identity(rng, 3, True)
            sat = satisfies_identity(S, ident)
            held += sat
            ref = refute_identity(ident, list(range(len(S))), S, len(S))
            disagree += sat != (ref is None)
        c.check(disagree == 0, f"{name}: exhaustive check vs depth-{len(S)} refutation on 50 identities ({held} hold): {disagree} disagreements")
    return c.result()


SCENARIOS: dict[str, Callable[[], ScenarioResult]] = {
    "relations": relations,
    "catalan": catalan,
    "brauer-counts": brauer_counts,
    "associativity": associativity,
    "involutions": involutions,
    "fiber-law": fiber_law,
    "k3-quotient": k3_quotient_star,
    "k3-rotation": k3_quotient_rotation,
    "zimin-fingerprints": zimin_fingerprints,
    "isoterm": isoterm,
    "refutation": refutation,
    "embeddings": embeddings,
    "rees-matrix": rees_matrix,
    "cross-oracle": cross_oracle,
}

# stated runtime budgets, seconds
BUDGETS = {
    "relations": 1,
    "catalan": 10,
    "brauer-counts": 5,
    "associativity": 10,
    "involutions": 10,
    "fiber-law": 5,
    "k3-quotient": 1,
    "k3-rotation": 1,
    "zimin-fingerprints": 1,
    "isoterm": 60,
    "refutation": 5,
    "embeddings": 10,
    "rees-matrix": 5,
    "cross-oracle": 30,
}


def run_scenario(name: str, budget: float | None = None) -> ScenarioResult:
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}")
    t0 = time.perf_counter()
    res = SCENARIOS[name]()
    res.seconds = time.perf_counter() - t0
    res.budget = budget if budget is not None else DEFAULT_BUDGET
    if res.seconds > res.budget:
        res.passed = False
        res.details.append(f"FAIL over the {res.budget:g} s budget")
    return res
