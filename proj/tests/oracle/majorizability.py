"""Independent oracle for the finite type structure.

Elements are explicit value tuples; the relation is the recursive definition
a ⊴ b iff for all u ⊴ v: a(u) ⊴ b(v) and b(u) ⊴ b(v), evaluated with plain
memoisation. Prints the values frozen into the C++ tests.
"""
import functools
import itertools
import sys

N = int(sys.argv[1]) if len(sys.argv) > 1 else 1
BASE = "0"


def arrow(d, c):
    return (d, c)


def show(t):
    if t == BASE:
        return "0"
    d, c = t
    ds = show(d)
    return ("(" + ds + ")" if d != BASE else ds) + "→" + show(c)


def card(t):
    if t == BASE:
        return N + 1
    d, c = t
    return card(c) ** card(d)


@functools.lru_cache(maxsize=None)
def domain(t):
    if t == BASE:
        return tuple(range(N + 1))
    d, c = t
    return tuple(itertools.product(domain(c), repeat=len(domain(d))))


@functools.lru_cache(maxsize=None)
def index_in(t):
    return {e: i for i, e in enumerate(domain(t))}


@functools.lru_cache(maxsize=None)
def pairs(t):
    dom = domain(t)
    return tuple((i, j) for i in range(len(dom)) for j in range(len(dom)) if maj(t, i, j))


@functools.lru_cache(maxsize=None)
def maj(t, a, b):
    if t == BASE:
        return a <= b
    d, c = t
    fa, fb = domain(t)[a], domain(t)[b]
    ci = index_in(c)
    for u, v in pairs(d):
        if not maj(c, ci[fa[u]], ci[fb[v]]) or not maj(c, ci[fb[u]], ci[fb[v]]):
            return False
    return True


def selfmaj(t):
    return [i for i in range(len(domain(t))) if maj(t, i, i)]


def first_upper_bound(t, es):
    for b in selfmaj(t):
        if all(maj(t, e, b) for e in es):
            return b
    return None


Z = BASE
Z1 = arrow(Z, Z)
types = [Z, Z1, arrow(Z, Z1), arrow(Z1, Z), arrow(Z, arrow(Z, Z1)), arrow(Z1, arrow(Z, Z)),
         arrow(Z, arrow(Z1, Z))]
for t in types:
    if card(t) > 4096:
        continue
    n = len(domain(t))
    sm = selfmaj(t)
    print(f"{show(t)}: card {n} selfmaj {len(sm)} pairs {len(pairs(t))} first_selfmaj {sm[:8]}")

if N == 1:
    # upper bounds for every pair of self-majorizing elements at 0→0→0→0
    t = arrow(Z, arrow(Z, Z1))
    sm = selfmaj(t)
    h = 0
    for a in sm:
        for b in sm:
            h = (h * 1000003 + first_upper_bound(t, [a, b])) % (1 << 61)
    print("upper-bound digest 0→0→0→0:", h)
    print("ub(0→0, {id, const0}):", first_upper_bound(Z1, [index_in(Z1)[(0, 1)], index_in(Z1)[(0, 0)]]))
    # prenex rule: first v : 0→0 with ∀u⊴v (C(u) ∧ D) true and (∀u⊴v C(u)) ∧ D false, C ≡ true, D ≡ false
    for v in range(len(domain(Z1))):
        below = [u for u in range(len(domain(Z1))) if maj(Z1, u, v)]
        premise = all(True and False for _ in below)
        conclusion = all(True for _ in below) and False
        if premise and not conclusion:
            print("prenex rule countermodel v =", list(domain(Z1)[v]))
            break
