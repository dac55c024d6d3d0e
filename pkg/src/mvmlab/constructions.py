"""Builders for the named finite algebras (truncated unit-interval chains,
Chang-type chains, the degenerate LM chains, the 3- and 4-element catalog),
plus Gamma-of-lexicographic-product, products, subalgebras and quotients."""

import itertools

from .algebra import (FiniteAlgebra, canonical_key, chain_algebra,
                      make_algebra, make_lmonoid, trivial_algebra)
from .caps import cap
from .congruences import is_congruence
from .errors import CapExceeded, MalformedDocument, NotACongruence, UnknownName


def ln_plus(n):
    """(n+1)-chain of i/n with truncated addition: i+j capped at n, i*j
    floored at 0 after subtracting n."""
    if n < 1:
        raise MalformedDocument("ln_plus needs n >= 1")
    size = n + 1
    oplus = [[min(i + j, n) for j in range(size)] for i in range(size)]
    odot = [[max(i + j - n, 0) for j in range(size)] for i in range(size)]
    return chain_algebra(size, oplus, odot, name=f"L{n}+")


def cn_delta(n):
    """(n+1)-chain 0 < e < 2e < ... < (n-1)e < 1 of infinitesimal multiples:
    ie+je = min(i+j, n-1)e, ie*je = 0, and 1 is the *-unit / +-absorber."""
    if n < 1:
        raise MalformedDocument("cn_delta needs n >= 1")
    size = n + 1
    top = n

    def add(i, j):
        if i == top or j == top:
            return top
        return min(i + j, n - 1)

    def mul(i, j):
        if i == top:
            return j
        if j == top:
            return i
        return 0

    oplus = [[add(i, j) for j in range(size)] for i in range(size)]
    odot = [[mul(i, j) for j in range(size)] for i in range(size)]
    return chain_algebra(size, oplus, odot, name=f"C{n}d")


def cn_nabla(n):
    """Order dual of cn_delta: chain 0 < d^(n-1) < ... < d^2 < d < 1 of
    infinitesimal co-multiples; element i (1 <= i <= n-1) is d^(n-i)."""
    if n < 1:
        raise MalformedDocument("cn_nabla needs n >= 1")
    size = n + 1

    def exp_of(i):
        return n - i  # d-exponent; bottom handled separately

    def add(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return size - 1  # any two nonzero d-powers sum to 1

    def mul(i, j):
        if i == 0 or j == 0:
            return 0
        if i == size - 1:
            return j
        if j == size - 1:
            return i
        return n - min(exp_of(i) + exp_of(j), n - 1)

    oplus = [[add(i, j) for j in range(size)] for i in range(size)]
    odot = [[mul(i, j) for j in range(size)] for i in range(size)]
    return chain_algebra(size, oplus, odot, name=f"C{n}n")


def lm_delta(n):
    """(n+1)-chain with oplus = join and x*y = 0 unless one argument is 1."""
    if n < 1:
        raise MalformedDocument("lm_delta needs n >= 1")
    size = n + 1

    def mul(i, j):
        if i == size - 1:
            return j
        if j == size - 1:
            return i
        return 0

    oplus = [[max(i, j) for j in range(size)] for i in range(size)]
    odot = [[mul(i, j) for j in range(size)] for i in range(size)]
    return chain_algebra(size, oplus, odot, name=f"LM{n}d")


def lm_nabla(n):
    """(n+1)-chain with odot = meet and x+y = 1 unless one argument is 0."""
    if n < 1:
        raise MalformedDocument("lm_nabla needs n >= 1")
    size = n + 1

    def add(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return size - 1

    oplus = [[add(i, j) for j in range(size)] for i in range(size)]
    odot = [[min(i, j) for j in range(size)] for i in range(size)]
    return chain_algebra(size, oplus, odot, name=f"LM{n}n")


def _four_chain(name, bb_p, ab_p, aa_p, bb_t, ab_t, aa_t):
    # 4-chain 0 < b < a < 1 given the six non-forced table entries
    # (b=1, a=2); remaining entries are the unit/absorber laws
    oplus = [[0, 1, 2, 3],
             [1, bb_p, ab_p, 3],
             [2, ab_p, aa_p, 3],
             [3, 3, 3, 3]]
    odot = [[0, 0, 0, 0],
            [0, bb_t, ab_t, 1],
            [0, ab_t, aa_t, 2],
            [0, 1, 2, 3]]
    return chain_algebra(4, oplus, odot, name=name)


def _catalog_builders():
    b, a, one, zero = 1, 2, 3, 0
    return {
        # 3-element algebras
        "L2+": lambda: ln_plus(2),
        "C2d": lambda: cn_delta(2),
        "C2n": lambda: cn_nabla(2),
        "L2": lambda: chain_algebra(
            3, [[max(i, j) for j in range(3)] for i in range(3)],
            [[min(i, j) for j in range(3)] for i in range(3)], name="L2"),
        # 4-element chains 0 < b < a < 1
        "A3d": lambda: _four_chain("A3d", b, one, one, zero, b, a),
        "A3n": lambda: _four_chain("A3n", b, a, one, zero, zero, a),
        "B3d": lambda: _four_chain("B3d", b, a, one, zero, zero, b),
        "B3n": lambda: _four_chain("B3n", a, one, one, zero, b, a),
        "L3+": lambda: ln_plus(3),
        "C3d": lambda: cn_delta(3),
        "C3n": lambda: cn_nabla(3),
        "LM3d": lambda: lm_delta(3),
        "LM3n": lambda: lm_nabla(3),
        "L1+": lambda: ln_plus(1),
        "trivial": trivial_algebra,
    }


_ALIASES = {
    "A3Δ": "A3d", "A3∇": "A3n", "B3Δ": "B3d", "B3∇": "B3n",
    "C3Δ": "C3d", "C3∇": "C3n", "LM3Δ": "LM3d", "LM3∇": "LM3n",
    "C2Δ": "C2d", "C2∇": "C2n", "Ł1+": "L1+", "Ł2+": "L2+", "Ł3+": "L3+",
}


def catalog_names():
    return sorted(_catalog_builders())


def catalog(name):
    builders = _catalog_builders()
    key = _ALIASES.get(name, name)
    if key not in builders:
        raise UnknownName(f"unknown catalog algebra {name!r}")
    return builders[key]().rename(key)


# ---------------------------------------------------------------------------
# finite commutative l-monoids used as Gamma-of-lex seeds

def cn_delta_star(n):
    """n-chain 0 < e < ... < (n-1)e with truncated addition (zero at the
    bottom)."""
    plus = [[min(i + j, n - 1) for j in range(n)] for i in range(n)]
    return make_lmonoid(n, 0, plus, name=f"C{n}d*")


def cn_nabla_star(n):
    """n-chain of d-powers below zero: element i is -(n-1-i), addition clamped
    at the bottom (zero at the top)."""
    plus = [[max(i + j - (n - 1), 0) for j in range(n)] for i in range(n)]
    return make_lmonoid(n, n - 1, plus, name=f"C{n}n*")


def lm_delta_star(n):
    plus = [[max(i, j) for j in range(n)] for i in range(n)]
    return make_lmonoid(n, 0, plus, name=f"LM{n}d*")


def lm_nabla_star(n):
    plus = [[min(i, j) for j in range(n)] for i in range(n)]
    return make_lmonoid(n, n - 1, plus, name=f"LM{n}n*")


def trivial_lmonoid():
    return make_lmonoid(1, 0, ((0,),), name="0*")


def gamma_of_lex(M):
    """Unit interval of the lexicographic product Z x M: universe
    {(0,x): x >= 0_M} u {(1,x): x <= 0_M} with lex order, truncated +."""
    z = M.zero
    lower = sorted(x for x in range(M.size) if M.leq(z, x))
    upper = sorted(x for x in range(M.size) if M.leq(x, z))
    universe = [(0, x) for x in lower] + [(1, x) for x in upper]
    index = {p: i for i, p in enumerate(universe)}
    n = len(universe)

    def add(p, q):
        c = p[0] + q[0]
        s = M.plus[p[1]][q[1]]
        if c >= 2:
            return (1, z)
        if c == 1:
            return (1, M.meet[s][z])
        return (0, s)

    def mul(p, q):
        c = p[0] + q[0] - 1
        s = M.plus[p[1]][q[1]]
        if c < 0:
            return (0, z)
        if c == 0:
            return (0, M.join[s][z])
        return (1, s)

    def lat(p, q, pick_upper):
        if p[0] != q[0]:
            hi, lo = (p, q) if p[0] > q[0] else (q, p)
            return hi if pick_upper else lo
        t = M.join if pick_upper else M.meet
        return (p[0], t[p[1]][q[1]])

    def table(f):
        return [[index[f(universe[i], universe[j])] for j in range(n)]
                for i in range(n)]

    return make_algebra(
        n, index[(0, z)], index[(1, z)],
        table(add), table(mul),
        join=table(lambda p, q: lat(p, q, True)),
        meet=table(lambda p, q: lat(p, q, False)),
        name=f"Gamma(Z x {M.name})" if M.name else "Gamma(Z x M)")


# ---------------------------------------------------------------------------
# product / subalgebra / quotient

def product(A, B):
    n = A.size * B.size
    if n > cap("PRODUCT"):
        raise CapExceeded(f"product size {n} exceeds cap {cap('PRODUCT')}")
    pairs = list(itertools.product(range(A.size), range(B.size)))
    index = {p: i for i, p in enumerate(pairs)}

    def table(ta, tb):
        return [[index[(ta[i1][j1], tb[i2][j2])]
                 for (j1, j2) in pairs] for (i1, i2) in pairs]

    return make_algebra(
        n, index[(A.zero, B.zero)], index[(A.one, B.one)],
        table(A.oplus, B.oplus), table(A.odot, B.odot),
        join=table(A.join, B.join), meet=table(A.meet, B.meet),
        name=f"{A.name}x{B.name}" if A.name and B.name else "")


def subuniverse_closure(A, gens):
    seen = set(gens) | {A.zero, A.one}
    frontier = list(seen)
    while frontier:
        new = []
        for t in (A.join, A.meet, A.oplus, A.odot):
            for a in list(seen):
                for b in list(seen):
                    v = t[a][b]
                    if v not in seen:
                        seen.add(v)
                        new.append(v)
        frontier = new
    return frozenset(seen)


def _subalgebra_on(A, subset):
    elems = sorted(subset)
    index = {e: i for i, e in enumerate(elems)}

    def table(t):
        return [[index[t[a][b]] for b in elems] for a in elems]

    sub = make_algebra(len(elems), index[A.zero], index[A.one],
                       table(A.oplus), table(A.odot),
                       join=table(A.join), meet=table(A.meet))
    return sub, tuple(elems)  # embedding: new index -> element of A


def subalgebras(A):
    """All subuniverses (containing 0 and 1, closed under the four
    operations), deduplicated by canonical key; returns (algebra, embedding)
    pairs sorted by (size, key)."""
    if A.size > cap("SUBALGEBRA"):
        raise CapExceeded(f"subalgebra scan cap is {cap('SUBALGEBRA')}")
    base = {A.zero, A.one}
    rest = [e for e in range(A.size) if e not in base]
    found = {}
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            subset = base | set(extra)
            closed = all(t[a][b] in subset
                         for t in (A.join, A.meet, A.oplus, A.odot)
                         for a in subset for b in subset)
            if not closed:
                continue
            sub, emb = _subalgebra_on(A, subset)
            key = canonical_key(sub)
            if key not in found:
                found[key] = (sub, emb)
    return [found[k] for k in sorted(found, key=lambda k: (k[0], k))]


def quotient(A, theta):
    if not is_congruence(A, theta):
        raise NotACongruence("partition is not compatible with the tables")
    blocks = sorted(theta.blocks(), key=min)
    rep = [min(b) for b in blocks]
    block_of = {}
    for i, b in enumerate(blocks):
        for e in b:
            block_of[e] = i
    n = len(blocks)

    def table(t):
        return [[block_of[t[rep[i]][rep[j]]] for j in range(n)]
                for i in range(n)]

    return make_algebra(n, block_of[A.zero], block_of[A.one],
                        table(A.oplus), table(A.odot),
                        join=table(A.join), meet=table(A.meet),
                        name=f"{A.name}/theta" if A.name else "")
