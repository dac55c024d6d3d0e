"""Congruences: principal congruences by translation closure, the full
congruence lattice, subdirect irreducibility and simplicity."""

from .caps import cap
from .errors import CapExceeded, NotACongruence


class Congruence:
    """Partition of 0..n-1 as a block-id array, block ids in first-occurrence
    order (canonical and hashable)."""

    __slots__ = ("ids", "size")

    def __init__(self, ids):
        self.ids = _normalize(tuple(ids))
        self.size = len(self.ids)

    def __eq__(self, other):
        return isinstance(other, Congruence) and self.ids == other.ids

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self):
        return f"Congruence{self.blocks()}"

    def related(self, a, b):
        return self.ids[a] == self.ids[b]

    def num_blocks(self):
        return max(self.ids) + 1 if self.ids else 0

    def blocks(self):
        out = [[] for _ in range(self.num_blocks())]
        for e, b in enumerate(self.ids):
            out[b].append(e)
        return [tuple(b) for b in out]

    def is_identity(self):
        return self.num_blocks() == self.size

    def is_total(self):
        return self.num_blocks() <= 1

    def refines(self, other):
        seen = {}
        for a, b in zip(self.ids, other.ids):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def join(self, other):
        uf = _UnionFind(self.size)
        for part in (self, other):
            for block in part.blocks():
                for e in block[1:]:
                    uf.union(block[0], e)
        return Congruence([uf.find(e) for e in range(self.size)])

    def meet(self, other):
        return Congruence([(self.ids[e], other.ids[e])
                           for e in range(self.size)])


def _normalize(ids):
    relabel = {}
    out = []
    for b in ids:
        out.append(relabel.setdefault(b, len(relabel)))
    return tuple(out)


def identity_congruence(n):
    return Congruence(range(n))


def total_congruence(n):
    return Congruence([0] * n)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[max(ra, rb)] = min(ra, rb)
        return True


def is_congruence(A, part):
    if part.size != A.size:
        return False
    n = A.size
    for t in (A.join, A.meet, A.oplus, A.odot):
        for a in range(n):
            for b in range(n):
                if not part.related(a, b):
                    continue
                for c in range(n):
                    if not part.related(t[a][c], t[b][c]):
                        return False
    return True


def _closure(A, uf, queue):
    # Pair closure under the unary translations x -> op(x, c).  Proof
    # obligation: all operations are binary and commutative-compatible, so if
    # a~a' and b~b' then op(a,b) ~ op(a',b) ~ op(a',b') by two one-sided steps
    # plus transitivity; union-find supplies transitivity, hence closing under
    # one-frozen-argument translations yields the full congruence (Mal'cev).
    tables = (A.join, A.meet, A.oplus, A.odot)
    n = A.size
    while queue:
        a, b = queue.pop()
        for t in tables:
            ra, rb = t[a], t[b]
            for c in range(n):
                x, y = uf.find(ra[c]), uf.find(rb[c])
                if x != y:
                    uf.union(x, y)
                    queue.append((x, y))
    return Congruence([uf.find(e) for e in range(n)])


def principal_congruence(A, a, b):
    uf = _UnionFind(A.size)
    if a == b:
        return identity_congruence(A.size)
    uf.union(a, b)
    return _closure(A, uf, [(a, b)])


def congruence_join(A, parts):
    uf = _UnionFind(A.size)
    queue = []
    for part in parts:
        for block in part.blocks():
            for e in block[1:]:
                if uf.union(block[0], e):
                    queue.append((block[0], e))
    return _closure(A, uf, queue)


class CongruenceLattice:
    """All congruences ordered by refinement, with the covering relation."""

    __slots__ = ("algebra", "congruences", "covers")

    def __init__(self, algebra, congruences):
        self.algebra = algebra
        # sort by (number of blocks desc, ids) so identity is first, total last
        self.congruences = sorted(congruences,
                                  key=lambda c: (-c.num_blocks(), c.ids))
        self.covers = self._covers()

    def _covers(self):
        cs = self.congruences
        below = {i: [j for j in range(len(cs))
                     if j != i and cs[j].refines(cs[i])]
                 for i in range(len(cs))}
        covers = []
        for i, under in below.items():
            for j in under:
                if not any(cs[j].refines(cs[k]) and cs[k].refines(cs[i])
                           for k in under if k != j):
                    covers.append((j, i))
        return sorted(covers)

    def __len__(self):
        return len(self.congruences)

    def bottom(self):
        return self.congruences[0]

    def top(self):
        return self.congruences[-1]

    def is_chain(self):
        cs = self.congruences
        return all(cs[i].refines(cs[i + 1]) for i in range(len(cs) - 1))

    def nontrivial(self):
        return [c for c in self.congruences if not c.is_identity()]


def congruence_lattice(A):
    if A.size > cap("CONGRUENCE"):
        raise CapExceeded(f"congruence lattice cap is {cap('CONGRUENCE')}")
    n = A.size
    principals = {identity_congruence(n)}
    for a in range(n):
        for b in range(a + 1, n):
            principals.add(principal_congruence(A, a, b))
    # every congruence is a join of principals; close under pairwise joins
    known = set(principals)
    frontier = set(principals)
    while frontier:
        new = set()
        for c in frontier:
            for p in principals:
                j = congruence_join(A, [c, p])
                if j not in known:
                    known.add(j)
                    new.add(j)
        frontier = new
    return CongruenceLattice(A, known)


def monolith(A):
    """Meet of all nontrivial congruences; None when A has no nontrivial
    congruence (trivial algebra).  Every nontrivial congruence contains a
    nontrivial principal one and principals are congruences, so the meet over
    principal congruences theta(a,b), a != b, suffices; no lattice needed."""
    n = A.size
    m = None
    for a in range(n):
        for b in range(a + 1, n):
            p = principal_congruence(A, a, b)
            m = p if m is None else m.meet(p)
            if m.is_identity():
                return m
    return m


def is_subdirectly_irreducible(A):
    """Returns (verdict, monolith-or-None)."""
    m = monolith(A)
    if m is None or m.is_identity():
        return False, None
    return True, m


def is_simple(A):
    # simple iff every principal congruence on a distinct pair is total
    n = A.size
    if n <= 1:
        return False
    return all(principal_congruence(A, a, b).is_total()
               for a in range(n) for b in range(a + 1, n))
