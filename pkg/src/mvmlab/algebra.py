"""Finite algebras in the signature (join, meet, oplus, odot, 0, 1), plus
finite commutative lattice-ordered monoids, serialization and isomorphism keys.

Elements are always 0..n-1.  For chain algebras the numeric order IS the
lattice order (zero=0, one=n-1), so join/meet are max/min and need not be
stored in documents.
"""

import itertools
import json
from dataclasses import dataclass, field

from .errors import (CapExceeded, MalformedDocument, NotALattice,
                     NotAnLMonoid, TableOutOfRange)

Table = tuple  # tuple of tuples of ints, row-major: t[i][j] = op(i, j)


def _freeze(table):
    return tuple(tuple(row) for row in table)


def _check_table(t, n, what):
    if len(t) != n or any(len(row) != n for row in t):
        raise MalformedDocument(f"{what} table is not {n}x{n}")
    for i, row in enumerate(t):
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise TableOutOfRange(f"{what}[{i}][{j}] = {v} outside 0..{n - 1}")


def max_table(n):
    return tuple(tuple(max(i, j) for j in range(n)) for i in range(n))


def min_table(n):
    return tuple(tuple(min(i, j) for j in range(n)) for i in range(n))


def _validate_lattice(join, meet, zero, one, n):
    # idempotency, commutativity, absorption, associativity, distributivity,
    # designated bounds; witnesses are the offending element triples
    for i in range(n):
        if join[i][i] != i or meet[i][i] != i:
            raise NotALattice("idempotency fails", (i, i, i))
        if join[zero][i] != i:
            raise NotALattice("zero is not the bottom", (zero, i, i))
        if meet[one][i] != i:
            raise NotALattice("one is not the top", (one, i, i))
        for j in range(n):
            if join[i][j] != join[j][i] or meet[i][j] != meet[j][i]:
                raise NotALattice("commutativity fails", (i, j, j))
            if join[i][meet[i][j]] != i or meet[i][join[i][j]] != i:
                raise NotALattice("absorption fails", (i, j, j))
            for k in range(n):
                if join[join[i][j]][k] != join[i][join[j][k]]:
                    raise NotALattice("join associativity fails", (i, j, k))
                if meet[meet[i][j]][k] != meet[i][meet[j][k]]:
                    raise NotALattice("meet associativity fails", (i, j, k))
                if meet[i][join[j][k]] != join[meet[i][j]][meet[i][k]]:
                    raise NotALattice("distributivity fails", (i, j, k))


@dataclass(frozen=True)
class FiniteAlgebra:
    size: int
    zero: int
    one: int
    oplus: Table
    odot: Table
    join: Table
    meet: Table
    chain_flag: bool
    name: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def leq(self, a, b):
        return self.join[a][b] == b

    def is_chain(self):
        return all(self.join[i][j] in (i, j)
                   for i in range(self.size) for j in range(self.size))

    def height(self, a):
        # number of elements strictly below a
        return sum(1 for x in range(self.size) if x != a and self.leq(x, a))

    def rename(self, name):
        return FiniteAlgebra(self.size, self.zero, self.one, self.oplus,
                             self.odot, self.join, self.meet, self.chain_flag,
                             name=name)

    def __repr__(self):
        tag = self.name or "?"
        return f"FiniteAlgebra({tag}, n={self.size})"


def make_algebra(size, zero, one, oplus, odot, join=None, meet=None,
                 name="", validate=True):
    if size < 1:
        raise MalformedDocument("size must be >= 1")
    chain = join is None and meet is None
    if chain:
        join, meet = max_table(size), min_table(size)
        if zero != 0 or one != size - 1:
            raise MalformedDocument("chain algebras need zero=0, one=n-1")
    oplus, odot = _freeze(oplus), _freeze(odot)
    join, meet = _freeze(join), _freeze(meet)
    if validate:
        for what, t in (("oplus", oplus), ("odot", odot),
                        ("join", join), ("meet", meet)):
            _check_table(t, size, what)
        if not 0 <= zero < size or not 0 <= one < size:
            raise TableOutOfRange("zero/one outside 0..n-1")
        _validate_lattice(join, meet, zero, one, size)
    if not chain:
        # recognize chains presented with explicit tables in numeric order
        chain = (zero == 0 and one == size - 1
                 and join == max_table(size) and meet == min_table(size))
    return FiniteAlgebra(size, zero, one, oplus, odot, join, meet, chain,
                         name=name)


def chain_algebra(size, oplus, odot, name="", validate=True):
    return make_algebra(size, 0, size - 1, oplus, odot, name=name,
                        validate=validate)


def trivial_algebra():
    return make_algebra(1, 0, 0, ((0,),), ((0,),), name="trivial")


# ---------------------------------------------------------------------------
# documents

def load(doc):
    """Build a FiniteAlgebra from a parsed JSON document (dict)."""
    if not isinstance(doc, dict):
        raise MalformedDocument("algebra document must be a JSON object")
    try:
        size = doc["size"]
        zero = doc["zero"]
        one = doc["one"]
        oplus = doc["oplus"]
        odot = doc["odot"]
    except KeyError as exc:
        raise MalformedDocument(f"missing field {exc}") from None
    if not isinstance(size, int) or size < 1:
        raise MalformedDocument("size must be a positive integer")
    return make_algebra(size, zero, one, oplus, odot,
                        join=doc.get("join"), meet=doc.get("meet"),
                        name=doc.get("name", ""))


def save(A):
    doc = {"size": A.size, "zero": A.zero, "one": A.one,
           "oplus": [list(r) for r in A.oplus],
           "odot": [list(r) for r in A.odot]}
    if A.name:
        doc["name"] = A.name
    if not A.chain_flag:
        doc["join"] = [list(r) for r in A.join]
        doc["meet"] = [list(r) for r in A.meet]
    return doc


def load_file(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from None
    return load(doc)


# ---------------------------------------------------------------------------
# canonical form

def _refine_colors(A):
    n = A.size
    col = {e: 0 for e in range(n)}
    # start from iso-invariant unary data; height sorts a chain into its order
    keys = [(A.height(e), e == A.zero, e == A.one) for e in range(n)]
    while True:
        order = sorted(set(keys))
        col = [order.index(k) for k in keys]
        if len(order) == n:
            return col
        new = []
        for e in range(n):
            sig = sorted((col[f], col[A.join[e][f]], col[A.meet[e][f]],
                          col[A.oplus[e][f]], col[A.odot[e][f]])
                         for f in range(n))
            new.append((col[e], tuple(sig)))
        if len(set(new)) == len(order):
            return col
        keys = new


def _serialize(A, perm):
    # perm maps old element -> new index
    n = A.size
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    out = bytearray([n, perm[A.zero], perm[A.one]])
    for t in (A.join, A.meet, A.oplus, A.odot):
        for i in inv:
            for j in inv:
                out.append(perm[t[i][j]])
    return bytes(out)


def canonical_key(A):
    """Byte string equal for two algebras iff they are isomorphic.

    Color refinement over all six symbols, then the minimal serialization over
    all color-respecting relabelings.  Chains refine to singletons (height is
    injective), so the identity is the only candidate there.
    """
    if A.size > 255:
        raise CapExceeded("canonical_key supports sizes up to 255")
    col = _refine_colors(A)
    blocks = {}
    for e in range(A.size):
        blocks.setdefault(col[e], []).append(e)
    blocks = [blocks[c] for c in sorted(blocks)]
    work = 1
    for b in blocks:
        for i in range(2, len(b) + 1):
            work *= i
    if work > 50000:
        raise CapExceeded("too many symmetries for canonical labeling")
    best = None
    for combo in itertools.product(*[itertools.permutations(b) for b in blocks]):
        ordering = [e for blk in combo for e in blk]  # new index -> old element
        perm = [0] * A.size
        for new, old in enumerate(ordering):
            perm[old] = new
        s = _serialize(A, perm)
        if best is None or s < best:
            best = s
    return best


def are_isomorphic(A, B):
    if A.size != B.size:
        return False
    return canonical_key(A) == canonical_key(B)


def order_dual(A):
    """Reverse the order, swap oplus/odot and zero/one (relabeled so chains
    stay in numeric order)."""
    n = A.size
    p = [n - 1 - i for i in range(n)]

    def flip(t):
        return tuple(tuple(p[t[p[i]][p[j]]] for j in range(n))
                     for i in range(n))

    return make_algebra(n, p[A.one], p[A.zero], flip(A.odot), flip(A.oplus),
                        join=flip(A.meet), meet=flip(A.join),
                        name=f"dual({A.name})" if A.name else "")


# ---------------------------------------------------------------------------
# commutative lattice-ordered monoids (for the Gamma-of-lex construction)

@dataclass(frozen=True)
class FiniteLMonoid:
    size: int
    zero: int
    plus: Table
    join: Table
    meet: Table
    chain_flag: bool
    name: str = field(default="", compare=False)

    def leq(self, a, b):
        return self.join[a][b] == b


def make_lmonoid(size, zero, plus, join=None, meet=None, name="",
                 validate=True):
    if size < 1:
        raise NotAnLMonoid("size must be >= 1")
    chain = join is None and meet is None
    if chain:
        join, meet = max_table(size), min_table(size)
    plus, join, meet = _freeze(plus), _freeze(join), _freeze(meet)
    if validate:
        for what, t in (("plus", plus), ("join", join), ("meet", meet)):
            _check_table(t, size, what)
        if not 0 <= zero < size:
            raise TableOutOfRange("zero outside 0..n-1")
        n = size
        for i in range(n):
            if plus[zero][i] != i:
                raise NotAnLMonoid("zero is not a +-unit", (zero, i))
            for j in range(n):
                if join[i][j] != join[j][i] or meet[i][j] != meet[j][i]:
                    raise NotAnLMonoid("lattice commutativity fails", (i, j))
                if join[i][meet[i][j]] != i or meet[i][join[i][j]] != i:
                    raise NotAnLMonoid("absorption fails", (i, j))
                if plus[i][j] != plus[j][i]:
                    raise NotAnLMonoid("+ commutativity fails", (i, j))
                for k in range(n):
                    if join[join[i][j]][k] != join[i][join[j][k]]:
                        raise NotAnLMonoid("join associativity fails", (i, j, k))
                    if meet[meet[i][j]][k] != meet[i][meet[j][k]]:
                        raise NotAnLMonoid("meet associativity fails", (i, j, k))
                    if meet[i][join[j][k]] != join[meet[i][j]][meet[i][k]]:
                        raise NotAnLMonoid("distributivity fails", (i, j, k))
                    if plus[plus[i][j]][k] != plus[i][plus[j][k]]:
                        raise NotAnLMonoid("+ associativity fails", (i, j, k))
                    if plus[i][join[j][k]] != join[plus[i][j]][plus[i][k]]:
                        raise NotAnLMonoid("+ over join fails", (i, j, k))
                    if plus[i][meet[j][k]] != meet[plus[i][j]][plus[i][k]]:
                        raise NotAnLMonoid("+ over meet fails", (i, j, k))
    if not chain:
        chain = join == max_table(size) and meet == min_table(size)
    return FiniteLMonoid(size, zero, plus, join, meet, chain, name=name)


def load_lmonoid(doc):
    if not isinstance(doc, dict):
        raise MalformedDocument("l-monoid document must be a JSON object")
    try:
        size, zero, plus = doc["size"], doc["zero"], doc["plus"]
    except KeyError as exc:
        raise MalformedDocument(f"missing field {exc}") from None
    return make_lmonoid(size, zero, plus, join=doc.get("join"),
                        meet=doc.get("meet"), name=doc.get("name", ""))
