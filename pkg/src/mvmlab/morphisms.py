"""Homomorphism enumeration, HS closure over isomorphism classes, and the
poset of subdirectly irreducible algebras ordered by HSU membership."""

import warnings

from .algebra import canonical_key
from .caps import cap
from .congruences import congruence_lattice, is_subdirectly_irreducible
from .constructions import quotient, subalgebras
from .errors import CapExceeded
from .posets import Poset


def homomorphisms(A, B):
    """All maps A -> B preserving the four operations and 0, 1, as tuples
    indexed by elements of A; backtracking in element order with forward
    checking on already-assigned table constraints."""
    if B.size ** A.size > cap("HOM"):
        raise CapExceeded("homomorphism search space exceeds cap")
    tables = ((A.join, B.join), (A.meet, B.meet),
              (A.oplus, B.oplus), (A.odot, B.odot))
    f = [None] * A.size
    out = []

    def consistent(x):
        # forward check only; pairs whose table result is assigned later are
        # re-verified by the complete() pass
        for ta, tb in tables:
            for y in range(A.size):
                if f[y] is None:
                    continue
                for u, v in ((x, y), (y, x)):
                    w = ta[u][v]
                    if f[w] is not None and tb[f[u]][f[v]] != f[w]:
                        return False
        return True

    def complete():
        return all(tb[f[u]][f[v]] == f[ta[u][v]]
                   for ta, tb in tables
                   for u in range(A.size) for v in range(A.size))

    def assign(x):
        if x == A.size:
            if complete():
                out.append(tuple(f))
            return
        if x == A.zero:
            candidates = [B.zero]
        elif x == A.one:
            candidates = [B.one]
        else:
            candidates = range(B.size)
        for v in candidates:
            f[x] = v
            if consistent(x):
                assign(x + 1)
            f[x] = None

    assign(0)
    return out


def hs_closure(S):
    """Close a set of algebras under subalgebras and quotients, to fixpoint,
    deduplicating by canonical key; returns {key: algebra}."""
    found = {}
    frontier = []
    for A in S:
        k = canonical_key(A)
        if k not in found:
            found[k] = A
            frontier.append(A)
    # S then H, iterated: HS is not contained in SH in general
    while frontier:
        new = []
        for A in frontier:
            produced = [sub for sub, _ in subalgebras(A)]
            produced += [quotient(A, th)
                         for th in congruence_lattice(A).congruences]
            for B in produced:
                k = canonical_key(B)
                if k not in found:
                    found[k] = B
                    new.append(B)
        frontier = new
    return found


def si_poset(S):
    """Iso classes of S ordered by: A <= B iff A lies in the HS closure of
    {B}."""
    reps = {}
    for A in S:
        reps.setdefault(canonical_key(A), A)
    for k, A in reps.items():
        si, _ = is_subdirectly_irreducible(A)
        if not si:
            warnings.warn(f"si_poset input {A!r} is not subdirectly "
                          "irreducible")
    closures = {k: set(hs_closure([A])) for k, A in reps.items()}
    keys = list(reps)
    pairs = [(a, b) for a in keys for b in keys if a in closures[b]]
    P = Poset(keys, pairs)
    P.algebras = reps  # key -> representative, for labeling
    return P
