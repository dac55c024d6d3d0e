import itertools
import random

import pytest

from mvmlab import (catalog, catalog_names, chain_algebra, cn_delta, cn_nabla,
                    lm_delta, lm_nabla, ln_plus, make_algebra)


@pytest.fixture(scope="session")
def catalog_algebras():
    return {name: catalog(name) for name in catalog_names()}


@pytest.fixture(scope="session")
def diamond():
    # 2x2 lattice 0 < {1, 2} < 3 with 1, 2 incomparable
    join = [[0, 1, 2, 3], [1, 1, 3, 3], [2, 3, 2, 3], [3, 3, 3, 3]]
    meet = [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 2, 2], [0, 1, 2, 3]]
    return make_algebra(4, 0, 3, join, meet, join=join, meet=meet,
                        name="diamond")


def relabel(A, perm):
    """Image of A under the permutation perm (old element -> new element)."""
    n = A.size
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old

    def table(t):
        return [[perm[t[inv[i]][inv[j]]] for j in range(n)] for i in range(n)]

    return make_algebra(n, perm[A.zero], perm[A.one],
                        table(A.oplus), table(A.odot),
                        join=table(A.join), meet=table(A.meet))


def shuffled(A, seed):
    rng = random.Random(seed)
    perm = list(range(A.size))
    rng.shuffle(perm)
    return relabel(A, perm)
