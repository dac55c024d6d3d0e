import pytest

from mvmlab import Poset, downset_lattice, enumerate_chain, si_poset
from mvmlab.errors import CapExceeded
from mvmlab.posets import boolean_poset, chain_poset


def test_transitive_closure_and_leq():
    P = Poset("abc", [("a", "b"), ("b", "c")])
    assert P.leq("a", "c") and P.leq("a", "a")
    assert not P.leq("c", "a")


def test_covers_skip_transitive_edges():
    P = Poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert sorted(P.covers()) == [("a", "b"), ("b", "c")]


def test_minimal_maximal_height():
    P = Poset("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    assert P.minimal() == ["a"] and P.maximal() == ["d"]
    assert P.height("a") == 0 and P.height("b") == 1 and P.height("d") == 3


def test_chain_downsets():
    # downsets of an n-chain: the n+1 initial segments
    for n in range(5):
        assert len(chain_poset(n).downsets()) == n + 1


def test_antichain_downsets():
    P = Poset("abc", [])
    assert len(P.downsets()) == 8  # all subsets
    assert frozenset("ab") in P.downsets()


def test_downsets_are_downward_closed():
    P = boolean_poset(2)
    for d in P.downsets():
        for b in d:
            for a in P.labels:
                if P.leq(a, b):
                    assert a in d


def test_downset_lattice_of_the_two_element_antichain():
    D = downset_lattice(Poset("ab", []))
    assert len(D) == 4
    assert D.is_isomorphic_to(boolean_poset(2))


def test_downset_cap():
    with pytest.raises(CapExceeded):
        Poset(range(20), []).downsets()


def test_isomorphism_testing():
    C3 = chain_poset(3)
    assert C3.is_isomorphic_to(Poset("xyz", [("x", "y"), ("y", "z")]))
    assert not C3.is_isomorphic_to(Poset("xyz", []))
    assert not C3.is_isomorphic_to(chain_poset(4))
    V = Poset("abc", [("a", "b"), ("a", "c")])
    hat = Poset("abc", [("b", "a"), ("c", "a")])
    assert not V.is_isomorphic_to(hat)


def test_to_dot_is_stable_and_well_formed():
    P = Poset("ba", [("b", "a")])
    dot = P.to_dot(name="g")
    assert dot == P.to_dot(name="g")
    assert dot.startswith("digraph g {") and dot.endswith("}\n")
    assert '"b"' in dot and "->" in dot


def test_as_dict_sorts_output():
    P = Poset("cab", [("c", "a"), ("a", "b")])
    d = P.as_dict()
    assert d["nodes"] == ["a", "b", "c"]
    assert d["covers"] == [["a", "b"], ["c", "a"]]


def test_si_downset_lattice_regression_golden():
    # lattice of downsets of the SI poset up to size 4: frozen count
    sis = [A for n in (2, 3, 4) for A in enumerate_chain(n, "si")]
    P = si_poset(sis)
    assert len(P) == 11
    assert len(downset_lattice(P)) == 189
