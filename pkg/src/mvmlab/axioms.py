"""Named axiom suites: the defining equations of MV-monoids, cancellativity,
the necessary condition for subdirect irreducibility, and good pairs."""

from . import terms
from .terms import CANCELLATIVITY, parse, satisfies, satisfies_quasi

# Fixed ordered list with stable names so failure reports are diff-stable.
_AXIOM_TEXT = [
    ("lat.idem.1", "x v x ≈ x"),
    ("lat.idem.2", "x ^^ x ≈ x"),
    ("lat.comm.1", "x v y ≈ y v x"),
    ("lat.comm.2", "x ^^ y ≈ y ^^ x"),
    ("lat.assoc.1", "(x v y) v z ≈ x v (y v z)"),
    ("lat.assoc.2", "(x ^^ y) ^^ z ≈ x ^^ (y ^^ z)"),
    ("lat.absorb.1", "x v (x ^^ y) ≈ x"),
    ("lat.absorb.2", "x ^^ (x v y) ≈ x"),
    ("lat.dist.1", "x ^^ (y v z) ≈ (x ^^ y) v (x ^^ z)"),
    ("lat.dist.2", "x v (y ^^ z) ≈ (x v y) ^^ (x v z)"),
    ("lat.bound.0", "x v 0 ≈ x"),
    ("lat.bound.1", "x ^^ 1 ≈ x"),
    ("mon.oplus.comm", "x + y ≈ y + x"),
    ("mon.oplus.assoc", "(x + y) + z ≈ x + (y + z)"),
    ("mon.oplus.unit", "x + 0 ≈ x"),
    ("mon.odot.comm", "x * y ≈ y * x"),
    ("mon.odot.assoc", "(x * y) * z ≈ x * (y * z)"),
    ("mon.odot.unit", "x * 1 ≈ x"),
    ("dist.oplus.join", "x + (y v z) ≈ (x + y) v (x + z)"),
    ("dist.oplus.meet", "x + (y ^^ z) ≈ (x + y) ^^ (x + z)"),
    ("dist.odot.join", "x * (y v z) ≈ (x * y) v (x * z)"),
    ("dist.odot.meet", "x * (y ^^ z) ≈ (x * y) ^^ (x * z)"),
    ("conn.1", "(x + y) * ((x * y) + z) ≈ (x * (y + z)) + (y * z)"),
    ("conn.2", "(x * y) + ((x + y) * z) ≈ (x + (y * z)) * (y + z)"),
    ("conn.3", "(x * y) + z ≈ ((x + y) * ((x * y) + z)) v z"),
    ("conn.4", "(x + y) * z ≈ ((x * y) + ((x + y) * z)) ^^ z"),
]

MV_MONOID_AXIOMS = [(name, parse(text)) for name, text in _AXIOM_TEXT]


class AxiomReport:
    __slots__ = ("passed", "failures")

    def __init__(self, failures):
        self.failures = list(failures)  # (axiom name, witness assignment)
        self.passed = not self.failures

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "AxiomReport(passed)"
        return f"AxiomReport(failed: {[n for n, _ in self.failures]})"

    def as_dict(self):
        return {"passed": self.passed,
                "failures": [{"axiom": n, "witness": w}
                             for n, w in self.failures]}


def is_mv_monoid(A):
    cached = A._cache.get("mvm_report")
    if cached is not None:
        return cached
    failures = []
    for name, eq in MV_MONOID_AXIOMS:
        res = satisfies(A, eq)
        if not res:
            failures.append((name, res.witness_named()))
    report = AxiomReport(failures)
    A._cache["mvm_report"] = report
    return report


def is_positive_mv(A):
    return bool(is_mv_monoid(A)) and bool(satisfies_quasi(A, CANCELLATIVITY))


def si_necessary_condition(A):
    """Nontrivial, totally ordered, and oplus(x,y)=1 or odot(x,y)=0 for all
    pairs."""
    n = A.size
    if n <= 1:
        return False
    for i in range(n):
        for j in range(n):
            if A.join[i][j] not in (i, j):
                return False
            if A.oplus[i][j] != A.one and A.odot[i][j] != A.zero:
                return False
    return True


def is_good_pair(A, x0, x1):
    return A.oplus[x0][x1] == x0 and A.odot[x0][x1] == x1
