"""Term language over the signature (+ = oplus, * = odot, v = join, ^^ = meet),
parser, evaluator and (quasi-)equation satisfaction in finite algebras.

Term nodes are interned (hash-consed): structurally equal terms are the same
object, which makes sharing-heavy generated terms cheap to evaluate with a
per-assignment memo.
"""

import itertools

from .errors import MissingAssignment, TermSyntaxError


class Term:
    __slots__ = ()

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"<term {to_text(self)}>"


class Var(Term):
    __slots__ = ("index",)


class Const(Term):
    __slots__ = ("which",)  # "zero" | "one"


class BinOp(Term):
    __slots__ = ("op", "left", "right")  # op: oplus | odot | join | meet


_interned = {}


def _intern(key, build):
    t = _interned.get(key)
    if t is None:
        t = build()
        _interned[key] = t
    return t


def var(i):
    def build():
        t = Var()
        t.index = i
        return t
    return _intern(("var", i), build)


def const(which):
    def build():
        t = Const()
        t.which = which
        return t
    return _intern(("const", which), build)


def binop(op, left, right):
    def build():
        t = BinOp()
        t.op, t.left, t.right = op, left, right
        return t
    return _intern((op, id(left), id(right)), build)


def oplus(l, r):
    return binop("oplus", l, r)


def odot(l, r):
    return binop("odot", l, r)


def join(l, r):
    return binop("join", l, r)


def meet(l, r):
    return binop("meet", l, r)


def scalar(k, t):
    """k t = t + ... + t (left-nested); 0 t is the constant zero."""
    if k == 0:
        return const("zero")
    out = t
    for _ in range(k - 1):
        out = oplus(out, t)
    return out


def power(t, k):
    """t^k = t * ... * t (left-nested); t^0 is the constant one."""
    if k == 0:
        return const("one")
    out = t
    for _ in range(k - 1):
        out = odot(out, t)
    return out


class Equation:
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs, self.rhs = lhs, rhs

    def __eq__(self, other):
        return (isinstance(other, Equation)
                and self.lhs is other.lhs and self.rhs is other.rhs)

    def __hash__(self):
        return hash((id(self.lhs), id(self.rhs)))

    def __str__(self):
        return f"{to_text(self.lhs)} ≈ {to_text(self.rhs)}"

    def __repr__(self):
        return f"<eq {self}>"


class QuasiEquation:
    __slots__ = ("premises", "conclusion")

    def __init__(self, premises, conclusion):
        self.premises = tuple(premises)
        self.conclusion = conclusion

    def __str__(self):
        pre = " & ".join(str(e) for e in self.premises)
        return f"{pre} => {self.conclusion}"


# ---------------------------------------------------------------------------
# printing

_OP_SYMBOL = {"oplus": "+", "odot": "*", "join": "v", "meet": "^^"}


def var_name(i):
    return {0: "x", 1: "y", 2: "z"}.get(i, f"x{i}")


def to_text(t):
    if isinstance(t, Var):
        return var_name(t.index)
    if isinstance(t, Const):
        return "0" if t.which == "zero" else "1"
    return f"({to_text(t.left)} {_OP_SYMBOL[t.op]} {to_text(t.right)})"


# ---------------------------------------------------------------------------
# parsing

_VARS = {"x": 0, "y": 1, "z": 2}


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if text.startswith("=>", i):
            toks.append(("ARROW", "=>", i))
            i += 2
        elif c in "≈=":
            toks.append(("EQ", c, i))
            i += 1
        elif text.startswith("^^", i):
            toks.append(("MEET", "^^", i))
            i += 2
        elif c == "^":
            toks.append(("POW", "^", i))
            i += 1
        elif c in "+*&()":
            toks.append((c, c, i))
            i += 1
        elif c == "v":
            toks.append(("JOIN", "v", i))
            i += 1
        elif c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", int(text[i:j]), i))
            i = j
        elif c in _VARS:
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j > i + 1:
                if c != "x":
                    raise TermSyntaxError(f"indexed variables use x<digits>", i)
                toks.append(("VAR", int(text[i + 1:j]), i))
            else:
                toks.append(("VAR", _VARS[c], i))
            i = j
        else:
            raise TermSyntaxError(f"unexpected character {c!r}", i)
    toks.append(("END", None, n))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        k, v, p = self.next()
        if k != kind:
            raise TermSyntaxError(f"expected {kind}, got {v!r}", p)
        return v

    def expr(self):
        t = self.meet_level()
        while self.peek()[0] == "JOIN":
            self.next()
            t = join(t, self.meet_level())
        return t

    def meet_level(self):
        t = self.sum_level()
        while self.peek()[0] == "MEET":
            self.next()
            t = meet(t, self.sum_level())
        return t

    def sum_level(self):
        t = self.prod_level()
        while self.peek()[0] == "+":
            self.next()
            t = oplus(t, self.prod_level())
        return t

    def prod_level(self):
        t = self.scalar_level()
        while self.peek()[0] == "*":
            self.next()
            t = odot(t, self.scalar_level())
        return t

    def _starts_atom(self):
        k, v, _ = self.peek()
        return k in ("VAR", "(", "INT")

    def scalar_level(self):
        k, v, p = self.peek()
        if k == "INT":
            self.next()
            if self._starts_atom():
                return scalar(v, self.scalar_level())
            if v == 0:
                return const("zero")
            if v == 1:
                return const("one")
            raise TermSyntaxError(f"bare integer {v} is not a term", p)
        return self.postfix()

    def postfix(self):
        t = self.atom()
        while self.peek()[0] == "POW":
            self.next()
            t = power(t, self.expect("INT"))
        return t

    def atom(self):
        k, v, p = self.next()
        if k == "VAR":
            return var(v)
        if k == "(":
            t = self.expr()
            self.expect(")")
            return t
        raise TermSyntaxError(f"unexpected token {v!r}", p)

    def equation(self):
        lhs = self.expr()
        self.expect("EQ")
        return Equation(lhs, self.expr())


def parse(text):
    """Parse a term, an equation, or a quasi-equation (`eq & eq => eq`)."""
    p = _Parser(text)
    kinds = {k for k, _, _ in p.toks}
    if "ARROW" in kinds:
        premises = [p.equation()]
        while p.peek()[0] == "&":
            p.next()
            premises.append(p.equation())
        p.expect("ARROW")
        conclusion = p.equation()
        p.expect("END")
        return QuasiEquation(premises, conclusion)
    if "EQ" in kinds:
        eq = p.equation()
        p.expect("END")
        return eq
    t = p.expr()
    p.expect("END")
    return t


# ---------------------------------------------------------------------------
# evaluation and satisfaction

def variables(t, _seen=None):
    # terms are interned DAGs; track visited nodes or the walk is exponential
    if _seen is None:
        _seen = set()
    if t in _seen:
        return set()
    _seen.add(t)
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, Const):
        return set()
    return variables(t.left, _seen) | variables(t.right, _seen)


def _num_vars(*terms):
    vs = set()
    seen = set()
    for t in terms:
        vs |= variables(t, seen)
    return max(vs) + 1 if vs else 0


def _normalize_env(env):
    out = {}
    for k, v in (env or {}).items():
        if isinstance(k, str):
            if k in _VARS:
                k = _VARS[k]
            elif k.startswith("x") and k[1:].isdigit():
                k = int(k[1:])
            else:
                raise MissingAssignment(f"unknown variable name {k!r}")
        out[k] = v
    return out


def _eval(t, A, env, memo):
    v = memo.get(t)
    if v is not None:
        return v
    if isinstance(t, Var):
        try:
            v = env[t.index]
        except (IndexError, KeyError):
            raise MissingAssignment(f"no value for {var_name(t.index)}") from None
    elif isinstance(t, Const):
        v = A.zero if t.which == "zero" else A.one
    else:
        l = _eval(t.left, A, env, memo)
        r = _eval(t.right, A, env, memo)
        v = getattr(A, t.op)[l][r]
    memo[t] = v
    return v


def evaluate(t, A, env=None):
    return _eval(t, A, _normalize_env(env), {})


class CheckResult:
    """Truthy iff the (quasi-)equation holds; otherwise carries the
    lexicographically least failing assignment (and the failing equation for
    axiom sets)."""

    __slots__ = ("passed", "witness", "equation")

    def __init__(self, passed, witness=None, equation=None):
        self.passed = passed
        self.witness = witness
        self.equation = equation

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "CheckResult(passed)"
        return f"CheckResult(failed, witness={self.witness}, eq={self.equation})"

    def witness_named(self):
        if self.witness is None:
            return None
        return {var_name(i): v for i, v in enumerate(self.witness)}


def satisfies(A, e):
    """Check an Equation, or anything with an `.equations` attribute (axiom
    sets); assignments are scanned in lexicographic order."""
    eqs = getattr(e, "equations", None)
    if eqs is not None:
        return satisfies_all(A, eqs)
    nv = _num_vars(e.lhs, e.rhs)
    for env in itertools.product(range(A.size), repeat=nv):
        memo = {}
        if _eval(e.lhs, A, env, memo) != _eval(e.rhs, A, env, memo):
            return CheckResult(False, witness=env, equation=e)
    return CheckResult(True)


def satisfies_all(A, equations):
    """Equations grouped by variable count share one evaluation memo per
    assignment; verdict and least witness match checking them one by one."""
    equations = list(equations)
    groups = {}
    for idx, e in enumerate(equations):
        groups.setdefault(_num_vars(e.lhs, e.rhs), []).append((idx, e))
    best = None  # (eq index, witness)
    for nv, group in sorted(groups.items()):
        for env in itertools.product(range(A.size), repeat=nv):
            memo = {}
            for idx, e in group:
                if _eval(e.lhs, A, env, memo) != _eval(e.rhs, A, env, memo):
                    if best is None or idx < best[0] or \
                            (idx == best[0] and env < best[1]):
                        best = (idx, env, e)
                    break
    if best is None:
        return CheckResult(True)
    return CheckResult(False, witness=best[1], equation=best[2])


def satisfies_quasi(A, q):
    nv = _num_vars(*[t for e in q.premises for t in (e.lhs, e.rhs)],
                   q.conclusion.lhs, q.conclusion.rhs)
    for env in itertools.product(range(A.size), repeat=nv):
        memo = {}
        if all(_eval(e.lhs, A, env, memo) == _eval(e.rhs, A, env, memo)
               for e in q.premises):
            c = q.conclusion
            if _eval(c.lhs, A, env, memo) != _eval(c.rhs, A, env, memo):
                return CheckResult(False, witness=env, equation=c)
    return CheckResult(True)


CANCELLATIVITY = parse("x + z ≈ y + z & x * z ≈ y * z => x ≈ y")
