"""Command-line front end: verdicts as JSON, posets/lattices as JSON or DOT,
and `repro` pipelines that recompute the survey figures from first
principles."""

import argparse
import hashlib
import json
import os
import sys

from . import algebra, congruences, constructions, enumeration, morphisms
from . import posets, terms, varieties
from .axioms import is_mv_monoid, is_positive_mv, si_necessary_condition
from .errors import MvmError, UnknownName, UnknownTarget


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def _key_tag(A):
    return hashlib.sha256(algebra.canonical_key(A)).hexdigest()[:8]


def _registry():
    """Canonical key -> display name for every named algebra we can build."""
    reg = {}

    def put(A):
        reg.setdefault(algebra.canonical_key(A), A.name)

    put(algebra.trivial_algebra())
    for n in range(1, 9):
        put(constructions.ln_plus(n))
    for n in range(2, 8):
        put(constructions.cn_delta(n))
        put(constructions.cn_nabla(n))
        put(constructions.lm_delta(n))
        put(constructions.lm_nabla(n))
    for name in constructions.catalog_names():
        put(constructions.catalog(name))
    return reg


def identify(A, reg=None):
    reg = _registry() if reg is None else reg
    key = algebra.canonical_key(A)
    return reg.get(key, f"size{A.size}_{_key_tag(A)}")


def _parse_set(text):
    items = [s for s in text.split(",") if s.strip()]
    return varieties.DivisorClosedSet(int(s) for s in items)


def _load_arg(path):
    return algebra.load_file(path)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_axioms(args, out):
    report = is_mv_monoid(_load_arg(args.file))
    out.write(_dump(report.as_dict()) + "\n")


def _congruence_poset(lat):
    cs = lat.congruences
    labels = [str(list(c.blocks())) for c in cs]
    pairs = [(labels[i], labels[j]) for i in range(len(cs))
             for j in range(len(cs)) if cs[i].refines(cs[j])]
    return posets.Poset(labels, pairs)


def _cmd_congruences(args, out):
    A = _load_arg(args.file)
    lat = congruences.congruence_lattice(A)
    P = _congruence_poset(lat)
    if args.dot:
        out.write(P.to_dot(name="congruences"))
        return
    out.write(_dump({
        "size": len(lat),
        "is_chain": lat.is_chain(),
        "congruences": [[list(b) for b in c.blocks()]
                        for c in lat.congruences],
        "covers": list(lat.covers),
    }) + "\n")


_PARAMETRIC = {
    "ln_plus": constructions.ln_plus,
    "cn_delta": constructions.cn_delta,
    "cn_nabla": constructions.cn_nabla,
    "lm_delta": constructions.lm_delta,
    "lm_nabla": constructions.lm_nabla,
}


def _cmd_construct(args, out):
    if args.name == "gamma-lex":
        if not args.lmonoid:
            raise UnknownName("construct gamma-lex needs an l-monoid file")
        with open(args.lmonoid) as fh:
            M = algebra.load_lmonoid(json.load(fh))
        A = constructions.gamma_of_lex(M)
    elif args.name in _PARAMETRIC:
        if args.n is None:
            raise UnknownName(f"construct {args.name} needs --n")
        A = _PARAMETRIC[args.name](args.n)
    else:
        A = constructions.catalog(args.name)
    doc = _dump(algebra.save(A)) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc)
    else:
        out.write(doc)


def _cmd_enumerate(args, out):
    algebras = enumeration.enumerate_chain(args.size, args.filter)
    if args.count_only:
        out.write(_dump({"size": args.size, "filter": args.filter,
                         "count": len(algebras)}) + "\n")
        return
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for i, A in enumerate(algebras):
            path = os.path.join(args.out, f"chain{args.size}_{i}.json")
            with open(path, "w") as fh:
                fh.write(_dump(algebra.save(A.rename(f"chain{args.size}_{i}")))
                         + "\n")
        out.write(_dump({"written": len(algebras), "dir": args.out}) + "\n")
        return
    out.write(_dump([algebra.save(A) for A in algebras]) + "\n")


def _witness(res):
    return None if res.passed else res.witness_named()


def _cmd_check_eq(args, out):
    A = _load_arg(args.file)
    parsed = terms.parse(args.eq)
    if isinstance(parsed, terms.QuasiEquation):
        res = terms.satisfies_quasi(A, parsed)
    elif isinstance(parsed, terms.Equation):
        res = terms.satisfies(A, parsed)
    else:
        raise MvmError("--eq must be an equation or quasi-equation")
    out.write(_dump({"holds": res.passed, "witness": _witness(res)}) + "\n")


def _axiomset_verdict(A, aset):
    res = terms.satisfies(A, aset)
    return {"axiom_set": aset.name,
            "equations": [str(e) for e in aset.equations],
            "holds": res.passed,
            "witness": _witness(res),
            "failing_equation": None if res.passed else str(res.equation)}


def _cmd_phi(args, out):
    out.write(_dump(_axiomset_verdict(_load_arg(args.file),
                                      varieties.phi(args.n))) + "\n")


def _cmd_sigma(args, out):
    out.write(_dump(_axiomset_verdict(_load_arg(args.file),
                                      varieties.sigma(_parse_set(args.set))))
              + "\n")


def _cmd_member(args, out):
    A = _load_arg(args.file)
    I = _parse_set(args.set)
    out.write(_dump({"set": list(I), "member": varieties.member_of_variety(A, I)})
              + "\n")


def _cmd_classify(args, out):
    gens = [_load_arg(f) for f in args.files]
    I = varieties.classify_variety(gens)
    out.write(_dump({"set": list(I)}) + "\n")


def _cmd_hsu(args, out):
    gens = [_load_arg(f) for f in args.files]
    reg = _registry()
    closure = morphisms.hs_closure(gens)
    names = sorted(identify(A, reg) for A in closure.values())
    out.write(_dump({"classes": names}) + "\n")


def _named_si_poset(algebras):
    reg = _registry()
    P = morphisms.si_poset(algebras)
    names = {k: identify(P.algebras[k], reg) for k in P.labels}
    named = posets.Poset([names[k] for k in P.labels],
                         [(names[a], names[b]) for a in P.labels
                          for b in P.labels if P.leq(a, b)])
    return named


def _poset_out(P, args, out, dot_name):
    reg = None
    if args.dot:
        out.write(P.to_dot(name=dot_name))
    else:
        out.write(_dump(P.as_dict()) + "\n")


def _cmd_poset(args, out):
    gens = [_load_arg(f) for f in args.files]
    _poset_out(_named_si_poset(gens), args, out, "si_poset")


def _downset_label(s):
    return "{" + ",".join(sorted(s)) + "}"


def _cmd_downsets(args, out):
    with open(args.file) as fh:
        doc = json.load(fh)
    P = posets.Poset(doc["nodes"], [tuple(p) for p in doc.get("leq", [])])
    D = posets.downset_lattice(P)
    if args.dot:
        out.write(D.to_dot(name="downsets", label_of=_downset_label))
    else:
        out.write(_dump(D.as_dict(label_of=_downset_label)) + "\n")


# ---------------------------------------------------------------------------
# figure reproduction

def _si_algebras_up_to(max_size):
    out = []
    for n in range(2, max_size + 1):
        out.extend(enumeration.enumerate_chain(n, "si"))
    return out


def _variety_poset(generators):
    """Poset of the varieties generated by each single algebra, ordered by
    generator HSU membership (single SI or hereditarily-small generators)."""
    reg = _registry()
    keyed = {}
    for A in generators:
        keyed.setdefault(algebra.canonical_key(A), A)
    closures = {k: set(morphisms.hs_closure([A])) for k, A in keyed.items()}
    names = {k: identify(keyed[k], reg) for k in keyed}
    pairs = [(names[a], names[b]) for a in keyed for b in keyed
             if a in closures[b]]
    return posets.Poset(list(names.values()), pairs)


def _primes_up_to(n):
    return [p for p in range(2, n + 1)
            if all(p % d for d in range(2, p))]


def _repro_fig1(args, out):
    depth = args.depth or 5
    gens = [algebra.trivial_algebra(), constructions.ln_plus(1),
            constructions.cn_delta(2), constructions.cn_nabla(2)]
    gens += [constructions.ln_plus(p) for p in _primes_up_to(depth)]
    P = _variety_poset(gens)
    if args.dot:
        out.write(P.to_dot(name="fig1"))
        out.write("// chain continues: one atom V(Lp+) per prime p\n")
    else:
        doc = P.as_dict()
        doc["continues"] = True
        out.write(_dump(doc) + "\n")


def _repro_fig2(args, out):
    depth = args.depth or 4
    gens = [algebra.trivial_algebra(), constructions.ln_plus(1)]
    for n in range(2, depth + 1):
        gens.append(constructions.cn_delta(n))
        gens.append(constructions.cn_nabla(n))
        gens.append(constructions.ln_plus(n))
    P = _variety_poset(gens)
    if args.dot:
        out.write(P.to_dot(name="fig2"))
        out.write("// chains continue upward for every n\n")
    else:
        doc = P.as_dict()
        doc["continues"] = True
        out.write(_dump(doc) + "\n")


def _algebra_summary(A, reg):
    return {"name": identify(A, reg), "size": A.size,
            "oplus": [list(r) for r in A.oplus],
            "odot": [list(r) for r in A.odot]}


def _repro_fig3(args, out):
    reg = _registry()
    algebras = enumeration.enumerate_chain(3, "all")
    out.write(_dump([_algebra_summary(A, reg) for A in algebras]) + "\n")


def _repro_fig4(args, out):
    reg = _registry()
    algebras = enumeration.enumerate_chain(4, "si-necessary")
    out.write(_dump([_algebra_summary(A, reg) for A in algebras]) + "\n")


def _repro_fig6(args, out):
    n = 4
    pure = algebra.chain_algebra(
        n, [[max(i, j) for j in range(n)] for i in range(n)],
        [[min(i, j) for j in range(n)] for i in range(n)], name="L3")
    lat = congruences.congruence_lattice(pure)
    P = _congruence_poset(lat)
    if args.dot:
        out.write(P.to_dot(name="fig6"))
    else:
        out.write(_dump(P.as_dict()) + "\n")


def _repro_fig7(args, out):
    P = _named_si_poset(_si_algebras_up_to(4))
    _poset_out(P, args, out, "fig7")


def _repro_fig8(args, out):
    seeds = [constructions.catalog("A3n"), constructions.catalog("B3d")]
    closure = morphisms.hs_closure(seeds)
    sis = [A for A in closure.values()
           if congruences.is_subdirectly_irreducible(A)[0]]
    D = posets.downset_lattice(_named_si_poset(sis))
    if args.dot:
        out.write(D.to_dot(name="fig8", label_of=_downset_label))
    else:
        out.write(_dump(D.as_dict(label_of=_downset_label)) + "\n")


def _repro_fig9(args, out):
    D = posets.downset_lattice(_named_si_poset(_si_algebras_up_to(3)))
    if args.dot:
        out.write(D.to_dot(name="fig9", label_of=_downset_label))
    else:
        out.write(_dump(D.as_dict(label_of=_downset_label)) + "\n")


def _repro_counts(args, out):
    out.write(_dump({
        "size3": len(enumeration.enumerate_chain(3, "all")),
        "size4_total": len(enumeration.enumerate_chain(4, "all")),
        "size4_siNecessary": len(enumeration.enumerate_chain(4, "si-necessary")),
        "size5_siNecessary": len(enumeration.enumerate_chain(5, "si-necessary")),
    }) + "\n")


_REPRO = {
    "fig1": _repro_fig1,
    "fig2": _repro_fig2,
    "fig3": _repro_fig3,
    "fig4": _repro_fig4,
    "fig6": _repro_fig6,
    "fig7": _repro_fig7,
    "fig8": _repro_fig8,
    "fig9": _repro_fig9,
    "counts": _repro_counts,
}


def _cmd_repro(args, out):
    if args.target not in _REPRO:
        raise UnknownTarget(f"unknown repro target {args.target!r}; "
                            f"valid: {', '.join(sorted(_REPRO))}")
    _REPRO[args.target](args, out)


# ---------------------------------------------------------------------------

def _build_parser():
    ap = argparse.ArgumentParser(
        prog="mvmlab",
        description="Finite-algebra workbench for MV-monoids and positive "
                    "MV-algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("axioms", help="check the MV-monoid axioms")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_axioms)

    p = sub.add_parser("congruences", help="congruence lattice")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=_cmd_congruences)

    p = sub.add_parser("construct", help="build a named algebra")
    p.add_argument("name")
    p.add_argument("lmonoid", nargs="?",
                   help="l-monoid file (for gamma-lex)")
    p.add_argument("--n", type=int)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("enumerate", help="enumerate chain MV-monoids")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--filter", choices=enumeration.FILTERS, default="all")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("check-eq", help="check an equation on an algebra")
    p.add_argument("file")
    p.add_argument("--eq", required=True)
    p.set_defaults(fn=_cmd_check_eq)

    p = sub.add_parser("phi", help="check the Phi_n axiom set")
    p.add_argument("file")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_phi)

    p = sub.add_parser("sigma", help="check the Sigma_I axiom set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.set_defaults(fn=_cmd_sigma)

    p = sub.add_parser("member", help="variety membership for a divisor set")
    p.add_argument("file")
    p.add_argument("--set", required=True)
    p.set_defaults(fn=_cmd_member)

    p = sub.add_parser("classify", help="divisor set of generated variety")
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("hsu", help="HSU closure as iso classes")
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=_cmd_hsu)

    p = sub.add_parser("poset", help="SI poset of the given algebras")
    p.add_argument("files", nargs="+")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=_cmd_poset)

    p = sub.add_parser("downsets", help="downset lattice of a poset file")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(fn=_cmd_downsets)

    p = sub.add_parser("repro", help="recompute a survey figure")
    p.add_argument("target")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--depth", type=int)
    p.set_defaults(fn=_cmd_repro)

    return ap


def run(argv=None, out=None):
    out = out or sys.stdout
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        args.fn(args, out)
    except (MvmError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
