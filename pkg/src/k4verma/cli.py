"""Command-line driver.  Exit status: 0 all checks pass, 1 a check failed, 2 usage error."""

from __future__ import annotations

import argparse
import csv
import random
import sys
from dataclasses import dataclass, field

from . import characters, conformal, contact, homology, morphisms
from .enveloping import theta, w
from .scalars import gq
from .verma import ModuleSpec, lie_action_failures

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    """Ordered PASS/FAIL lines plus free-form rows."""

    fmt: str = "table"
    lines: list = field(default_factory=list)
    failed: bool = False

    def check(self, ok: bool, label: str) -> bool:
        self.failed |= not ok
        self.lines.append(("PASS" if ok else "FAIL", label))
        return ok

    def emit(self, out) -> int:
        if self.fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(["status", "check"])
            writer.writerows(self.lines)
        else:
            for status, label in self.lines:
                out.write(f"{status} {label}\n")
        return EXIT_FAIL if self.failed else EXIT_OK


# verify-axioms -------------------------------------------------------------------------


def structure_constant_checks() -> list[tuple[bool, str]]:
    one = contact.SuperElement({contact.ContactMonomial(0, ()): gq(1)})
    out = []
    for i in contact.FULL:
        x = contact.xi(i)
        out.append((contact.contact_bracket(x, x) == one * -1, f"[xi{i},xi{i}] = -1"))
    out.append((contact.contact_bracket(one, contact.xi(1, 2, 3, 4)) == contact.SuperElement.central(gq(-2)),
                "[1,xi1234] = -2C"))

    def anti(a, b):
        return w(a) * w(b) + w(b) * w(a)

    out.append((anti("w11", "w22") == theta() * 4, "{w11,w22} = 4 Theta"))
    out.append((anti("w12", "w21") == theta() * -4, "{w12,w21} = -4 Theta"))
    others = [("w11", "w21"), ("w11", "w12"), ("w21", "w22"), ("w12", "w22")]
    out.append((all(not anti(a, b) for a, b in others), "remaining w anticommutators vanish"))
    out.append((all(not (w(a) * w(a)) for a in ("w11", "w21", "w12", "w22")), "w_ij^2 = 0"))
    return out


def conformal_failures() -> dict:
    gens = conformal.generators()
    return {
        "derivation": [(a, b) for a in gens for b in gens if not conformal.check_derivation_axiom(a, b)],
        "skew": [(a, b) for a in gens for b in gens if not conformal.check_skew_symmetry(a, b)],
        "jacobi": [
            (a, b, c) for a in gens for b in gens for c in gens if not conformal.check_jacobi(a, b, c)
        ],
    }


def annihilation_mismatches(max_pow: int = 2) -> list:
    """Pairs where the mode bracket differs from the contact bracket (central part aside)."""
    bad = []
    gens = conformal.generators()
    for a in gens:
        for b in gens:
            (_, I), (_, J) = next(iter(a.terms)), next(iter(b.terms))
            for m in range(max_pow + 1):
                for k in range(max_pow + 1):
                    lhs = conformal.to_contact(conformal.annihilation_bracket(a, m, b, k))
                    rhs = contact.contact_bracket(contact.xi(*I, tpow=m), contact.xi(*J, tpow=k))
                    rhs = contact.SuperElement({mm: c for mm, c in rhs.terms.items() if not mm.central})
                    if lhs != rhs:
                        bad.append((I, m, J, k))
    return bad


def cmd_verify_axioms(args, rep: Report) -> None:
    n = sum(len(contact.basis(d)) for d in range(-2, 4))
    rep.check(not contact.skew_symmetry_failures(), f"contact skew-symmetry on {n * n} basis pairs")
    rep.check(not contact.jacobi_failures(), f"contact Jacobi on {n ** 3} basis triples")
    rep.check(not contact.cocycle_failures(), "cocycle identity for psi")
    conf = conformal_failures()
    rep.check(not conf["derivation"], "conformal derivation axiom on 16 generators")
    rep.check(not conf["skew"], "conformal skew-symmetry on 16 generators")
    rep.check(not conf["jacobi"], "conformal Jacobi on 16^3 generator triples")
    rep.check(not annihilation_mismatches(), "mode brackets agree with the contact bracket")
    for ok, label in structure_constant_checks():
        rep.check(ok, label)
    rng = random.Random(args.seed)
    for spec in ("A:1,1", "B:-1,1", "C:-1,-1", "D:1,-1"):
        bad = lie_action_failures(ModuleSpec.parse(spec), rng, trials=args.trials)
        rep.check(not bad, f"action is a Lie action on {spec} ({args.trials} trials, seed {args.seed})")


# singular vectors -----------------------------------------------------------------------


def cmd_verify_singular(args, rep: Report) -> None:
    inst = morphisms.family_instances(args.bound)
    spaces: dict = {}
    for fam, m, n in inst:
        v = morphisms.classified_vector(fam, m, n)
        ok = morphisms.is_singular(v, "highest_weight") and morphisms.is_singular(v, "full")
        key = (v.module, v.degree())
        if key not in spaces:
            spaces[key] = morphisms.singular_space(v.module, v.degree(), "highest_weight")
        found = any(morphisms.proportional(v, s) for s in spaces[key]) or morphisms.in_span(v, spaces[key])
        rep.check(ok and found, f"family {fam} m={m} n={n} in {v.module} degree {v.degree()}")
    empty = []
    for spec in homology.nodes_in_range(2):
        if morphisms.singular_space(spec, 4, "highest_weight"):
            empty.append(str(spec))
    rep.check(not empty, "no highest weight singular vectors of degree 4 with |m|,|n| <= 2")
    c00 = ModuleSpec("C", 0, 0)
    rep.check(all(not morphisms.singular_space(c00, d, "full") for d in (1, 2, 3)),
              "C:0,0 has no singular vectors in degrees 1-3")


def cmd_search_singular(args, rep: Report, out) -> None:
    spec = ModuleSpec.parse(args.module)
    mode = "highest_weight" if args.hw else "full"
    vecs = morphisms.singular_space(spec, args.degree, mode)
    if not vecs:
        out.write(f"{spec} degree {args.degree}: no singular vectors\n")
    for v in vecs:
        out.write(f"{spec} degree {args.degree}: {v}\n")
    rep.check(all(morphisms.is_singular(v, mode) for v in vecs), f"{len(vecs)} vectors verified singular")


# homology ---------------------------------------------------------------------------------


def _node_rows(spec: ModuleSpec, window: int) -> tuple[list, bool]:
    node = homology.ComplexNode.at(spec)
    classes = homology.homology_classes(node, window)
    dims = homology.homology_dims(node, window)
    if spec in homology.EXCEPTIONAL_NODES:
        ok = (
            sum(dims.values()) == 1
            and len(classes) == 1
            and classes[0].weight == (0, 0)
            and classes[0].t_eigenvalue == 0
        )
    else:
        ok = not any(dims.values())
    rows = [(spec.quadrant, spec.m, spec.n, d, dim, "ok" if ok else "FAIL") for d, dim in dims.items()]
    return rows, ok


def cmd_homology(args, rep: Report, out) -> None:
    window = args.window if args.window is not None else homology.default_window()
    specs = [ModuleSpec.parse(args.node)] if args.node else homology.nodes_in_range(args.range)
    rows = []
    for spec in specs:
        r, ok = _node_rows(spec, window)
        rows += r
        rep.failed |= not ok
    rows.sort()
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["quadrant", "m", "n", "degree", "dim", "status"])
        writer.writerows(rows)
    else:
        for row in rows:
            out.write("\t".join(str(x) for x in row[:5]) + "\n")
    rep.fmt = "none"


def cmd_gr_homology(args, rep: Report, out) -> None:
    fam = args.family
    if fam in ("S", "T"):
        a, b = args.a, args.b
        table = homology.s_ladder(a, b, args.window) if fam == "S" else homology.t_ladder(a, b, args.window)
        expect = homology.expected_s if fam == "S" else homology.expected_t
        for k, dim in table.items():
            e = expect(k, b)
            out.write(f"{fam}({a},{b}) k={k} dim={dim} expected={e}\n")
            rep.failed |= dim != e
        rep.fmt = "none"
        return
    modified = fam == "Gcirc"
    quads = [args.quadrant] if args.quadrant else ["A", "C", "D"]
    labels = [(args.a, args.b)] if args.a is not None and args.b is not None else [
        (a, b) for a in range(-1, 5) for b in range(-1, 5)
    ]
    mismatches = 0
    checked = 0
    for q in quads:
        for ab in labels:
            for m in range(-args.window, args.window + 1):
                for n in range(-args.window, args.window + 1):
                    if homology.module_or_none(q, m, n) is None:
                        continue
                    dim = homology.gr_node_homology(q, m, n, ab, modified)
                    e = homology.expected_gr_dim(q, ab[0], ab[1], m, n, modified)
                    if e is not None:
                        checked += 1
                    bad = e is not None and e != dim
                    mismatches += bad
                    if dim or bad:
                        exp = "-" if e is None else e
                        out.write(f"{fam} {q} a={ab[0]} b={ab[1]} m={m} n={n} dim={dim} expected={exp}"
                                  f"{' MISMATCH' if bad else ''}\n")
    rep.check(not mismatches, f"{checked} graded homology dimensions against the closed forms")


# characters --------------------------------------------------------------------------------


def cmd_size(args, rep: Report, out) -> None:
    q, m, n = args.quadrant, args.m, args.n
    formula = characters.size_formula(q, m, n)
    if not args.oracle:
        out.write(f"formula={formula}\n")
        rep.fmt = "none"
        return
    sx, sy = {"A": (1, 1), "B": (-1, 1), "C": (-1, -1), "D": (1, -1)}[q]
    target = characters.Quotient.irreducible(ModuleSpec(q, sx * m, sy * n))
    report = characters.size_from_series(target, args.window)
    if report.size is None:
        out.write(f"formula={formula} oracle=inconclusive NOT-STABILIZED\n")
        rep.failed = True
    else:
        oracle = report.size
        shown = str(oracle.numerator) if oracle.denominator == 1 else str(oracle)
        match = oracle == formula
        out.write(f"formula={formula} oracle={shown} {'MATCH' if match else 'MISMATCH'}\n")
        rep.failed |= not match
    rep.fmt = "none"


def cmd_character(args, rep: Report, out) -> None:
    spec = ModuleSpec.parse(args.module)
    target = characters.Quotient.irreducible(spec) if args.quotient else characters.Quotient(spec)
    series = characters.character_series(target, args.max_degree)
    for row in series.rows():
        out.write(row + "\n")
    rep.fmt = "none"


# argument parsing ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv"), default="table")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    p = argparse.ArgumentParser(prog="k4verma", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    s = command("verify-axioms", "bracket, cocycle, conformal and action checks")
    s.add_argument("--trials", type=int, default=25)

    s = command("verify-singular", "classified singular vectors and degree-4 emptiness")
    s.add_argument("--bound", type=int, default=4)

    s = command("search-singular", "basis of the singular vectors of one degree")
    s.add_argument("--module", required=True, help="X:m,n with signed m, n")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--hw", action="store_true", help="only require vanishing under e1, e2 and the lowest g_1 vectors")

    s = command("homology", "homology dimensions of the morphism complexes")
    s.add_argument("--node", help="single node X:m,n")
    s.add_argument("--window", type=int, default=None, help="maximal degree (default K4VERMA_WINDOW or 6)")
    s.add_argument("--range", type=int, default=3, help="|m|,|n| bound when no node is given")

    s = command("gr-homology", "homology of the graded complexes and the Delta ladders")
    s.add_argument("--family", choices=("G", "Gcirc", "S", "T"), required=True)
    s.add_argument("--quadrant", choices=("A", "C", "D"))
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--window", type=int, default=4)

    s = command("size", "size of an irreducible quotient")
    s.add_argument("--quadrant", choices=("A", "B", "C", "D"), required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="also extract the size from the character")
    s.add_argument("--window", type=int, default=12)

    s = command("character", "truncated character series")
    s.add_argument("--module", required=True)
    s.add_argument("--max-degree", type=int, default=8)
    s.add_argument("--quotient", action="store_true", help="divide by the image of the incoming arrow")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    rep = Report(args.format)
    try:
        if args.command == "verify-axioms":
            cmd_verify_axioms(args, rep)
        elif args.command == "verify-singular":
            cmd_verify_singular(args, rep)
        elif args.command == "search-singular":
            cmd_search_singular(args, rep, out)
        elif args.command == "homology":
            cmd_homology(args, rep, out)
        elif args.command == "gr-homology":
            cmd_gr_homology(args, rep, out)
        elif args.command == "size":
            cmd_size(args, rep, out)
        elif args.command == "character":
            cmd_character(args, rep, out)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    if rep.fmt == "none":
        return EXIT_FAIL if rep.failed else EXIT_OK
    return rep.emit(out)


if __name__ == "__main__":
    sys.exit(main())
