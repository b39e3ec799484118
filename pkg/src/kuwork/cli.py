"""Command-line driver.

Exit status: 0 when every reported check passes, 1 when some check fails
(a counterexample or a failed definition), 2 on usage or parse errors.
Reports whose preconditions do not hold are printed but do not fail the run.
"""

from __future__ import annotations

import argparse
import sys
from itertools import combinations_with_replacement
from pathlib import Path

from .algebra import (
    FiniteAlgebra,
    check_ku_axioms,
    ideal_witness,
    ku_ideal_witness,
    loop_algorithm_check,
    loop_divergence,
    subalgebra_witness,
    verify_identities,
)
from .derivations import (
    check_regularity,
    classify,
    derivation_ideal_witness,
    enumerate_derivations,
    verify_derivation_properties,
)
from .errors import CapExceeded, KUError
from .fuzzy import check_left_ideal_lemmas, check_level_characterization, fuzzy_ideal_witness, grade
from .homomorphisms import Homomorphism, check_image_transport, check_preimage_transport, enumerate_homomorphisms
from .products import (
    READINGS,
    check_level_product,
    check_product_factors,
    check_product_ideal,
    check_strongest_relation,
    product_algebra,
)
from .reports import FAIL, PASS, Clause, TheoremReport, from_clauses
from .search import DEFAULT_GRID, SUITES, enumerate_ku_algebras, sweep
from .textio import Bundle, format_catalog, format_product, parse_bundle


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.failed = False

    def report(self, r: TheoremReport) -> None:
        self.failed |= r.verdict == FAIL
        self.lines.append(r.record() if self.fmt == "records" else r.render())

    def text(self, s: str) -> None:
        if self.fmt == "text":
            self.lines.append(s)

    def render(self) -> str:
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _load(paths) -> Bundle:
    bundle = Bundle()
    for p in paths:
        bundle.extend(parse_bundle(Path(p).read_text()))
    return bundle


def _algebra(bundle: Bundle, label: str = "algebra") -> FiniteAlgebra:
    a = bundle.get(label, "algebra")
    if a is None:
        algebras = bundle.algebras()
        if not algebras:
            raise KUError("no algebra in the input")
        a = algebras[0]
    return a


def _map(bundle: Bundle, a: FiniteAlgebra, label: str = "d", required: bool = True):
    d = bundle.get(label, "map")
    if d is None:
        d = next((m for m in bundle.maps() if m.n == a.n), None)
    if d is None and required:
        raise KUError("this command needs a self-map block (map <n>)")
    return d


def _sides(kind: str) -> list[str]:
    return ["left", "right"] if kind == "both" else [kind]


def cmd_check(args, out: Output) -> None:
    for item in _load(args.files).of_kind("algebra"):
        a = item.value
        rep = check_ku_axioms(a)
        out.report(from_clauses("ku-axioms", f"{item.label} n={a.n}", [Clause(k, w) for k, w in rep.verdicts]))
        loop = loop_algorithm_check(a)
        out.text(loop.render())
        for line in loop_divergence(a):
            out.text("divergence: " + line)


def cmd_identities(args, out: Output) -> None:
    for a in _load(args.files).algebras():
        out.report(verify_identities(a))


def cmd_derive(args, out: Output) -> None:
    bundle = _load(args.files)
    a = _algebra(bundle)
    accept = {"lr": "is_lr", "rl": "is_rl", "both": "is_two_sided"}[args.kind]
    for item in bundle.of_kind("map"):
        d = item.value
        cls = classify(a, d)
        clauses = []
        if args.kind in ("lr", "both"):
            clauses.append(Clause("(l,r)", cls.lr_witness))
        if args.kind in ("rl", "both"):
            clauses.append(Clause("(r,l)", cls.rl_witness))
        out.report(from_clauses("classify", f"{item.label} d={d}", clauses))
        if getattr(cls, accept) and cls.is_two_sided:
            out.report(check_regularity(a, d))
            out.report(verify_derivation_properties(a, d))
    if args.enumerate:
        found = enumerate_derivations(a, args.kind, override=args.override_cap)
        out.text(f"{len(found)} {args.kind} derivation(s):")
        for d in found:
            out.lines.append(str(d) if out.fmt == "text" else f"derivation\t{args.kind}\t{d}")


def cmd_ideal(args, out: Output) -> None:
    bundle = _load(args.files)
    a = _algebra(bundle)
    d = _map(bundle, a, required=False)
    for item in bundle.of_kind("subset"):
        s = item.value
        clauses = []
        if len(s):
            clauses.append(Clause("subalgebra", subalgebra_witness(a, s)))
        clauses.append(Clause("ideal", ideal_witness(a, s)))
        clauses.append(Clause("KU-ideal", ku_ideal_witness(a, s)))
        if d is not None:
            for side in ("left", "right", "two-sided"):
                clauses.append(Clause(f"{side} derivation KU-ideal", derivation_ideal_witness(a, d, s, side)))
        out.report(from_clauses("ideal", f"{item.label} {s}" + (f" d={d}" if d else ""), clauses))


def cmd_fuzzy(args, out: Output) -> None:
    bundle = _load(args.files)
    a = _algebra(bundle)
    kinds = {"both": ["left", "right"], "all": ["plain", "left", "right", "two-sided"]}.get(args.kind, [args.kind])
    d = _map(bundle, a, required=kinds != ["plain"])
    for item in bundle.of_kind("fuzzy"):
        m = item.value
        clauses = [Clause(k, fuzzy_ideal_witness(a, m, d, k)) for k in kinds]
        out.report(from_clauses("fuzzy", f"{item.label} mu={m}" + (f" d={d}" if d else ""), clauses))


def cmd_levels(args, out: Output) -> None:
    bundle = _load(args.files)
    a = _algebra(bundle)
    d = _map(bundle, a)
    for m in bundle.fuzzy_sets():
        for side in _sides(args.kind):
            out.report(check_level_characterization(a, d, m, side))
        if "left" in _sides(args.kind):
            out.report(check_left_ideal_lemmas(a, d, m))


def cmd_hom(args, out: Output) -> None:
    bundle = _load(args.files)
    algebras = bundle.algebras()
    if not algebras:
        raise KUError("no algebra in the input")
    src = bundle.get("source", "algebra") or algebras[0]
    dst = bundle.get("target", "algebra") or (algebras[1] if len(algebras) > 1 else src)
    d_src = bundle.get("d_source", "map") or _map(bundle, src)
    d_dst = bundle.get("d_target", "map") or next((m for m in reversed(bundle.maps()) if m.n == dst.n), None)
    if d_dst is None:
        raise KUError("no self-map for the target algebra")
    homs = []
    for item in bundle.of_kind("hom"):
        n_src, n_dst, image = item.value
        if (n_src, n_dst) != (src.n, dst.n):
            raise KUError(f"hom block {item.label} is {n_src}->{n_dst}, algebras are {src.n}->{dst.n}")
        homs.append(Homomorphism(src, dst, image))
    if not homs:
        homs = [f for f in enumerate_homomorphisms(src, dst, override=args.override_cap) if f.onto]
        out.text(f"{len(homs)} onto homomorphism(s) enumerated")
    for f in homs:
        for m in bundle.fuzzy_sets():
            for side in _sides(args.kind):
                if m.n == dst.n:
                    out.report(check_preimage_transport(f, m, d_src, d_dst, side))
                if m.n == src.n:
                    out.report(check_image_transport(f, m, d_src, d_dst, side))


def cmd_product(args, out: Output) -> None:
    bundle = _load(args.files)
    algebras = bundle.algebras()
    if not algebras:
        raise KUError("no algebra in the input")
    a = algebras[0]
    b = algebras[1] if len(algebras) > 1 else a
    pa = product_algebra(a, b, require_ku=False)
    rep = check_ku_axioms(pa.algebra)
    out.text(format_product(pa).rstrip())
    out.report(from_clauses("product-axioms", f"n={a.n} x n={b.n}",
                            [Clause(k, pa.decode_witness(w)) for k, w in rep.verdicts]))
    d = _map(bundle, a, required=False)
    sets = [m for m in bundle.fuzzy_sets() if m.n == a.n]
    if d is None or not sets:
        return
    grades = sorted({g for m in sets for g in m.grades} | set(DEFAULT_GRID))
    for m, beta in combinations_with_replacement(sets, 2):
        for t in grades:
            out.report(check_level_product(m, beta, t))
        out.report(check_product_ideal(a, d, m, beta, args.reading))
        out.report(check_product_factors(a, d, m, beta))
    for beta in sets:
        out.report(check_strongest_relation(a, d, beta))


def cmd_enumerate(args, out: Output) -> None:
    entries = enumerate_ku_algebras(args.size, override=args.override_cap)
    if out.fmt == "records":
        for e in entries:
            flat = ",".join(str(v) for row in e.algebra.table for v in row)
            out.lines.append(f"A{args.size}.{e.index}\t{flat}\t{len(e.derivations)}")
    else:
        out.lines.append(f"# {len(entries)} KU-algebra(s) of size {args.size} up to isomorphism fixing 0")
        out.lines.append(format_catalog(entries, args.size).rstrip())


def cmd_sweep(args, out: Output) -> None:
    suite = [s.strip() for s in args.suite.split(",") if s.strip()]
    if suite == ["all"]:
        suite = list(SUITES)
    grid = [grade(g) for g in args.grid.split(",")]
    result = sweep(suite, args.size, grid, workers=args.workers, override=args.override_cap)
    out.failed = bool(result.failures)
    if out.fmt == "records":
        out.lines.append(result.records().rstrip("\n"))
        return
    for s in suite:
        mine = [r for r in result if r.theorem == s]
        bad = [r for r in mine if r.failed]
        out.lines.append(f"{s}: {len(mine)} instance(s), {len(mine) - len(bad)} {PASS}, {len(bad)} {FAIL}")
        for key, count in sorted(result.filtered.items()):
            if key.startswith(s + ":"):
                out.lines.append(f"  filtered {count}: {key[len(s) + 2:]}")
        for r in bad[: args.show]:
            out.lines.append("  " + r.render().replace("\n", "\n  "))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--output", "-o", help="write the report here instead of standard output")

    parser = argparse.ArgumentParser(prog="kuwork", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, files=True):
        p = sub.add_parser(name, parents=[common], help=help)
        if files:
            p.add_argument("files", nargs="+", help="input files (blocks are merged in order)")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "KU axioms, with the loop-algorithm replica as a diagnostic")
    add("identities", cmd_identities, "consequences of the KU axioms")
    p = add("derive", cmd_derive, "classify self-maps as derivations, or enumerate derivations")
    p.add_argument("--kind", choices=("lr", "rl", "both"), default="both")
    p.add_argument("--enumerate", action="store_true")
    p.add_argument("--override-cap", action="store_true")
    add("ideal", cmd_ideal, "crisp subalgebras, ideals and derivation KU-ideals")
    p = add("fuzzy", cmd_fuzzy, "fuzzy (derivation) KU-ideal checkers")
    p.add_argument("--kind", choices=("left", "right", "both", "two-sided", "plain", "all"), default="both")
    p = add("levels", cmd_levels, "level-set characterization and left-ideal grade bounds")
    p.add_argument("--kind", choices=("left", "right", "both"), default="both")
    p = add("hom", cmd_hom, "image and preimage transport under homomorphisms")
    p.add_argument("--kind", choices=("left", "right", "both"), default="both")
    p.add_argument("--override-cap", action="store_true")
    p = add("product", cmd_product, "product algebra and Cartesian-product checks")
    p.add_argument("--reading", choices=READINGS, default="compose")
    p = add("enumerate", cmd_enumerate, "catalog of KU-algebras of one size", files=False)
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--override-cap", action="store_true")
    p = add("sweep", cmd_sweep, "run theorem suites over the catalog", files=False)
    p.add_argument("--suite", required=True, help="comma-separated ids, or 'all': " + ", ".join(SUITES))
    p.add_argument("--size", type=int, required=True, help="largest catalog size")
    p.add_argument("--grid", default=",".join(str(g) for g in DEFAULT_GRID))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--show", type=int, default=5, help="failures rendered per suite in text mode")
    p.add_argument("--override-cap", action="store_true")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Execute one command; returns the exit status and the report text."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    out = Output(args.format)
    try:
        args.func(args, out)
    except CapExceeded as exc:
        return 2, f"error: {exc} (on the command line: --override-cap)\n"
    except (KUError, OSError) as exc:
        return 2, f"error: {exc}\n"
    text = out.render()
    if args.output:
        Path(args.output).write_text(text)
        text = ""
    return (1 if out.failed else 0), text


def main(argv=None) -> None:
    status, text = run(argv)
    if text:
        stream = sys.stderr if status == 2 else sys.stdout
        stream.write(text)
    sys.exit(status)


if __name__ == "__main__":
    main()
