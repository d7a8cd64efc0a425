"""``k10`` command line: verification runs, grading queries and exports."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import algebra, autos, catalog, gradelib, linalg
from .cyclo import RootSpec, UnsupportedOrder, zeta
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _root(text: str) -> RootSpec:
    try:
        return RootSpec.parse(text)
    except (ValueError, UnsupportedOrder, ZeroDivisionError) as exc:
        raise UsageError(f"bad root {text!r}: {exc}") from None


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


# -- checks ---------------------------------------------------------------------

def _bad_sign_racine() -> algebra.SuperAlgebra:
    rows = {k: list(v) for k, v in algebra.RACINE_ROWS.items()}
    rows["x2"][algebra.RACINE_BASIS.index("x1")] = "v1"
    return algebra.k10_racine(rows, name="K10-racine-bad-sign")


def table_reports(fixture: str | None = None) -> list[Report]:
    if fixture is None:
        alg = algebra.k10_racine()
    elif fixture == "bad-sign":
        alg = _bad_sign_racine()
    elif fixture == "printed":
        alg = algebra.k10_racine_printed()
    else:
        raise UsageError(f"unknown fixture {fixture!r}")
    return [algebra.check_parity_closure(alg), algebra.check_supercommutativity(alg),
            algebra.check_racine_unit(alg), algebra.check_jordan_envelope(alg)]


def toral_matrix_report(seed: int = 0, samples: int = 10) -> Report:
    rep = Report("toral elements act diagonally on the tensor basis")
    rng = random.Random(seed)
    pairs = [(24, 40)] + [(rng.randrange(120), rng.randrange(120)) for _ in range(samples)]
    with rep.timed():
        for a, b in pairs:
            lam, mu = zeta(a), zeta(b)
            m = autos.aut_to_matrix(autos.AutElement.toral(lam, mu))
            want = linalg.diagonal(autos.toral_diagonal(lam, mu))
            rep.record(f"t_(z^{a}, z^{b})", "diag(1,1,lm,l/m,m/l,1/(lm),m,l,1/m,1/l)",
                       "diag(1,1,lm,l/m,m/l,1/(lm),m,l,1/m,1/l)" if m == want else "other", m == want)
    return rep


def orbit_report(seed: int = 0, samples: int = 20) -> Report:
    """Conjugation by (sigma,1), (1,sigma) and delta on sampled toral pairs."""
    rep = Report("orbit relations with explicit conjugators")
    rng = random.Random(seed)
    with rep.timed():
        for _ in range(samples):
            a, b = rng.randrange(120), rng.randrange(120)
            lam, mu = zeta(a), zeta(b)
            t = autos.AutElement.toral(lam, mu)
            for name, w in autos.WEYL_GENERATORS:
                q = autos.weyl_step(name, autos.ToralParam(RootSpec.from_exponent(a), RootSpec.from_exponent(b)))
                ok = autos.witness_holds(w, t, q.element())
                rep.record(f"{name} conjugates t_(z^{a}, z^{b})", f"t{q}", f"t{q}" if ok else "other", ok)
    return rep


def construction_reports(seed: int = 0) -> list[Report]:
    tensor = algebra.k10_tensor()
    k = algebra.kaplansky()
    out = [algebra.check_parity_closure(tensor), algebra.check_supercommutativity(tensor),
           algebra.check_supercommutativity(k), algebra.check_jordan_envelope(k),
           algebra.check_jordan_envelope(tensor), toral_matrix_report(seed), orbit_report(seed)]
    rep = Report("isomorphism from the Racine basis to the tensor presentation")
    with rep.timed():
        try:
            phi = algebra.find_isomorphism(algebra.k10_racine(), tensor)
        except algebra.NoIsomorphismFound as exc:
            rep.record("isomorphism found", True, False)
            rep.notes.append(str(exc))
        else:
            rep.merge(algebra.is_homomorphism(algebra.k10_racine(), tensor, phi.matrix))
            racine = algebra.k10_racine()
            for i, col in enumerate(linalg.columns(phi.matrix)):
                rep.notes.append(f"{racine.basis_names[i]} -> {tensor.format(col)}")
    out.append(rep)
    return out


# -- output -----------------------------------------------------------------------

def _emit_reports(reports: list[Report], fmt: str, timing: bool, verbose: bool = False) -> int:
    if fmt == "json":
        print(json.dumps([r.to_json(timing) for r in reports], sort_keys=True, ensure_ascii=False, indent=2))
    else:
        for r in reports:
            line = r.summary_line()
            if timing:
                line += f" ({r.elapsed_ms:.1f} ms)"
            print(line)
            for d in (r.details if verbose else r.failures()):
                mark = "ok" if d.ok else "FAIL"
                print(f"    {mark}: {d.item}: expected {d.expected}, got {d.actual}")
            if verbose:
                for n in r.notes:
                    print(f"    note: {n}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _emit_grading(g: gradelib.Grading, fmt: str, extra: dict) -> None:
    if fmt == "json":
        data = g.to_json()
        data.update(extra)
        print(json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2))
        return
    print(f"group: {g.group}")
    for line in g.describe():
        print(line)
    print(f"type: {gradelib.grading_type(g)}")
    for k, v in extra.items():
        print(f"{k}: {v}")


def _matching_entry(g: gradelib.Grading):
    cs = g.component_set()
    for e in catalog.build_catalog():
        if catalog.generate(e.id).component_set() == cs:
            return e.id
    return None


# -- commands ---------------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.what == "table":
        return _emit_reports(table_reports(args.fixture), args.format, args.timing, args.verbose)
    if args.fixture is not None:
        raise UsageError("--fixture only applies to 'verify table'")
    if args.what == "construction":
        return _emit_reports(construction_reports(args.seed), args.format, args.timing, args.verbose)
    if args.entry is not None:
        try:
            entry = catalog.get_entry(args.entry)
        except catalog.UnknownEntry as exc:
            raise UsageError(f"UnknownEntry: {exc.args[0]}") from None
        rep = catalog.verify_entry(entry)
        if args.format == "json":
            return _emit_reports([rep], "json", args.timing)
        g = catalog.generate(entry.id)
        print(f"entry {entry.id}: group {entry.group}, generator {entry.generator.describe()}")
        for line in g.describe():
            print(f"  {line}")
        print(f"  type: {gradelib.grading_type(g)}")
        return _emit_reports([rep], "text", args.timing, args.verbose)
    reports = catalog.verify_catalog() + catalog.verify_kaplansky_catalog()
    return _emit_reports(reports, args.format, args.timing, args.verbose)


def cmd_grading(args) -> int:
    spec = args.spec
    if not spec:
        raise UsageError("grading needs: t k/n k/n | delta | delta-t k/n | hom MODULI IMG_A IMG_B")
    kind, rest = spec[0], spec[1:]
    extra: dict = {}
    if kind == "t":
        if len(rest) != 2:
            raise UsageError("usage: grading t k/n k/n")
        p = autos.ToralParam(_root(rest[0]), _root(rest[1]))
        g = gradelib.eigenspace_decomposition([autos.aut_to_matrix(p.element())], name=f"t{p}")
    elif kind == "delta":
        if rest:
            raise UsageError("usage: grading delta")
        g = gradelib.eigenspace_decomposition([autos.delta_matrix()], name="delta")
    elif kind == "delta-t":
        if len(rest) != 1:
            raise UsageError("usage: grading delta-t k/n")
        b = _root(rest[0])
        g = gradelib.eigenspace_decomposition([autos.aut_to_matrix(catalog._delta_t(b.value))], name=f"delta t_({b},{b})")
    elif kind == "hom":
        if len(rest) != 3:
            raise UsageError("usage: grading hom MODULI IMG_A IMG_B, e.g. hom 4,2 1,1 1,0 (0 for Z)")
        try:
            group = gradelib.AbGroup(_ints(rest[0]))
            hom = gradelib.weight_hom(group, _ints(rest[1]), _ints(rest[2]))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        g = gradelib.grading_from_hom(hom, name="pushforward")
    else:
        raise UsageError(f"unknown grading spec {kind!r}")
    rep = gradelib.verify_grading(g)
    match = _matching_entry(g)
    extra["catalog entry"] = match if match is not None else ("trivial" if len(g.components) == 1 else "none")
    extra["axioms"] = rep.status
    _emit_grading(g, args.format, extra)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_orbit(args) -> int:
    p = autos.ToralParam(_root(args.lam), _root(args.mu))
    points = autos.weyl_orbit(p)
    if args.format == "json":
        print(json.dumps([{"param": [str(q.param.lam), str(q.param.mu)], "witness": q.witness_name,
                           "element": q.witness.to_json()} for q in points], sort_keys=True, indent=2))
    else:
        print(f"orbit of t{p}: {len(points)} elements")
        for q in points:
            print(f"  t{q.param}  via {q.witness_name}")
    return EXIT_OK


def cmd_classify(args) -> int:
    p = autos.ToralParam(_root(args.lam), _root(args.mu))
    try:
        c = catalog.classify_cyclic_detail(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    except catalog.NoMatch as exc:
        print(f"NoMatch: {exc}", file=sys.stderr)
        return EXIT_FAIL
    label = "trivial" if c.entry == catalog.TRIVIAL else c.entry
    if args.format == "json":
        print(json.dumps({"param": [str(p.lam), str(p.mu)], "entry": label,
                          "canonical": [str(c.canonical.lam), str(c.canonical.mu)], "type": list(c.type),
                          "parity_type": [list(x) for x in c.parity_type],
                          "eigen_group": c.eigen_group.to_json()}, sort_keys=True, indent=2))
    else:
        print(f"t{p}: entry {label}")
        print(f"  orbit representative t{c.canonical}, type {c.type}, eigenvalue group {c.eigen_group}")
    return EXIT_OK


def cmd_mad(args) -> int:
    return _emit_reports(autos.mad_sections(args.seed), args.format, args.timing, args.verbose)


def cmd_export(args) -> int:
    print(catalog.export_catalog())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("-v", "--verbose", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="k10", parents=[common],
                                     description="Exact checks for the Kac superalgebra K10 and its gradings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("what", choices=("table", "construction", "catalog"))
    p.add_argument("--fixture", default=None, help="table fixture: bad-sign or printed")
    p.add_argument("--entry", type=int, default=None, help="catalog id 1-21")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("grading", parents=[common], help="compute a grading")
    p.add_argument("spec", nargs=argparse.REMAINDER,
                   help="t k/n k/n | delta | delta-t k/n | hom MODULI IMG_A IMG_B")
    p.set_defaults(func=cmd_grading)

    for name, func, text in (("orbit", cmd_orbit, "Weyl orbit of t_(lam,mu) with witnesses"),
                             ("classify", cmd_classify, "catalog entry of the grading of t_(lam,mu)")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("lam")
        p.add_argument("mu")
        p.set_defaults(func=func)

    p = sub.add_parser("mad", parents=[common], help="MAD-group desk check")
    p.set_defaults(func=cmd_mad)

    p = sub.add_parser("export", parents=[common], help="export data")
    p.add_argument("what", choices=("catalog",))
    p.set_defaults(func=cmd_export)
    return parser


def _pull_options(spec: list, args) -> list:
    # REMAINDER swallows trailing options; pick ours back out
    out = []
    it = iter(spec)
    for tok in it:
        if tok == "--format" or tok.startswith("--format="):
            args.format = tok.split("=", 1)[1] if "=" in tok else next(it, None)
            if args.format not in ("text", "json"):
                raise UsageError("--format must be text or json")
        elif tok == "--timing":
            args.timing = True
        elif tok in ("-v", "--verbose"):
            args.verbose = True
        elif tok == "--seed":
            args.seed = _ints(next(it, "0"))[0]
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    for name, default in (("format", "text"), ("seed", 0), ("timing", False), ("verbose", False)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        if args.command == "grading":
            args.spec = _pull_options(args.spec, args)
        env = os.environ.get("K10_FORMAT")
        if env:
            if env not in ("text", "json"):
                raise UsageError(f"K10_FORMAT must be text or json, not {env!r}")
            args.format = env
        return args.func(args)
    except UsageError as exc:
        print(f"k10: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    try:
        code = main()
        sys.stdout.flush()
    except BrokenPipeError:
        # downstream pipe closed early
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        code = EXIT_OK
    sys.exit(code)


if __name__ == "__main__":
    run()
