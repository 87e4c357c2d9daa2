"""Command-line front end.

Every command emits Reports: one JSON object per line with --json, a short
table otherwise.  Exit codes: 0 on success (including status "none"), 2 on
parse errors and refusals, 3 on theorem violations.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import altwords, colorful, lemmas, transversal
from .chirotope import (
    alternating_chirotope,
    check_chirotope,
    chirotope_from_matrix,
    circuits_from_chirotope,
    dual,
    is_uniform,
)
from .config import use_limits
from .covectors import check_height_bound, cocircuits, covectors, topes, vectors
from .errors import ConnectivityError, LimitExceeded, OMError, ParseError, PreconditionError, TheoremViolation
from .exact import RationalMatrix
from .instances import (
    parse_int_list,
    parse_sign_vectors,
    random_conic_instance,
    random_convex_instance,
    random_topes,
    random_uniform_matrix,
    read_om,
)
from .rainbow import build_chain_family, find_rainbow_simplex, load_family, parse_labels, pushforward_coefficient
from .signvec import SignVector

SCHEMA = 1


@dataclass
class Report:
    command: str
    instance: str
    status: str  # certified | none | theorem-violation | refused
    witness: object = None
    elapsed_ms: int = 0
    seed: int | None = None
    dump: str | None = None  # replayable instance, always set for theorem violations

    def to_dict(self) -> dict:
        d = {"schema": SCHEMA, "command": self.command, "instance": self.instance,
             "status": self.status, "witness": self.witness, "elapsed_ms": self.elapsed_ms,
             "seed": self.seed}
        if self.dump is not None:
            d["dump"] = self.dump
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:16]


class _Clock:
    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.start = time.perf_counter()

    def ms(self) -> int:
        if not self.enabled:
            return 0
        ms = int((time.perf_counter() - self.start) * 1000)
        self.start = time.perf_counter()
        return ms


def _violation(command: str, text: str, exc: TheoremViolation, clock, seed=None) -> Report:
    return Report(command, digest(text), "theorem-violation", {"error": str(exc)},
                  clock.ms(), seed, exc.instance or text)


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# commands ---------------------------------------------------------------------

def cmd_gen(args, clock):
    if args.alternating:
        chi = alternating_chirotope(args.n, args.r)
        text = chi.dumps()
        if not args.out.endswith(".chi"):
            raise PreconditionError("the alternating chirotope has no matrix form here; use a .chi output")
    else:
        rng = random.Random(args.seed)
        m = random_uniform_matrix(args.r, args.n, rng, args.bound)
        chi = chirotope_from_matrix(m)
        text = chi.dumps() if args.out.endswith(".chi") else m.dumps()
    Path(args.out).write_text(text)
    yield Report("gen", digest(text), "certified",
                 {"file": args.out, "n": chi.n, "r": chi.r, "uniform": is_uniform(chi)}, clock.ms(), args.seed)


def cmd_check(args, clock):
    chi = read_om(args.om)
    valid = check_chirotope(chi)
    yield Report("check", digest(chi.dumps()), "certified" if valid else "none",
                 {"n": chi.n, "r": chi.r, "valid": valid, "uniform": is_uniform(chi)}, clock.ms())


def cmd_enumerate(args, clock):
    chi = read_om(args.om)
    if args.what == "topes":
        items = [str(t) for t in topes(chi)]
    else:
        source = {"circuits": circuits_from_chirotope, "cocircuits": cocircuits,
                  "vectors": vectors, "covectors": covectors}[args.what]
        items = sorted(str(x) for x in source(chi))
    yield Report(f"enumerate {args.what}", digest(chi.dumps()), "certified",
                 {"count": len(items), "items": items}, clock.ms())


def cmd_dual(args, clock):
    chi = read_om(args.om)
    d = dual(chi)
    Path(args.out).write_text(d.dumps())
    yield Report("dual", digest(chi.dumps()), "certified", {"file": args.out, "n": d.n, "r": d.r}, clock.ms())


def _conic_trial(command, m, e, circuits, clock, seed, pipeline_n):
    chi = chirotope_from_matrix(m) if isinstance(m, RationalMatrix) else m
    text = (m.dumps() if isinstance(m, RationalMatrix) else chi.dumps()) + f"e {e}\n" + "".join(
        f"{c}\n" for c in circuits)
    try:
        cert = colorful.find_rainbow_conic(chi, e, circuits)
    except TheoremViolation as exc:
        return _violation(command, text, exc, clock, seed)
    if not colorful.verify_certificate(chi, circuits, cert, e):
        return _violation(command, text, TheoremViolation("certificate failed verification"), clock, seed)
    witness = cert.render()
    if isinstance(m, RationalMatrix) and chi.n <= pipeline_n:
        try:
            pc = colorful.conic_pipeline(m, e, circuits)
        except (TheoremViolation, ConnectivityError) as exc:
            return _violation(command, text, TheoremViolation(f"pipeline failed: {exc}"), clock, seed)
        witness["pipeline"] = pc.render()
    return Report(command, digest(text), "certified", witness, clock.ms(), seed)


def _convex_trial(command, chi, circuits, clock, seed, text):
    try:
        cert = colorful.find_rainbow_convex(chi, circuits)
    except TheoremViolation as exc:
        return _violation(command, text, exc, clock, seed)
    if not colorful.verify_certificate(chi, circuits, cert):
        return _violation(command, text, TheoremViolation("certificate failed verification"), clock, seed)
    return Report(command, digest(text), "certified", cert.render(), clock.ms(), seed)


def cmd_verify_conic(args, clock):
    if args.random:
        rng = random.Random(args.seed)
        for _ in range(args.trials):
            r = rng.choice([2, 3])
            n = rng.randint(r + 1, args.n_max)
            m, e, circuits = random_conic_instance(r, n, rng, bound=rng.choice([1, 2, 10]))
            yield _conic_trial("verify conic", m, e, circuits, clock, args.seed, args.pipeline_n)
        return
    if args.om is None or args.circuits is None or args.e is None:
        raise ParseError("verify conic needs --om, --circuits and --e (or --random)")
    text = _read(args.om)
    m = read_om(args.om) if args.om.endswith(".chi") else RationalMatrix.parse(text)
    circuits = parse_sign_vectors(_read(args.circuits))
    yield _conic_trial("verify conic", m, args.e, circuits, clock, None, args.pipeline_n if args.pipeline else 0)


def cmd_verify_convex(args, clock):
    if args.random:
        rng = random.Random(args.seed)
        for _ in range(args.trials):
            r = rng.choice([2, 3])
            n = rng.randint(r, args.n_max)
            m, circuits = random_convex_instance(r, n, rng, bound=rng.choice([1, 2, 10]))
            text = m.dumps() + "".join(f"{c}\n" for c in circuits)
            yield _convex_trial("verify convex", chirotope_from_matrix(m), circuits, clock, args.seed, text)
        return
    if args.om is None or args.circuits is None:
        raise ParseError("verify convex needs --om and --circuits (or --random)")
    chi = read_om(args.om)
    circuits = parse_sign_vectors(_read(args.circuits))
    text = chi.dumps() + "".join(f"{c}\n" for c in circuits)
    yield _convex_trial("verify convex", chi, circuits, clock, None, text)


def cmd_verify_transversal(args, clock):
    chi = read_om(args.om)
    ts = parse_sign_vectors(_read(args.topes), full_support=True)
    text = chi.dumps() + "".join(f"{t}\n" for t in ts)
    agree = transversal.common_elements(ts) if ts else []
    if agree and is_uniform(chi):
        try:
            cert = transversal.verify_common_element(chi, ts)
        except TheoremViolation as exc:
            yield _violation("verify transversal", text, exc, clock)
            return
    else:
        cert = transversal.find_transversal(chi, ts, force=args.force)
    if cert is None:
        yield Report("verify transversal", digest(text), "none",
                     {"uniform": is_uniform(chi), "agree": [list(a) for a in agree]}, clock.ms())
        return
    witness = cert.render()
    if args.pipeline:
        witness["pipeline"] = transversal.transversal_pipeline(chi, ts).render()
    yield Report("verify transversal", digest(text), "certified", witness, clock.ms())


def cmd_verify_rank_r(args, clock):
    chi = read_om(args.om)
    ts = parse_sign_vectors(_read(args.topes), full_support=True)
    mult = parse_int_list(args.mult)
    text = chi.dumps() + "".join(f"{t}\n" for t in ts) + f"mult {args.mult}\n"
    try:
        cert = transversal.find_partition_transversal(chi, ts, mult)
    except TheoremViolation as exc:
        yield _violation("verify rank-r", text, exc, clock)
        return
    witness = cert.render()
    witness["parts"] = cert.parts(len(ts))
    if args.pipeline:
        witness["pipeline"] = transversal.transversal_pipeline(chi, ts, mult).render()
    yield Report("verify rank-r", digest(text), "certified", witness, clock.ms())


def cmd_verify_rank2(args, clock):
    words = altwords.parse_words(_read(args.words))
    text = "".join(w + "\n" for w in words)
    try:
        sol = altwords.solve_words(words)
    except TheoremViolation as exc:
        yield _violation("verify rank-2", text, exc, clock)
        return
    n = len(words)
    chi = alternating_chirotope(n, 2)
    cert = transversal.find_transversal(chi, [SignVector.parse(w) for w in words])
    if cert is None:
        exc = TheoremViolation("the transversal search disagrees with the word solver", instance=text)
        yield _violation("verify rank-2", text, exc, clock)
        return
    yield Report("verify rank-2", digest(text), "certified",
                 {"shift": sol.shift, "permutation": list(sol.permutation), "result": sol.result,
                  "transversal": cert.render()}, clock.ms())


def cmd_verify_height(args, clock):
    chi = read_om(args.om)
    ok = check_height_bound(chi)
    text = chi.dumps()
    if not ok:
        exc = TheoremViolation("a vector exceeds |support| <= rank + height", instance=text)
        yield _violation("verify height-bound", text, exc, clock)
        return
    yield Report("verify height-bound", digest(text), "certified", {"holds": True}, clock.ms())


def _lemma_report(command, text, checks, clock):
    rendered = [c.render() for c in checks]
    if all(c.holds for c in checks):
        return Report(command, digest(text), "certified", rendered, clock.ms())
    bad = next(c for c in checks if not c.holds)
    exc = TheoremViolation(f"{bad.name}: expected {bad.expected}, Betti numbers {list(bad.betti)}", instance=text)
    return _violation(command, text, exc, clock)


def cmd_lemma_jj(args, clock):
    chi = read_om(args.om)
    jp, jm = parse_int_list(args.jplus), parse_int_list(args.jminus)
    text = chi.dumps() + f"J+ {jp}\nJ- {jm}\n"
    yield _lemma_report("verify lemma-jj", text, [lemmas.check_lemma_jj(chi, jp, jm)], clock)


def cmd_lemma_hh(args, clock):
    chi = read_om(args.om)
    text = chi.dumps() + f"e {args.e}\nh {args.h}\n"
    yield _lemma_report("verify lemma-hh", text, [lemmas.check_lemma_hh(chi, args.e, args.h)], clock)


def cmd_lemma_li(args, clock):
    chi = read_om(args.om)
    if not is_uniform(chi):
        raise PreconditionError("the box-complex lemma needs a uniform chirotope")
    ts = parse_sign_vectors(_read(args.topes), full_support=True)
    subsets = [parse_int_list(args.subset)] if args.subset else None
    text = chi.dumps() + "".join(f"{t}\n" for t in ts)
    yield _lemma_report("verify lemma-li", text, lemmas.check_lemma_li(chi, ts, subsets), clock)


def cmd_words_solve(args, clock):
    words = altwords.parse_words(_read(args.input))
    text = "".join(w + "\n" for w in words)
    try:
        sol = altwords.solve_words(words)
    except TheoremViolation as exc:
        yield _violation("words solve", text, exc, clock)
        return
    witness = {"shift": sol.shift, "permutation": list(sol.permutation), "result": sol.result,
               "crossings": sol.crossings}
    if args.oracle:
        perm = altwords.oracle_words(words)
        if perm is None:
            exc = TheoremViolation("the oracle finds no permutation although the solver did", instance=text)
            yield _violation("words solve", text, exc, clock)
            return
        witness["oracle"] = list(perm)
    yield Report("words solve", digest(text), "certified", witness, clock.ms())


def cmd_rainbow(args, clock):
    family = load_family(args.family)
    labels = parse_labels(_read(args.labels))
    text = "".join(f"{sorted(s)}:{sorted(k.faces)}\n" for s, k in sorted(
        family.complexes.items(), key=lambda kv: sorted(kv[0]))) + _read(args.labels)
    chains = build_chain_family(family)
    simplex = find_rainbow_simplex(family, labels, chains)
    full = frozenset(range(1, family.k + 1))
    coeff = pushforward_coefficient(chains[full], labels, full)
    yield Report("rainbow", digest(text), "certified",
                 {"simplex": list(simplex), "labels": [labels[v] for v in simplex],
                  "pushforward_coefficient": coeff}, clock.ms())


def cmd_explore_q14(args, clock):
    rng = random.Random(args.seed)
    for _ in range(args.trials):
        m = random_uniform_matrix(args.r, args.n, rng)
        chi = chirotope_from_matrix(m)
        ts = random_topes(chi, args.n, rng)
        text = m.dumps() + "".join(f"{t}\n" for t in ts)
        cert = transversal.find_transversal(chi, ts)
        covered = []
        if transversal.common_elements(ts):
            covered.append("agree")
        if len(set(ts)) <= chi.r:
            covered.append("at-most-r-distinct")
        if chi.r == 2:
            covered.append("rank-2")
        if cert is None and covered:
            exc = TheoremViolation(f"no transversal although {covered} applies", instance=text)
            yield _violation("explore q14", text, exc, clock, args.seed)
            continue
        witness = {"hypotheses": covered, "topes": [str(t) for t in ts]}
        if cert is not None:
            witness["certificate"] = cert.render()
        yield Report("explore q14", digest(text), "certified" if cert else "none", witness, clock.ms(), args.seed)


# parser ---------------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--json", action="store_true", help="emit JSON lines")
    p.add_argument("--limit-faces", type=int, help="refuse complexes with more faces")
    p.add_argument("--limit-n", type=int, help="refuse enumeration beyond this ground-set size")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 (byte-stable output)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="omkit", parents=[common],
                                     description="Oriented-matroid theorem workbench.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="random uniform matrix or alternating chirotope")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int, default=10)
    p.add_argument("--alternating", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", parents=[common], help="chirotope axioms and uniformity")
    p.add_argument("--om", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="list circuits, covectors, topes, ...")
    p.add_argument("--om", required=True)
    p.add_argument("--what", required=True, choices=["circuits", "cocircuits", "vectors", "covectors", "topes"])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("dual", parents=[common], help="write the dual chirotope")
    p.add_argument("--om", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_dual)

    verify = sub.add_parser("verify", parents=[common], help="theorem and lemma checks")
    vs = verify.add_subparsers(dest="what", required=True)
    for name, func in (("conic", cmd_verify_conic), ("convex", cmd_verify_convex)):
        p = vs.add_parser(name, parents=[common])
        p.add_argument("--om")
        p.add_argument("--circuits")
        p.add_argument("--random", action="store_true")
        p.add_argument("--trials", type=int, default=100)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--n-max", type=int, default=8)
        if name == "conic":
            p.add_argument("--e", type=int)
            p.add_argument("--pipeline", action="store_true", help="also run the topological pipeline")
            p.add_argument("--pipeline-n", type=int, default=6, help="largest n for the pipeline in campaigns")
        p.set_defaults(func=func)
    p = vs.add_parser("transversal", parents=[common])
    p.add_argument("--om", required=True)
    p.add_argument("--topes", required=True)
    p.add_argument("--force", action="store_true", help="search even if the chirotope is not uniform")
    p.add_argument("--pipeline", action="store_true")
    p.set_defaults(func=cmd_verify_transversal)
    p = vs.add_parser("rank-r", parents=[common])
    p.add_argument("--om", required=True)
    p.add_argument("--topes", required=True)
    p.add_argument("--mult", required=True)
    p.add_argument("--pipeline", action="store_true")
    p.set_defaults(func=cmd_verify_rank_r)
    p = vs.add_parser("rank-2", parents=[common])
    p.add_argument("--words", required=True)
    p.set_defaults(func=cmd_verify_rank2)
    p = vs.add_parser("height-bound", parents=[common])
    p.add_argument("--om", required=True)
    p.set_defaults(func=cmd_verify_height)
    p = vs.add_parser("lemma-jj", parents=[common])
    p.add_argument("--om", required=True)
    p.add_argument("--jplus", default="")
    p.add_argument("--jminus", default="")
    p.set_defaults(func=cmd_lemma_jj)
    p = vs.add_parser("lemma-hh", parents=[common])
    p.add_argument("--om", required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.set_defaults(func=cmd_lemma_hh)
    p = vs.add_parser("lemma-li", parents=[common])
    p.add_argument("--om", required=True)
    p.add_argument("--topes", required=True)
    p.add_argument("--subset", help="check only this index set, e.g. 1,3")
    p.set_defaults(func=cmd_lemma_li)

    words = sub.add_parser("words", parents=[common], help="alternating words")
    ws = words.add_subparsers(dest="what", required=True)
    p = ws.add_parser("solve", parents=[common])
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_words_solve)

    p = sub.add_parser("rainbow", parents=[common], help="rainbow simplex of a complex family")
    p.add_argument("--family", required=True)
    p.add_argument("--labels", required=True)
    p.set_defaults(func=cmd_rainbow)

    explore = sub.add_parser("explore", parents=[common], help="counterexample search")
    es = explore.add_subparsers(dest="what", required=True)
    p = es.add_parser("q14", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_explore_q14)
    return parser


def _human(report: Report) -> str:
    w = report.witness
    if isinstance(w, dict) and "items" in w:
        return "\n".join([f"# {report.command}: {w['count']}"] + w["items"])
    summary = json.dumps(w, sort_keys=True) if w is not None else ""
    if len(summary) > 160:
        summary = summary[:157] + "..."
    line = f"{report.command:<22} {report.status:<18} {report.instance}  {summary}"
    if report.dump:
        line += "\n--- instance ---\n" + report.dump.rstrip("\n")
    return line


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    overrides = {}
    if getattr(args, "limit_faces", None) is not None:
        overrides["max_faces"] = args.limit_faces
    if getattr(args, "limit_n", None) is not None:
        overrides["max_n"] = args.limit_n
        overrides["max_axiom_n"] = args.limit_n
    clock = _Clock(not getattr(args, "no_timing", False))
    name = " ".join(x for x in (args.command, getattr(args, "what", None)) if x and args.command != "enumerate")
    name = name or args.command
    code = 0
    try:
        with use_limits(**overrides):
            for report in args.func(args, clock):
                print(report.to_json() if as_json else _human(report), file=out)
                if report.status == "theorem-violation":
                    code = 3
    except (ParseError, PreconditionError, LimitExceeded, ConnectivityError) as exc:
        report = Report(name, "", "refused", {"error": str(exc)}, clock.ms())
        print(report.to_json() if as_json else _human(report), file=out)
        return 2
    except TheoremViolation as exc:
        report = Report(name, digest(exc.instance), "theorem-violation", {"error": str(exc)},
                        clock.ms(), None, exc.instance)
        print(report.to_json() if as_json else _human(report), file=out)
        return 3
    except OMError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
