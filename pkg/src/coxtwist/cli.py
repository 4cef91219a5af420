"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
exhaustion.  Instance arguments are file paths or catalog names (Q3, E2, ...).
"""

from __future__ import annotations

import argparse
import random
import sys
from itertools import combinations
from pathlib import Path

from .errors import Exhausted, InputError, Unsupported, VerificationFailed
from .graph import classify, is_fc, maximal_cliques, is_spherical
from .instances import (CATALOG, catalog, find_instances, load_instance,
                        parse_generator_words, serialize_generator_words, serialize_instance)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_EXHAUSTED = 0, 1, 2, 3
VERIFY_NAMES = ("f4-roots", "move-invariance", "fold-lemma", "exposed-preserved", "doubles")


class Report:
    """Deterministic text report: command echo, parameters, then result lines."""

    def __init__(self, command: str, args: argparse.Namespace, params=("radius", "cutoff", "depth", "cap", "seed")):
        self.lines = [f"# coxtwist {command}"]
        self.lines.append("# " + " ".join(f"{p}={getattr(args, p)}" for p in params))

    def add(self, line: str = ""):
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _instance(arg: str):
    path = Path(arg)
    if path.exists():
        return load_instance(path)
    if arg in CATALOG:
        return catalog(arg)
    raise InputError(f"no such file or catalog instance: {arg}")


def _subset(text: str) -> list[str]:
    return [x for x in text.replace(",", " ").split() if x]


def _fmt(G, T) -> str:
    return "{" + ",".join(G.ordered(T)) + "}"


def _generating_set(ref_arg: str, words_arg: str, cutoff: int):
    from .marking import GeneratingSet
    from .words import engine_for

    G = _instance(ref_arg)
    words = parse_generator_words(Path(words_arg).read_text(encoding="utf-8"))
    return GeneratingSet.from_words(engine_for(G), words, cutoff)


# -- commands -----------------------------------------------------------------

def cmd_classify(args, rep: Report) -> int:
    G = _instance(args.file)
    rep.add(f"generators: {' '.join(G.generators)}")
    for k in range(1, len(G.generators) + 1):
        for T in combinations(G.generators, k):
            rep.add(f"{_fmt(G, T)}: {classify(G, T)}")
    return EXIT_OK


def cmd_fc(args, rep: Report) -> int:
    G = _instance(args.file)
    fc = is_fc(G)
    rep.add(f"FC: {str(fc).lower()}")
    if not fc:
        for C in maximal_cliques(G):
            if not is_spherical(G, C):
                rep.add(f"non-spherical clique: {_fmt(G, C)}")
    return EXIT_OK


def cmd_rigidity(args, rep: Report) -> int:
    from .twist import is_k_rigid, rigidity_witnesses

    G = _instance(args.file)
    k = args.k
    if is_k_rigid(G, k):
        rep.add(f"{k}-rigid: true")
    else:
        wit = ", ".join(f"J={_fmt(G, J)}" for J in rigidity_witnesses(G, k))
        rep.add(f"{k}-rigid: false; witness {wit}")
    return EXIT_OK


def cmd_twists(args, rep: Report) -> int:
    from .twist import enumerate_twists

    G = _instance(args.file)
    twists = enumerate_twists(G)
    rep.add(f"twists: {len(twists)}")
    for tau in twists:
        rep.add(f"{tau.describe(G)} A={_fmt(G, tau.A)}")
    return EXIT_OK


def cmd_twist_class(args, rep: Report) -> int:
    from .twist import is_k_rigid, twist_class

    G = _instance(args.file)
    classes, complete = twist_class(G, args.cap)
    rep.add(f"canonical graphs: {len(classes)}{'' if complete else ' (partial: cap reached)'}")
    for key in sorted(classes):
        H = classes[key]
        edges = " ".join(f"{u}-{v}:{m}" for u, v, m in H.edges())
        rep.add(f"{edges}  3-rigid={str(is_k_rigid(H, 3)).lower()}")
    return EXIT_OK if complete else EXIT_EXHAUSTED


def cmd_apply(args, rep: Report) -> int:
    from .marking import GeneratingSet
    from .twist import apply_twist_generators, twist_for

    G = _instance(args.file)
    tau = twist_for(G, _subset(args.J), _subset(args.B))
    S = apply_twist_generators(GeneratingSet.reference(G), tau, verify=True)
    inst = serialize_instance(S.graph)
    words = serialize_generator_words(S.words())
    rep.add(f"twist: {tau.describe(G)}")
    if args.out:
        Path(args.out).write_text(inst, encoding="utf-8")
        rep.add(f"instance written to {args.out}")
    else:
        rep.lines += inst.rstrip("\n").split("\n")
    if args.words_out:
        Path(args.words_out).write_text(words, encoding="utf-8")
        rep.add(f"generator words written to {args.words_out}")
    else:
        rep.lines += words.rstrip("\n").split("\n")
    return EXIT_OK


def cmd_complexity(args, rep: Report) -> int:
    from .complexity import complexity
    from .marking import check_pipeline

    S = _generating_set(args.reference, args.words, args.cutoff)
    check_pipeline(S)
    rep.add(f"complexity: {complexity(S)}")
    return EXIT_OK


def cmd_minimize(args, rep: Report) -> int:
    from .complexity import complexity, find_conjugator, minimize_complexity
    from .marking import check_pipeline

    S = _generating_set(args.reference, args.words, args.cutoff)
    check_pipeline(S)
    rep.add(f"start: {complexity(S)}")
    res = minimize_complexity(S, depth=args.depth, beam=args.beam, cap=args.cap)
    for i, (tau, H) in enumerate(res.sequence, 1):
        rep.add(f"step {i}: {tau.describe(H)}")
    rep.add(f"minimum: {res.value}{'' if res.complete else ' (partial)'}")
    rep.add(f"explored: {res.explored}")
    for lab, x in zip(res.generating_set.labels, res.generating_set.elements):
        rep.add(f"{lab} := {' '.join(x.letters)}")
    try:
        w = find_conjugator(res.generating_set, args.radius, args.cap)
        rep.add(f"conjugator: {w}")
    except Exhausted as exc:
        rep.add(f"conjugator: not found ({exc})")
        return EXIT_EXHAUSTED
    return EXIT_OK if res.complete or res.value.k1 == res.value.k2 == 0 else EXIT_EXHAUSTED


def cmd_verify(args, rep: Report) -> int:
    from . import checks

    rng = random.Random(args.seed)
    names = [args.instance] if args.instance else None
    ok, lines = checks.run(args.name, names, radius=args.radius, rng=rng)
    rep.lines += lines
    rep.add(f"{args.name}: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_find_instances(args, rep: Report) -> int:
    labels = [int(x) for x in _subset(args.labels)]
    filters = _subset(args.filter) if args.filter else []
    entries, partial = find_instances(args.n, labels, filters, args.cap)
    rep.add(f"instances: {len(entries)}{' (partial: cap reached)' if partial else ''}")
    chunks = []
    for i, (G, flags) in enumerate(entries):
        flag_txt = " ".join(f"{k}={str(v).lower()}" for k, v in sorted(flags.items()))
        edges = " ".join(f"{u}-{v}:{m}" for u, v, m in G.edges())
        rep.add(f"[{i}] {edges}  {flag_txt}")
        chunks.append(f"# instance {i} {flag_txt}\n" + serialize_instance(G))
    if args.out:
        Path(args.out).write_text("\n".join(chunks), encoding="utf-8")
        rep.add(f"catalog written to {args.out}")
    return EXIT_EXHAUSTED if partial else EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--radius", type=int, default=10)
    common.add_argument("--cutoff", type=int, default=100)
    common.add_argument("--depth", type=int, default=8)
    common.add_argument("--cap", type=int, default=100_000)
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="coxtwist", description="Coxeter generating sets and elementary twists")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    add("classify", cmd_classify, "classify every subset").add_argument("file")
    add("fc", cmd_fc, "FC verdict").add_argument("file")
    sp = add("rigidity", cmd_rigidity, "k-rigidity with witnesses")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, default=3)
    add("twists", cmd_twists, "list elementary twists").add_argument("file")
    add("twist-class", cmd_twist_class, "twist class up to isomorphism").add_argument("file")
    sp = add("apply", cmd_apply, "apply one elementary twist")
    sp.add_argument("file")
    sp.add_argument("--J", required=True, help="members of J, comma separated")
    sp.add_argument("--B", required=True, help="members of the conjugated side")
    sp.add_argument("--out", help="write the twisted instance here")
    sp.add_argument("--words-out", help="write generator words here")
    for name, fn, help_ in (("complexity", cmd_complexity, "complexity of a generating set"),
                            ("minimize", cmd_minimize, "minimise complexity by twists")):
        sp = add(name, fn, help_)
        sp.add_argument("reference")
        sp.add_argument("words")
        if name == "minimize":
            sp.add_argument("--beam", type=int, default=None)
    sp = add("verify", cmd_verify, "named verification")
    sp.add_argument("name", choices=VERIFY_NAMES)
    sp.add_argument("--instance", help="restrict to one catalog instance")
    sp = add("find-instances", cmd_find_instances, "enumerate small test instances")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--labels", default="2,3,4,5")
    sp.add_argument("--filter", default="", help="3-rigid, all-3-rigid, dihedral-twistable")
    sp.add_argument("--out")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    rep = Report(args.command, args)
    try:
        code = args.fn(args, rep)
    except VerificationFailed as exc:
        rep.add(f"verification failed: {exc}")
        code = EXIT_VERIFY
    except (InputError, Unsupported, OSError) as exc:
        rep.add(f"error: {exc}")
        code = EXIT_INPUT
    except Exhausted as exc:
        rep.add(f"exhausted: {exc}")
        code = EXIT_EXHAUSTED
    sys.stdout.write(rep.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
