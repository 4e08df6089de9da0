"""Command-line entry point: ``icircular <subcommand> ...``.

Exit codes: 0 the property holds (or verification passed), 1 it fails,
2 input or usage error, 3 the instance is over a brute-force guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .binmat import BinaryMatrix, mask_complement
from .c1p import find_forb_certificate, has_circular_ones
from .errors import DomainError, GuardError
from .families import (
    gen_G,
    gen_H,
    gen_MI,
    gen_MII,
    gen_MIII,
    gen_MIV,
    gen_MIstar,
    gen_MV,
    gen_MVI,
    gen_MVstar,
    gen_Q,
    gen_R,
    gen_W,
)
from .graphs import Graph
from .icirc import find_iforb_certificate, has_i_circular
from .orientation import brute_force_semi_transitive
from .seqcore import enumerate_bracelets, seq_str
from .splitgraph import is_semi_transitive_split, split_partition
from .verify import REGISTRY, run_all
from .wordrep import as_word, word_represents


class InputError(Exception):
    pass


def _read_lines(path: str) -> list[str]:
    try:
        if path == "-":
            return sys.stdin.read().splitlines()
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _content(lines: list[str]):
    for n, raw in enumerate(lines, 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield n, line


def parse_matrix(lines: list[str]) -> BinaryMatrix:
    rows: list[str] = []
    width = None
    for n, line in _content(lines):
        line = line.replace(" ", "")
        if set(line) - {"0", "1"}:
            raise InputError(f"line {n}: expected only 0 and 1, got {line!r}")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise InputError(f"line {n}: row has {len(line)} entries, expected {width}")
        rows.append(line)
    if not rows:
        raise InputError("no matrix rows found")
    return BinaryMatrix.from_strings(rows)


def parse_graph(lines: list[str]) -> Graph:
    body = list(_content(lines))
    if not body:
        raise InputError("missing 'n m' header")
    n0, head = body[0]
    try:
        n, m = (int(x) for x in head.split())
    except ValueError:
        raise InputError(f"line {n0}: expected 'n m', got {head!r}") from None
    if n < 0 or m < 0:
        raise InputError(f"line {n0}: counts must be nonnegative")
    if len(body) - 1 != m:
        raise InputError(f"line {n0}: header promises {m} edges, found {len(body) - 1}")
    edges = set()
    for ln, line in body[1:]:
        try:
            u, v = (int(x) for x in line.split())
        except ValueError:
            raise InputError(f"line {ln}: expected 'u v', got {line!r}") from None
        if not 1 <= u < v <= n:
            raise InputError(f"line {ln}: need 1 <= u < v <= {n}, got {u} {v}")
        if (u, v) in edges:
            raise InputError(f"line {ln}: repeated edge {u} {v}")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def _emit(args, verdict: bool, prop: str, human: list[str], order=None, certificate=None, extra=None):
    if args.json:
        out: dict = {"property": prop, "verdict": verdict}
        if order is not None:
            out["order"] = list(order)
        if certificate is not None:
            out["certificate"] = certificate
        if extra:
            out.update(extra)
        print(json.dumps(out, sort_keys=True))
    else:
        for line in human:
            print(line)
    return 0 if verdict else 1


def _fmt(seq) -> str:
    return " ".join(map(str, seq))


def _matrix_command(args, prop: str, decide, certify, yes: str, no: str) -> int:
    m = parse_matrix(_read_lines(args.file))
    order = decide(m)
    if order is not None:
        return _emit(args, True, prop, [f"{yes} {_fmt(order)}"], order=order)
    cert = certify(m)
    if cert is None:
        raise AssertionError("negative decision without a certificate")
    human = [no, json.dumps(cert.to_json(), sort_keys=True)]
    return _emit(args, False, prop, human, certificate=cert.to_json())


def cmd_c1p(args) -> int:
    return _matrix_command(args, "circular-ones", has_circular_ones, find_forb_certificate,
                           "CIRCULAR", "NOT-CIRCULAR")


def cmd_icirc(args) -> int:
    return _matrix_command(args, "i-circular", has_i_circular, find_iforb_certificate,
                           "I-CIRCULAR", "NOT-I-CIRCULAR")


def cmd_split(args) -> int:
    g = parse_graph(_read_lines(args.file))
    sg = split_partition(g)
    if sg is None:
        raise InputError("graph is not a split graph")
    cert = is_semi_transitive_split(sg)
    if cert.verdict:
        human = [f"SEMI-TRANSITIVE {_fmt(cert.order)}"]
        return _emit(args, True, "semi-transitive", human, order=cert.order)
    payload = {"gforbMember": cert.member.label(), "vertexMap": list(cert.vertex_map)}
    human = ["NOT-SEMI-TRANSITIVE", json.dumps(payload, sort_keys=True)]
    return _emit(args, False, "semi-transitive", human,
                 certificate=cert.member.to_json(), extra=payload)


def cmd_orient(args) -> int:
    g = parse_graph(_read_lines(args.file))
    o = brute_force_semi_transitive(g)
    if o is None:
        return _emit(args, False, "semi-transitive-orientation", ["NOT-SEMI-TRANSITIVE"])
    arcs = sorted(o.arcs)
    human = ["SEMI-TRANSITIVE"] + [f"{u} -> {v}" for u, v in arcs]
    return _emit(args, True, "semi-transitive-orientation", human,
                 extra={"arcs": [list(a) for a in arcs]})


_SIZED = {"MI": gen_MI, "MIstar": gen_MIstar, "MII": gen_MII, "MIII": gen_MIII}
_FIXED = {"MIV": gen_MIV, "MV": gen_MV, "MVstar": gen_MVstar, "MVI": gen_MVI}


def _gen_matrix(args) -> BinaryMatrix:
    fam, params = args.family, args.params
    try:
        if fam in _SIZED:
            (k,) = params
            m = _SIZED[fam](int(k))
        elif fam in _FIXED:
            if params:
                raise InputError(f"{fam} takes no parameters")
            m = _FIXED[fam]()
        elif fam == "R":
            (b,) = params
            m = gen_R(b)
        elif fam == "W":
            (b,) = params
            m = gen_W(b, args.variant)
        elif fam == "H":
            i, alpha = params
            m = gen_H(int(i), alpha)
        elif fam == "G":
            (gamma,) = params
            m = gen_G(gamma)
        elif fam == "Q":
            j, i, k = params
            m = gen_Q(int(j), int(i), int(k))
        else:
            raise InputError(f"unknown family {fam!r}")
    except DomainError:
        raise
    except ValueError:
        raise InputError(f"wrong parameters for {fam}: {' '.join(params) or '(none)'}") from None
    return mask_complement(args.mask, m) if args.mask else m


def cmd_gen(args) -> int:
    m = _gen_matrix(args)
    if args.json:
        print(json.dumps({"family": args.family, "rows": m.to_strings()}))
    else:
        for row in m.to_strings():
            print(row)
    return 0


def cmd_word(args) -> int:
    g = parse_graph(_read_lines(args.graph))
    w = as_word(args.word, g.n)
    ok = word_represents(w, g)
    return _emit(args, ok, "represents", ["REPRESENTS" if ok else "DOES-NOT-REPRESENT"])


def cmd_bracelets(args) -> int:
    found = [seq_str(b) for b in enumerate_bracelets(args.k)]
    if args.json:
        print(json.dumps({"k": args.k, "bracelets": found}))
    else:
        for b in found:
            print(b)
    return 0


def cmd_verify(args) -> int:
    opts = {"k_max": args.kmax, "samples": args.samples, "seed": args.seed}
    if args.lemma == "all":
        reports = run_all(**opts)
    elif args.lemma in REGISTRY:
        reports = [REGISTRY[args.lemma](**opts)]
    else:
        raise InputError(f"unknown check {args.lemma!r}; choose from all, {', '.join(REGISTRY)}")
    for rep in reports:
        print(rep.line(), flush=True)
    return 0 if all(r.passed for r in reports) else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="icircular", description="Circular-ones, I-circular and semi-transitive split-graph checks.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    # Also accepted after the subcommand; SUPPRESS keeps it from resetting the flag.
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, fn, help_ in (
        ("c1p", cmd_c1p, "decide the circular-ones property"),
        ("icirc", cmd_icirc, "decide the I-circular property"),
    ):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.add_argument("file", help="matrix file, or - for standard input")
        s.set_defaults(func=fn)

    s = sub.add_parser("split", parents=[common], help="semi-transitivity of a split graph")
    s.add_argument("file")
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("orient", parents=[common], help="brute-force semi-transitive orientation")
    s.add_argument("file")
    s.set_defaults(func=cmd_orient)

    s = sub.add_parser("gen", parents=[common], help="print a family member")
    s.add_argument("family")
    s.add_argument("params", nargs="*")
    s.add_argument("--mask", help="complement the rows flagged by this binary mask")
    s.add_argument("--variant", choices=("literal", "figure"), default="literal")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("word", parents=[common], help="does a word represent a graph")
    s.add_argument("word")
    s.add_argument("graph")
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("bracelets", parents=[common], help="binary bracelets of length k")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_bracelets)

    s = sub.add_parser("verify", parents=[common], help="run lemma and theorem checks")
    s.add_argument("lemma", help="check id or 'all'")
    s.add_argument("--kmax", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
