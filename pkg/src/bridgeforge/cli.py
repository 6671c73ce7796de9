"""Command-line front end: verbs over .alg files (JSON presentations) with
plain-text, DOT and JSON output.

Exit codes: 0 success, 1 validation failure, 2 non-domestic input,
3 parse error, 4 internal invariant breach.
"""

import argparse
import json
import sys

from . import arch as A
from . import bands as B
from . import bridges as BR
from . import extended as E
from . import hred as HR
from . import strings as S
from .errors import (BridgeforgeError, NonDomesticError, ParseError,
                     UnknownArrow, ValidationError)
from .presentation import load_presentation
from .strings import Str

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NONDOMESTIC = 2
EXIT_PARSE = 3
EXIT_INTERNAL = 4


def _diag(kind, message):
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)


def _name(end):
    if hasattr(end, "representative"):
        return S.format_str(end.representative)
    return S.format_str(end)


def _arrow_line(u):
    return f"{_name(u.source)} --{S.format_str(u.word)}--> {_name(u.target)}"


def _band_list(p, reps):
    if reps:
        return list(B.with_representatives(p, reps.split(",")))
    return None


def _quiver_dot(q, title="quiver"):
    lines = [f'digraph "{title}" {{']
    for n in sorted(q.nodes, key=_name):
        lines.append(f'  "{_name(n)}";')
    arrows = sorted(q.arrows,
                    key=lambda a: (_name(a.source), S.format_str(a.word),
                                   _name(a.target)))
    for a in arrows:
        lines.append(f'  "{_name(a.source)}" -> "{_name(a.target)}"'
                     f' [label="{S.format_str(a.word)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _quiver_json(q):
    payload = {
        "nodes": sorted(_name(n) for n in q.nodes),
        "arrows": sorted(
            [{"source": _name(a.source), "word": S.format_str(a.word),
              "target": _name(a.target)} for a in q.arrows],
            key=lambda d: (d["source"], d["word"], d["target"])),
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit_quiver(q, args, title):
    if getattr(args, "dot", None):
        with open(args.dot, "w") as f:
            f.write(_quiver_dot(q, title))
    if getattr(args, "json", None):
        payload = {
            "nodes": sorted(_name(n) for n in q.nodes),
            "arrows": sorted(
                [{"source": _name(a.source), "word": S.format_str(a.word),
                  "target": _name(a.target)} for a in q.arrows],
                key=lambda d: (d["source"], d["word"], d["target"])),
        }
        with open(args.json, "w") as f:
            json.dump(payload, f, indent=2)
            f.write("\n")
    for a in sorted(q.arrows, key=lambda a: (_name(a.source),
                                             S.format_str(a.word),
                                             _name(a.target))):
        print(_arrow_line(a))


def cmd_validate(args):
    p = load_presentation(args.file)
    B.bands(p)  # also certifies domesticity
    print(f"ok: {len(p.vertices)} vertices, {len(p.arrows)} arrows, "
          f"{len(p.relations)} relations")
    return EXIT_OK


def cmd_bands(args):
    p = load_presentation(args.file)
    for b in B.bands(p):
        print(S.format_str(b.representative))
    return EXIT_OK


def cmd_weak_bridges(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    for u in sorted(BR.all_weak_bridges(p, bl),
                    key=lambda u: (_name(u.source), S.format_str(u.word))):
        print(_arrow_line(u))
    return EXIT_OK


def cmd_quiver(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    builders = {"bridge-quiver": BR.build_bridge_quiver,
                "arch-quiver": A.build_arch_quiver,
                "semi-quiver": A.build_semi_quiver}
    q = builders[args.verb](p, bl)
    _emit_quiver(q, args, args.verb)
    return EXIT_OK


def cmd_extended_quiver(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    x0 = S.parse_str(p, args.base)
    i = int(args.sign)
    builders = {"weak": E.build_extended_weak_quiver,
                "bridge": E.build_extended_bridge_quiver,
                "arch": E.build_extended_arch_quiver}
    q = builders[args.tier](p, x0, i, bl)
    _emit_quiver(q, args, f"extended-{args.tier}")
    return EXIT_OK


def cmd_reduce(args):
    p = load_presentation(args.file)
    y = S.parse_str(p, args.string)
    result, trace = HR.hh(p, y)
    print(S.format_str(result))
    for step in trace:
        rep = S.format_str(Str.word(step.band.canonical))
        print(f"band={rep} rotation={S.format_str(step.rotation)} "
              f"pos={step.position}")
    return EXIT_OK


def _find_arrows(p, bl, word):
    return [u for u in BR.all_weak_bridges(p, bl) if u.word == word]


def cmd_compose(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    w2 = S.parse_str(p, args.u2)
    w1 = S.parse_str(p, args.u1)
    pairs = [(u2, u1)
             for u1 in _find_arrows(p, bl, w1)
             for u2 in _find_arrows(p, bl, w2)
             if u2.source == u1.target]
    if not pairs:
        _diag("compose", "no composable weak bridges with these words")
        return EXIT_INVALID
    for u2, u1 in pairs:
        c = BR.compose(p, u2, u1)
        if c and c.arrow:
            print(f"{args.u2} o {args.u1} = {S.format_str(c.arrow.word)} : "
                  f"{_name(u1.source)} -> {_name(u2.target)} [{c.tag}]")
        else:
            tag = c.tag if c else "undefined"
            print(f"{args.u2} o {args.u1} undefined [{tag}]")
        if args.h:
            h = A.compose_H(p, u2, u1)
            print(f"{args.u2} o_H {args.u1} = {S.format_str(h.word)} : "
                  f"{_name(u1.source)} -> {_name(u2.target)}")
    return EXIT_OK


def cmd_factor(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    w = S.parse_str(p, args.word)
    arrows = _find_arrows(p, bl, w)
    if not arrows:
        _diag("factor", "no weak bridge with this word")
        return EXIT_INVALID
    for u in arrows:
        if args.arch:
            factors = A.factor_arch(p, u, bl)
            words = " , ".join(S.format_str(f.word) for f in factors)
            print(f"{_arrow_line(u)} = o_H({words})")
            continue
        found = False
        for u1 in BR.all_weak_bridges(p, bl):
            if u1.source != u.source:
                continue
            for u2 in BR.all_weak_bridges(p, bl):
                if u2.source != u1.target or u2.target != u.target:
                    continue
                c = BR.compose(p, u2, u1)
                if c and c.arrow and c.arrow.word == u.word:
                    print(f"{_arrow_line(u)} = "
                          f"{S.format_str(u2.word)} o {S.format_str(u1.word)}")
                    found = True
        if not found:
            print(f"{_arrow_line(u)} is o-irreducible (a bridge)")
    return EXIT_OK


def cmd_hammock(args):
    p = load_presentation(args.file)
    x0 = S.parse_str(p, args.base)
    for el in E.hammock_segment(p, x0, args.maxlen):
        print(f"{S.format_str(el.word)} side={el.side:+d}")
    return EXIT_OK


def cmd_export(args):
    p = load_presentation(args.file)
    bl = _band_list(p, args.reps)
    if args.what == "extended":
        x0 = S.parse_str(p, args.base)
        q = E.build_extended_weak_quiver(p, x0, int(args.sign), bl)
    else:
        builders = {"weak": BR.build_weak_bridge_quiver,
                    "bridge": BR.build_bridge_quiver,
                    "arch": A.build_arch_quiver,
                    "semi": A.build_semi_quiver}
        q = builders[args.what](p, bl)
    text = (_quiver_dot(q, args.what) if args.format == "dot"
            else _quiver_json(q))
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_common(sp):
    sp.add_argument("file", help=".alg presentation (JSON)")
    sp.add_argument("--reps", default=None,
                    help="comma-separated band representatives to re-base "
                         "orbits on (others keep canonical)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="bridgeforge",
        description="Bridge quivers of domestic string algebras. "
        "BRIDGEFORGE_MAXLEN caps band-free/H-string enumeration lengths "
        "(default: max(64, 4 * number of syllables)).")
    sub = ap.add_subparsers(dest="verb", required=True)

    sp = sub.add_parser("validate", help="check the presentation axioms")
    sp.add_argument("file")

    sp = sub.add_parser("bands", help="list band orbit representatives")
    sp.add_argument("file")

    sp = sub.add_parser("weak-bridges", help="list all weak bridges")
    _add_common(sp)

    for verb in ("bridge-quiver", "arch-quiver", "semi-quiver"):
        sp = sub.add_parser(verb, help=f"print the {verb.replace('-', ' ')}")
        _add_common(sp)
        sp.add_argument("--dot", help="also write DOT to this path")
        sp.add_argument("--json", help="also write JSON to this path")

    sp = sub.add_parser("extended-quiver",
                        help="extended quiver relative to a base string")
    _add_common(sp)
    sp.add_argument("--base", required=True, help='base string x0, e.g. "D" '
                    'or "1_(v2,+1)"')
    sp.add_argument("--sign", required=True, choices=["+1", "-1", "1"],
                    help="side i of the hammock of x0")
    sp.add_argument("--tier", choices=["weak", "bridge", "arch"],
                    default="weak")
    sp.add_argument("--dot", help="also write DOT to this path")
    sp.add_argument("--json", help="also write JSON to this path")

    sp = sub.add_parser("reduce", help="H-reduce a string, with trace")
    sp.add_argument("file")
    sp.add_argument("string")

    sp = sub.add_parser("compose", help="compose two weak bridges by word")
    _add_common(sp)
    sp.add_argument("u2")
    sp.add_argument("u1")
    sp.add_argument("--h", action="store_true", help="also compute o_H")

    sp = sub.add_parser("factor", help="factor a weak bridge")
    _add_common(sp)
    sp.add_argument("word")
    sp.add_argument("--arch", action="store_true",
                    help="unique o_H-factorization into arch bridges")

    sp = sub.add_parser("hammock", help="an initial segment of H_l(x0)")
    sp.add_argument("file")
    sp.add_argument("--base", required=True)
    sp.add_argument("--maxlen", type=int, required=True)

    sp = sub.add_parser("export", help="export a quiver as DOT or JSON")
    _add_common(sp)
    sp.add_argument("--what", required=True,
                    choices=["weak", "bridge", "arch", "semi", "extended"])
    sp.add_argument("--format", required=True, choices=["dot", "json"])
    sp.add_argument("--base", help="base string (what=extended)")
    sp.add_argument("--sign", default="1", choices=["+1", "-1", "1"])
    sp.add_argument("-o", "--output")

    return ap


_DISPATCH = {
    "validate": cmd_validate,
    "bands": cmd_bands,
    "weak-bridges": cmd_weak_bridges,
    "bridge-quiver": cmd_quiver,
    "arch-quiver": cmd_quiver,
    "semi-quiver": cmd_quiver,
    "extended-quiver": cmd_extended_quiver,
    "reduce": cmd_reduce,
    "compose": cmd_compose,
    "factor": cmd_factor,
    "hammock": cmd_hammock,
    "export": cmd_export,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.verb](args)
    except (ParseError, UnknownArrow) as e:
        _diag("parse", str(e))
        return EXIT_PARSE
    except ValidationError as e:
        _diag(getattr(e, "axiom", "validation"), str(e))
        return EXIT_INVALID
    except NonDomesticError as e:
        _diag("non-domestic", str(e))
        return EXIT_NONDOMESTIC
    except (json.JSONDecodeError, OSError) as e:
        _diag("parse", str(e))
        return EXIT_PARSE
    except BridgeforgeError as e:
        _diag(type(e).__name__, str(e))
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
