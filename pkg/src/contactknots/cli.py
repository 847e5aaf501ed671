"""Command-line front end.

Exit status: 0 on success (including searches that end with no result),
1 on domain errors such as malformed braids or fronts, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import TextIO

from . import __version__
from .braid import (
    BraidError,
    SearchBudget,
    closure_components,
    exponent_sum,
    format_braid,
    negative_braid_stabilize,
    parse_braids,
    permutation,
    positive_markov_stabilize,
)
from .contact import DEFAULT_STEP, DEFAULT_TOLERANCE, GridSpec, get_form, is_contact_on_grid
from .cover import (
    CoverError,
    alexander_polynomial,
    certify_overtwisted,
    cyclic_cover_homology_order,
    format_certificate,
)
from .front import (
    FrontError,
    format_front,
    orient,
    parse_front,
    rotation_number,
    self_linking_of_pushoff,
    stabilize,
    thurston_bennequin,
    writhe,
)
from .replay import ReplayError
from .transverse import TransverseBraid, equivalence_search, self_linking

DEFAULT_GRIDS = {
    "std": "-2:2:21,-2:2:21,-2:2:21",
    "sym": "0.06:3:50,0:6.283185307179586:50,-1:1:10",
    "ot": "0.09424777960769379:9.42477796076938:100,0:6.283185307179586:12,-1:1:5",
}


class _Output:
    def __init__(self, stream: TextIO, fmt: str):
        self.stream = stream
        self.fmt = fmt

    def emit(self, record: dict, text: str) -> None:
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            self.stream.write(text if text.endswith("\n") else text + "\n")


def _read(arg: str) -> str:
    path = Path(arg)
    if path.is_file():
        return path.read_text()
    return arg


def _braids(arg: str):
    words = parse_braids(_read(arg))
    if not words:
        raise BraidError(f"no braid word in {arg!r}")
    return words


def _one_braid(arg: str):
    words = _braids(arg)
    if len(words) != 1:
        raise BraidError(f"expected one braid word in {arg!r}, found {len(words)}")
    return words[0]


def _budget(args) -> SearchBudget:
    return SearchBudget(max_depth=args.budget_depth, max_states=args.budget_states,
                        braid_relations=args.braid_relations, extra_strands=args.extra_strands)


# -- subcommands --------------------------------------------------------------

def cmd_invariants(args, out: _Output) -> None:
    for b in _braids(args.braid):
        comps = closure_components(b)
        rec = {
            "braid": format_braid(b), "strands": b.strands, "length": len(b),
            "exponent_sum": exponent_sum(b), "permutation": list(permutation(b).images),
            "components": comps, "sl": self_linking(b),
        }
        lines = [f"braid: {rec['braid']}", f"strands: {b.strands}", f"length: {len(b)}",
                 f"exponent-sum: {rec['exponent_sum']}",
                 "permutation: " + " ".join(map(str, rec["permutation"])),
                 f"components: {comps}", f"sl = {rec['sl']}"]
        if comps == 1:
            rec["alexander"] = str(alexander_polynomial(b))
            lines.append(f"alexander: {rec['alexander']}")
        out.emit(rec, "\n".join(lines))


def cmd_sl(args, out: _Output) -> None:
    for b in _braids(args.braid):
        sl = self_linking(b)
        out.emit({"braid": format_braid(b), "sl": sl}, f"sl = {sl}")


def cmd_stabilize(args, out: _Output) -> None:
    positive = args.sign in ("positive", "+")
    if args.front:
        if args.at is None:
            raise FrontError("--at EVENT:LEVEL is required for fronts")
        event, _, level = args.at.partition(":")
        front = stabilize(parse_front(_read(args.input)), "+" if positive else "-",
                          (int(event), int(level)))
        text = format_front(front)
        out.emit({"front": text}, text)
        return
    for b in _braids(args.input):
        new = positive_markov_stabilize(b) if positive else negative_braid_stabilize(b)
        text = format_braid(new)
        out.emit({"braid": text, "sl": self_linking(new)}, text)


def cmd_equiv(args, out: _Output) -> None:
    a, b = _one_braid(args.a), _one_braid(args.b)
    budget = _budget(args)
    res = equivalence_search(a, b, budget)
    rec = {"a": format_braid(a), "b": format_braid(b), "result": res.reason,
           "budget": budget.describe()}
    lines = [f"a: {rec['a']}", f"b: {rec['b']}", f"result: {res.reason}"]
    if res.found:
        wa, wb = res.witnesses
        rec["common"] = format_braid(res.common)
        rec["witness_a"] = [str(s) for s in wa.steps]
        rec["witness_b"] = [str(s) for s in wb.steps]
        lines += [f"common: {rec['common']}",
                  "witness-a: " + ("; ".join(rec["witness_a"]) or "-"),
                  "witness-b: " + ("; ".join(rec["witness_b"]) or "-")]
    lines.append(f"budget: {rec['budget']}")
    out.emit(rec, "\n".join(lines))


def cmd_certify(args, out: _Output) -> None:
    budget = _budget(args)
    for b in _braids(args.braid):
        cert = certify_overtwisted(TransverseBraid(b, args.label), budget)
        if cert is None:
            rec = {"input": format_braid(b), "result": "none (budget exhausted)",
                   "budget": budget.describe()}
            out.emit(rec, f"input: {rec['input']}\nresult: none (budget exhausted)\n"
                          f"budget: {rec['budget']}")
        else:
            text = format_certificate(cert)
            rec = {"certificate": text, "input": format_braid(b), "result": "certified",
                   "steps": [str(s) for s in cert.witness.steps],
                   "terminal": cert.witness.terminal,
                   "destabilized": format_braid(cert.destabilized),
                   "budget": budget.describe()}
            out.emit(rec, text)


def cmd_cover(args, out: _Output) -> None:
    if args.n < 2:
        raise CoverError(f"cover degree must be at least 2, got {args.n}")
    for b in _braids(args.braid):
        delta = alexander_polynomial(b)
        order = cyclic_cover_homology_order(b, args.n)
        shown = f"{order}" if order else "0 (infinite)"
        rec = {"braid": format_braid(b), "n": args.n, "alexander": str(delta), "h1_order": order}
        out.emit(rec, f"braid: {rec['braid']}\nalexander: {delta}\n|H1(Sigma_{args.n})| = {shown}")


def cmd_contact_check(args, out: _Output) -> None:
    form = get_form(args.form)
    key = {"standard": "std", "symmetric": "sym", "overtwisted-radial": "ot"}[form.tag]
    grid = GridSpec.parse(args.grid or DEFAULT_GRIDS[key])
    rep = is_contact_on_grid(form, grid, h=args.h, tolerance=args.tol)
    rec = {"form": form.tag, "alpha": form.formula, "samples": rep.samples,
           "min_abs_density": rep.min_abs_density, "argmin": list(rep.argmin),
           "max_abs_density": rep.max_abs_density, "tolerance": rep.tolerance,
           "result": "pass" if rep.passed else "fail"}
    text = "\n".join([
        f"form: {form.tag} (alpha = {form.formula})",
        f"samples: {rep.samples}",
        f"min |density|: {rep.min_abs_density:.12g} at {tuple(round(v, 12) for v in rep.argmin)}",
        f"max |density|: {rep.max_abs_density:.12g}",
        f"result: {rec['result']} (tolerance {rep.tolerance:g})",
    ])
    out.emit(rec, text)


def cmd_front_invariants(args, out: _Output) -> None:
    front = parse_front(_read(args.front))
    of = orient(front)
    up, down = of.cusp_counts()
    rec = {"front": format_front(front), "components": len(of.components),
           "cusps": front.cusp_count, "up_cusps": up, "down_cusps": down,
           "crossings": front.crossing_count, "writhe": writhe(of)}
    lines = [f"front: {rec['front']}", f"components: {rec['components']}",
             f"cusps: {front.cusp_count} (up {up}, down {down})",
             f"crossings: {front.crossing_count}", f"writhe = {rec['writhe']}"]
    if len(of.components) == 1 and front.is_legendrian():
        rec.update(tb=thurston_bennequin(of), r=rotation_number(of), sl=self_linking_of_pushoff(of))
        lines += [f"tb = {rec['tb']}", f"r = {rec['r']}", f"sl = {rec['sl']}"]
    else:
        lines.append("tb, r: not computed (needs a single-component Legendrian front)")
    out.emit(rec, "\n".join(lines))


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl"), default="text",
                        help="output format (default: text)")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--budget-depth", type=int, default=SearchBudget.max_depth)
    search.add_argument("--budget-states", type=int, default=SearchBudget.max_states)
    search.add_argument("--extra-strands", type=int, default=SearchBudget.extra_strands)
    search.add_argument("--braid-relations", action="store_true",
                        help="also try far commutation and the braid relation")

    p = argparse.ArgumentParser(prog="contactknots",
                                description="Legendrian and transverse knot invariants, "
                                            "braid moves and overtwistedness certificates.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("invariants", parents=[common], help="braid and closure invariants")
    s.add_argument("braid", help="braid text or a file of braid words")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("sl", parents=[common], help="self-linking number of a closed braid")
    s.add_argument("braid")
    s.set_defaults(func=cmd_sl)

    s = sub.add_parser("stabilize", parents=[common], help="stabilize a braid or a front")
    s.add_argument("input")
    s.add_argument("--sign", choices=("positive", "negative", "+", "-"), required=True)
    s.add_argument("--front", action="store_true", help="treat the input as a front")
    s.add_argument("--at", help="front segment EVENT:LEVEL")
    s.set_defaults(func=cmd_stabilize)

    s = sub.add_parser("equiv", parents=[common, search], help="transverse Markov equivalence search")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("certify", parents=[common, search], help="certify overtwisted cyclic covers")
    s.add_argument("braid")
    s.add_argument("--label")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("cover", parents=[common], help="|H_1| of the n-fold cyclic branched cover")
    s.add_argument("braid")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("contact-check", parents=[common], help="check alpha ^ d alpha != 0 on a grid")
    s.add_argument("--form", choices=("std", "sym", "ot"), required=True)
    s.add_argument("--grid", help="lo:hi:n,lo:hi:n,lo:hi:n in the form's coordinates")
    s.add_argument("--h", type=float, default=DEFAULT_STEP)
    s.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE)
    s.set_defaults(func=cmd_contact_check)

    s = sub.add_parser("front-invariants", parents=[common], help="tb, r and sl of a front")
    s.add_argument("front", help="front text or a .front file")
    s.set_defaults(func=cmd_front_invariants)
    return p


def run(argv=None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, _Output(stdout, args.format))
    except (BraidError, FrontError, CoverError, ReplayError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
