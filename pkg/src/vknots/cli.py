"""Command-line front end: ``vknots <command> ...``.

Every command is a thin adapter over the library.  With ``--json`` the
output is one JSON object carrying ``schema_version``, the tool version and
a hash of the inputs.  Exit codes: 0 ok, 1 usage, 2 domain error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__, catalog
from .correspondence import (
    arc_names,
    enumerate_realizations,
    group_of_diagram,
    longitude_of_diagram,
    realize_presentation,
)
from .errors import VKError
from .gauss import GaussDiagram, connected_sum, parse_gauss_code
from .homology import homology_of_presentation_complex, pontryagin_generator
from .invariants.bracket import bracket, normalized_polynomial
from .invariants.groups import FiniteGroup, group_by_name, load_table_file
from .invariants.homs import enumerate_homs
from .invariants.realizable import empirical_realizable_search, realizable_set, weight_one_note
from .moves import enumerate_moves, simplify_with_log
from .wirtinger import prepare_cyclic, recognize, to_chain, to_realizable, with_longitude_relator
from .words import Presentation, format_word, parse_presentation, parse_word

SCHEMA_VERSION = 1


@dataclass
class CommandResult:
    status: str
    payload: dict[str, Any]
    text: str
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = 0
    command: str | None = None


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --- input helpers ------------------------------------------------------------


_NOTES: list[str] = []


def _read_code(arg: str) -> GaussDiagram:
    path = Path(arg)
    if arg and path.is_file():
        lines = [ln.strip() for ln in path.read_text().splitlines() if ln.strip()]
        if len(lines) > 1:
            _NOTES.append(f"{arg} holds {len(lines)} codes; using the first")
        arg = lines[0] if lines else ""
    elif arg in catalog.CODES:
        arg = catalog.CODES[arg]
    return parse_gauss_code(arg)


def _read_presentation(arg: str) -> Presentation:
    path = Path(arg)
    if path.is_file():
        return parse_presentation(path.read_text())
    stem = path.stem if path.suffix == ".pres" else arg
    if stem in catalog.PRESENTATIONS:
        return catalog.presentation(stem)
    if "gens:" in arg:
        return parse_presentation(arg)
    raise UsageError(f"no presentation file or fixture named {arg!r}")


def _read_group(arg: str) -> FiniteGroup:
    if Path(arg).is_file():
        return load_table_file(arg)
    return group_by_name(arg)


# --- commands -------------------------------------------------------------------


def cmd_info(a):
    d = _read_code(a.code)
    names = list(arc_names(d)) if d.n else ["t"]
    payload = {"code": d.code(), "n": d.n, "writhe": d.writhe, "arcs": names}
    text = f"n = {d.n}\nwrithe = {d.writhe}\narcs = {' '.join(names)}"
    return payload, text


def cmd_group(a):
    w = group_of_diagram(_read_code(a.code))
    return {"presentation": str(w)}, str(w)


def cmd_peripheral(a):
    d = _read_code(a.code)
    pd = longitude_of_diagram(d, a.arc)
    payload = {"meridian": pd.meridian, "longitude": format_word(pd.longitude), "framing_p": pd.framing_p}
    text = f"meridian = {pd.meridian}\nlongitude = {format_word(pd.longitude)}\np = {pd.framing_p}"
    return payload, text


def cmd_bracket(a):
    d = _read_code(a.code)
    p = normalized_polynomial(d) if a.normalized else bracket(d)
    return {"polynomial": str(p), "normalized": a.normalized}, str(p)


def cmd_realize(a):
    w = recognize(_read_presentation(a.presentation))
    notes = []
    if a.longitude is not None:
        chain = to_chain(w)
        lam = parse_word(a.longitude, chain.generators)
        w = with_longitude_relator(chain, lam)
        notes.append("the longitude must commute with the first generator in the group; this is not checked")
    w = to_realizable(prepare_cyclic(w))
    if a.enumerate:
        reals = enumerate_realizations(w, cap=a.enumerate)
    else:
        reals = [realize_presentation(w)]
    items = [{"code": r.diagram.code(), "tail_order": [list(t) for t in r.tail_order]} for r in reals]
    payload = {"presentation": str(w), "realizations": items}
    return payload, "\n".join(r.diagram.code() for r in reals), notes


def cmd_cyclic(a):
    w = prepare_cyclic(recognize(_read_presentation(a.presentation)))
    return {"presentation": str(w)}, str(w)


def cmd_realizable(a):
    w = to_realizable(prepare_cyclic(recognize(_read_presentation(a.presentation))))
    return {"presentation": str(w)}, str(w)


def cmd_sum(a):
    d = connected_sum(_read_code(a.code1), a.gap1, _read_code(a.code2), a.gap2)
    return {"code": d.code()}, d.code()


def cmd_homology(a):
    p = _read_presentation(a.presentation)
    h1, h2 = homology_of_presentation_complex(p)
    payload: dict[str, Any] = {"H1": str(h1), "H2_complex": str(h2)}
    notes = ["H2 of the group is a quotient of H2_complex; torsion there cannot be certified"]
    try:
        w = recognize(p)
    except VKError:
        w = None
    if w is not None and w.deficiency == 0 and w.is_cyclic():
        payload["kernel_generator"] = list(pontryagin_generator(w).vector)
    text = f"H1 = {h1}\nH2_complex = {h2}"
    return payload, text, notes


def cmd_homs(a):
    p = _read_presentation(a.presentation)
    g = _read_group(a.group)
    fix = {p.generators[0]: g.element(a.meridian)} if a.meridian else None
    hs = enumerate_homs(p, g, fix=fix, surjective_only=a.surjective, budget=a.budget)
    rows = [[g.names[x] for x in h] for h in hs.homs]
    payload = {"group": g.name, "order": g.order, "count": len(hs), "generators": list(p.generators), "homs": rows}
    text = f"{len(hs)} homomorphisms to {g.name}\n" + "\n".join(" ".join(r) for r in rows)
    return payload, text.rstrip()


def cmd_lambda(a):
    g = _read_group(a.group)
    mu = g.element(a.mu)
    lam = realizable_set(g, mu)
    notes = [n for n in (weight_one_note(g, mu),) if n]
    payload: dict[str, Any] = {"group": g.name, "mu": a.mu, "realizable_set": sorted(g.names[x] for x in lam)}
    text = g.format_set(lam)
    if a.search:
        res = empirical_realizable_search(g, mu, budget=a.budget, seed=a.seed)
        payload["search"] = {
            "found": sorted(g.names[x] for x in res.found),
            "witnesses": {g.names[x]: c for x, c in sorted(res.witnesses.items())},
            "diagrams_checked": res.diagrams_checked,
            "exhausted": res.exhausted,
        }
        text += f"\nsearch found {g.format_set(res.found)} in {res.diagrams_checked} diagrams"
    return payload, text, notes


def cmd_simplify(a):
    d, log = simplify_with_log(_read_code(a.code), a.budget)
    payload = {"code": d.code(), "n": d.n, "moves": [str(m) for m in log]}
    return payload, "\n".join([d.code() or "(empty)", *map(str, log)])


def cmd_moves(a):
    moves = enumerate_moves(_read_code(a.code))
    return {"moves": [str(m) for m in moves]}, "\n".join(map(str, moves))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="vknots", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    p.add_argument("--version", action="version", version=f"vknots {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, *args):
        s = sub.add_parser(name)
        for arg in args:
            s.add_argument(arg)
        s.set_defaults(func=fn)
        return s

    add("info", cmd_info, "code")
    add("group", cmd_group, "code")
    add("peripheral", cmd_peripheral, "code").add_argument("--arc", default="t1")
    add("bracket", cmd_bracket, "code").add_argument("--normalized", action="store_true")
    s = add("realize", cmd_realize, "presentation")
    s.add_argument("--enumerate", type=int, metavar="N")
    s.add_argument("--longitude", metavar="WORD")
    add("cyclic", cmd_cyclic, "presentation")
    add("realizable", cmd_realizable, "presentation")
    s = add("sum", cmd_sum, "code1")
    s.add_argument("gap1", type=int)
    s.add_argument("code2")
    s.add_argument("gap2", type=int)
    add("homology", cmd_homology, "presentation")
    s = add("homs", cmd_homs, "presentation")
    s.add_argument("--group", required=True)
    s.add_argument("--meridian")
    s.add_argument("--surjective", action="store_true")
    s.add_argument("--budget", type=int, default=2_000_000)
    s = add("lambda", cmd_lambda)
    s.add_argument("--group", required=True)
    s.add_argument("--mu", required=True)
    s.add_argument("--search", action="store_true", help="also run the empirical diagram search")
    s.add_argument("--budget", type=int, default=2000)
    add("simplify", cmd_simplify, "code").add_argument("--budget", type=int, required=True)
    add("moves", cmd_moves, "code")
    return p


def _input_hash(argv: list[str]) -> str:
    h = hashlib.sha256()
    for arg in argv:
        h.update(arg.encode())
        path = Path(arg)
        if arg and path.is_file():
            h.update(path.read_bytes())
        h.update(b"\0")
    return h.hexdigest()[:16]


def run(argv: list[str]) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return CommandResult("error", {"code": "usage", "message": str(exc)}, f"usage error: {exc}", exit_code=1)
    _NOTES.clear()
    try:
        out = args.func(args)
    except UsageError as exc:
        res = CommandResult("error", {"code": "usage", "message": str(exc)}, f"usage error: {exc}", exit_code=1)
    except VKError as exc:
        res = CommandResult(
            "error", {"code": exc.code, "message": str(exc)}, f"error [{exc.code}]: {exc}", exit_code=exc.exit_status
        )
    else:
        payload, text, *rest = out
        res = CommandResult("ok", payload, text, list(rest[0]) if rest else [])
    res.diagnostics = _NOTES + res.diagnostics
    res.command = args.command
    return res


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    res = run(argv)
    as_json = "--json" in argv
    if as_json:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "tool": "vknots",
            "version": __version__,
            "command": res.command,
            "input_hash": _input_hash(argv),
            "status": res.status,
            "payload": res.payload,
            "diagnostics": res.diagnostics,
        }
        print(json.dumps(doc, sort_keys=True))
    else:
        stream = sys.stdout if res.status == "ok" else sys.stderr
        if res.text:
            print(res.text, file=stream)
        for note in res.diagnostics:
            print(f"note: {note}", file=sys.stderr)
    return res.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
