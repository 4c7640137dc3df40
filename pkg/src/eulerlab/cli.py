"""Command-line front end: ``eulerlab <command> ...``.

Every command prints one JSON document (or markdown with ``--format md``).
Exit status: 0 when every check passed, 1 when a check failed, 2 for usage
errors and unknown entries, 3 when a matrix realization is unavailable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction as Q

from . import catalog, central, euler, pairs, pi1
from .matrixlie import RealizationUnavailable
from .rootsys import RootSystemType

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNAVAILABLE = 0, 1, 2, 3

MAX_RANK = 8
FAMILY_RANKS = {
    "A": range(1, MAX_RANK + 1), "B": range(2, MAX_RANK + 1), "C": range(2, MAX_RANK + 1),
    "D": range(3, MAX_RANK + 1), "BC": range(1, MAX_RANK + 1),
    "E6": (6,), "E7": (7,), "E8": (8,), "F4": (4,), "G2": (2,),
}

# closed-form lists; the tables command checks them against the computation
EULER_PATTERNS = {
    "A": ("A_n: h_1, ..., h_n", lambda n: list(range(1, n + 1))),
    "B": ("B_n: h_1", lambda n: [1]),
    "C": ("C_n: h_n", lambda n: [n]),
    "D": ("D_n: h_1, h_{n-1}, h_n", lambda n: [1, n - 1, n]),
    "E6": ("E_6: h_1, h_6", lambda n: [1, 6]),
    "E7": ("E_7: h_7", lambda n: [7]),
}
SYMMETRIC_PATTERNS = {
    "A": ("A_{2n-1}: h_n", lambda n: [(n + 1) // 2] if n % 2 else []),
    "B": ("B_n: h_1", lambda n: [1]),
    "C": ("C_n: h_n", lambda n: [n]),
    "D even": ("D_{2n}: h_1, h_{2n-1}, h_{2n}", lambda n: [1, n - 1, n]),
    "D odd": ("D_{2n+1}: h_1", lambda n: [1]),
    "E7": ("E_7: h_7", lambda n: [7]),
}


class Failure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("error", "failure"))
        self.payload = payload


def _types():
    for fam, ranks in FAMILY_RANKS.items():
        for n in ranks:
            yield RootSystemType(fam, n)


def _pattern_key(t: RootSystemType, table: dict) -> str | None:
    if t.family == "D" and "D even" in table:
        return "D even" if t.rank % 2 == 0 else "D odd"
    return t.family if t.family in table else None


def cmd_tables(args) -> tuple[dict, bool]:
    tid = args.id
    if tid in ("eulelts2", "symmeuler"):
        field, table = ("euler", EULER_PATTERNS) if tid == "eulelts2" else ("symmetric", SYMMETRIC_PATTERNS)
        rows, ok_by_key = [], {}
        for t in _types():
            s = euler.summary(t.name)
            key = _pattern_key(t, table)
            expected = table[key][1](t.rank) if key else []
            ok = s[field] == expected
            rows.append({"type": t.name, field: s[field], "matches": ok})
            if key:
                ok_by_key[key] = ok_by_key.get(key, True) and ok
            elif s[field]:
                ok_by_key.setdefault("unlisted", True)
                ok_by_key["unlisted"] = False
        lines = [table[k][0] for k in table if ok_by_key.get(k)]
        passed = all(r["matches"] for r in rows)
        out = {"table": tid, "lines": lines, "rows": rows, "passed": passed}
        if tid == "symmeuler":
            out["class_counts"] = {r["type"]: euler.symmetric_class_count(
                euler.build_root_system(r["type"])) for r in rows if r["symmetric"]}
        return out, passed
    if tid == "table1":
        return {"table": tid, "columns": list(catalog.TABLE1_COLUMNS), "rows": catalog.table1_rows()}, True
    if tid == "table2":
        rows = catalog.table2_rows(present_only=not args.all)
        lines = [" | ".join(r["columns"][c] for c in catalog.TABLE2_COLUMNS) for r in rows]
        return {"table": tid, "columns": list(catalog.TABLE2_COLUMNS), "lines": lines, "rows": rows}, True
    raise Failure({"error": f"unknown table id {tid!r}"})


def cmd_classify(args) -> tuple[dict, bool]:
    if args.type:
        return euler.summary(args.type), True
    fam = args.family.upper()
    if fam not in FAMILY_RANKS:
        raise Failure({"error": f"unknown family {args.family!r}"})
    return {"family": fam, "types": [euler.summary(RootSystemType(fam, n).name)
                                     for n in FAMILY_RANKS[fam]]}, True


def _entry(slug: str):
    try:
        return catalog.get_entry(slug)
    except KeyError as exc:
        raise Failure({"error": exc.args[0]}) from None


def cmd_entries(args) -> tuple[dict, bool]:
    return {"entries": [{"slug": e.slug, "name": e.name, "type": e.type_tag,
                         "symmetric": e.symmetric, "matrix_level": e.matrix_level}
                        for e in catalog.load_catalog()]}, True


def cmd_pairs(args) -> tuple[dict, bool]:
    e = _entry(args.entry)
    if not e.symmetric:
        return {"entry": e.slug, "symmetric_h": False, "classes": [],
                "note": "h is not symmetric: no orthogonal partner"}, True
    out = pairs.summary(e)
    cells = pairs.orbit_cells(e)
    classes = out["classes"]
    oracle = [pairs.is_symmetric_pair_oracle(e, c) for c in pairs.pair_classes(e)]
    out["count"] = len(classes)
    out["orbit_cells"] = len(cells)
    out["symmetric"] = [f"k^{c['j']}" for c in classes if c["symmetric"]]
    ok = len(cells) == len(classes) and oracle == [c["symmetric"] for c in classes]
    out["checks"] = {"orbit cells = classes": len(cells) == len(classes),
                     "oracle agrees": oracle == [c["symmetric"] for c in classes]}
    return out, ok


def cmd_pi1(args) -> tuple[dict, bool]:
    e = _entry(args.entry)
    out = pi1.report(e, args.method)
    return out, out.get("agreement", True) is not False


def _realized_or_fail(e):
    if not e.matrix_level:
        raise RealizationUnavailable(f"{e.slug}: classification-level entry, no matrix model")


def cmd_zgroups(args) -> tuple[dict, bool]:
    e = _entry(args.entry)
    _realized_or_fail(e)
    out = central.report(e)
    lat = central.z3_subgroup(e)
    idx = out["index_Z3_Z2"]
    checks = {
        "Z2 kind = pi1": out["Z2_kind"] == pi1.pi1_structure(e).kind,
        "|Z3:Z2| <= 2": idx is not None and idx <= 2,
        "Z2 contained in Z3": all(central.subgroup_contains(list(lat.Z3), x) for x in lat.Z2),
    }
    if e.symmetric:
        checks["differences generate Z2"] = central.differences_generate_z2(e)
        coset = central.complement_coset(e)
        checks["zeta Z2 independent of the class"] = all(
            central.zeta(e, c.j) in coset for c in pairs.pair_classes(e))
    out["checks"] = checks
    return out, all(checks.values())


def parse_class(model: central.CompactModel, text: str) -> central.LoopClass:
    """Parse the printed form of a class, e.g. ``(1, 1̄)``, ``(w)``, ``(-1@1/2)``."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = [p.strip() for p in body.split(",")] if body else []
    if len(parts) != len(model.factors):
        raise ValueError(f"expected {len(model.factors)} components, got {len(parts)}")
    vals = []
    for f, p in zip(model.factors, parts):
        if f.kind == "circle":
            vals.append(Q(p))
        elif f.kind == "spin":
            p = p.replace("̄", "").replace("b", "")
            table = {"0": (0, 0), "1": (0, 1), "w": (1, 0), "-w": (1, 1)}
            if p not in table:
                raise ValueError(f"bad spin component {p!r}")
            vals.append(table[p])
        else:
            w, _, ph = p.partition("@")
            vals.append((Q(w), Q(ph or 0)))
    return central.LoopClass(model, tuple(vals))


def _parse_target(e, text: str) -> central.LoopClass:
    if text.startswith("zeta:"):
        j, _, n = text[5:].partition("+")
        base = central.zeta(e, int(j))
        return base + central.z1_class(e).times(int(n or 0))
    return parse_class(central.model_of(e), text)


def cmd_chain(args) -> tuple[dict, bool]:
    e = _entry(args.entry)
    _realized_or_fail(e)
    try:
        target = _parse_target(e, args.target)
        chain = central.twist_chain(e, target)
    except ValueError as exc:
        raise Failure({"error": str(exc), "entry": e.slug}) from None
    base = central.base_class(e)
    total = central.zeta(e, base)
    for j, m in chain:
        total = total + central.zeta_difference(e, j, m)
    ok = total == target
    return {"entry": e.slug, "base": f"k^{base}", "target": str(target),
            "chain": [{"step": [j, m], "difference": str(central.zeta_difference(e, j, m))} for j, m in chain],
            "length": len(chain), "reaches_target": ok}, ok


def cmd_verify(args) -> tuple[dict, bool]:
    from .battery import algebra_battery
    fam = args.family
    try:
        if fam == "sl":
            params = (args.n,)
        elif fam == "sp":
            params = (args.n,)
        else:
            params = (args.p, args.q)
        if any(x is None for x in params):
            raise Failure({"error": "missing size flags: sl/sp need --n, so needs --p and --q"})
        rep = algebra_battery(fam, *params, seed=args.seed, samples=args.samples)
    except (ValueError, TypeError) as exc:
        raise Failure({"error": str(exc)}) from None
    return rep.to_json(), rep.passed


def cmd_levi(args) -> tuple[dict, bool]:
    d = args.d
    poinc = pi1.pi1_with_radical(pi1.poincare_spec(d))
    conf = pi1.pi1_with_radical(pi1.conformal_spec(d))
    return {"poincare": {"d": d, "pi1": poinc.to_json()},
            "conformal": {"d": d, "pi1": conf.to_json()}}, True


# --- rendering ----------------------------------------------------------------

def _md_value(v) -> str:
    if isinstance(v, (list, tuple)):
        return ", ".join(_md_value(x) for x in v)
    if isinstance(v, dict):
        return "; ".join(f"{k}: {_md_value(x)}" for k, x in v.items())
    return "" if v is None else str(v)


def to_markdown(obj: dict) -> str:
    lines = []
    for k, v in obj.items():
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            keys = list(dict.fromkeys(key for x in v for key in x))
            lines += [f"### {k}", "", "| " + " | ".join(keys) + " |", "|" + "---|" * len(keys)]
            lines += ["| " + " | ".join(_md_value(x.get(key)) for key in keys) + " |" for x in v]
            lines.append("")
        elif isinstance(v, list) and k == "lines":
            lines += [f"- **{k}**:", ""] + [f"    {x}" for x in v] + [""]
        else:
            lines.append(f"- **{k}**: {_md_value(v)}")
    return "\n".join(lines).rstrip() + "\n"


COMMANDS = {
    "tables": cmd_tables, "classify": cmd_classify, "entries": cmd_entries, "pairs": cmd_pairs,
    "pi1": cmd_pi1, "zgroups": cmd_zgroups, "verify": cmd_verify, "chain": cmd_chain, "levi": cmd_levi,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerlab", description="Euler elements, orthogonal pairs and their invariants")
    parser.add_argument("--format", choices=("json", "md"), default=None,
                        help="output format (default json, or $EULERLAB_FORMAT)")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized samples")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="reproduce the Euler-element lists and the tables")
    p.add_argument("id", choices=("eulelts2", "symmeuler", "table1", "table2"))
    p.add_argument("--all", action="store_true", help="table2: include rows without catalog entries")

    p = sub.add_parser("classify", help="Euler elements of a root system")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--type", help="e.g. E7, D5, BC3")
    g.add_argument("--family", help="all ranks <= 8 of one family")

    sub.add_parser("entries", help="list catalog entries")

    p = sub.add_parser("pairs", help="conjugacy classes of orthogonal pairs")
    p.add_argument("--entry", required=True)

    p = sub.add_parser("pi1", help="fundamental group of the orbit of h")
    p.add_argument("--entry", required=True)
    p.add_argument("--method", choices=("structure", "wiggerman", "both"), default="both")

    p = sub.add_parser("zgroups", help="Z1, Z2, Z3 as subgroups of pi_1(K)")
    p.add_argument("--entry", required=True)

    p = sub.add_parser("verify", help="exact matrix check battery")
    p.add_argument("--family", required=True, choices=("sl", "so", "sp"))
    p.add_argument("--n", type=int, help="sl(n,R), or sp(2n,R)")
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--samples", type=int, default=2, help="random invertible samples per Euler element")

    p = sub.add_parser("chain", help="chain of zeta differences reaching a target class")
    p.add_argument("--entry", required=True)
    p.add_argument("--target", required=True, help="a class such as '(1, 1̄)', or 'zeta:J+N'")

    p = sub.add_parser("levi", help="pi_1 for the Poincare and conformal algebras")
    p.add_argument("--d", type=int, default=3)
    return parser


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "md":
        sys.stdout.write(to_markdown(payload))
    else:
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return int(exc.code or 0)
    fmt = args.format or os.environ.get("EULERLAB_FORMAT", "json")
    if fmt not in ("json", "md"):
        fmt = "json"
    start = time.perf_counter()
    try:
        result, ok = COMMANDS[args.command](args)
        payload = {"command": args.command, "passed": ok, **result}
        code = EXIT_OK if ok else EXIT_FAIL
    except Failure as exc:
        payload = {"command": args.command, "status": "error", **exc.payload}
        code = EXIT_USAGE
    except RealizationUnavailable as exc:
        payload = {"command": args.command, "status": "unavailable", "error": str(exc)}
        code = EXIT_UNAVAILABLE
    if args.timing:
        payload["seconds"] = round(time.perf_counter() - start, 3)
    _emit(payload, fmt)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
