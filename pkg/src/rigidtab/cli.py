"""Command-line surface: triangles, enumeration, counts, verification suites, oracles, bijections.

Exit status is 0 on success, 1 when a verification check fails and 2 on a
usage error (bad options, out-of-range parameters, exceeded bounds).
"""
import argparse
import csv
import io
import json
import random
import sys
import time
from importlib import resources
from typing import NamedTuple

import jsonschema

from . import closed_formulas as cf
from . import lattice_paths as lp
from . import lie_oracle as lo
from . import young_walls as yw
from .insertion_schemes import partition_level3, tableau_to_motzkin, tableau_to_pascal_path
from .rigid_tableaux import (
    RigidIndex, count_sB, count_sD, enumerate_almost_even, enumerate_parity, enumerate_sB, enumerate_sD,
)
from .rs_bijections import phi, rs
from .tableaux_core import BoundExceeded, Tableau, count_syt_rows, tableau_from_strict_sequence

TRIANGLES = ("motzkin", "riordan", "catalan", "pascal", "involution", "bessel")
FAMILIES = ("sB", "sD", "parity", "ae")
SUITES = ("level2", "level3", "limits", "selberg", "skt", "crystal", "affine")


class UsageError(ValueError):
    pass


# triangles

def triangle_cells(kind: str, rows: int) -> dict:
    """(column, s) -> value; column is m except for the Bessel triangle."""
    if kind not in TRIANGLES:
        raise UsageError(f"unknown triangle {kind!r}")
    if rows < 1:
        raise UsageError("--rows must be positive")
    if kind in lp.NUMBERS:
        return lp.triangle(kind, rows)
    if kind == "involution":
        return {(m, s): cf.sb_infty(m, s) for m in range(rows) for s in range(m + 1)}
    # row s of the Bessel triangle starts at column s and lists sd_infty(s-1+2j, s)
    return {(c, s): cf.sd_infty(s - 1 + 2 * (c - s), s) for c in range(rows) for s in range(c + 1)}


def triangle_csv(kind: str, rows: int) -> str:
    """Header m=0..rows-1, then one line per s from the top of the triangle down to s = 0."""
    cells = triangle_cells(kind, rows)
    label = "col" if kind == "bessel" else "m"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"{label}={c}" for c in range(rows)])
    for s in range(rows - 1, -1, -1):
        w.writerow(["" if c < s else cells[(c, s)] for c in range(rows)])
    return buf.getvalue()


def triangle_json(kind: str, rows: int) -> str:
    cells = triangle_cells(kind, rows)
    data = {"kind": kind, "rows": [[cells[(c, s)] for c in range(s, rows)] for s in range(rows)]}
    return json.dumps(data, sort_keys=True) + "\n"


# tableau export

def family_tableaux(family: str, m: int, s: int, k: int) -> list:
    """Members of the family; for ``parity`` the s slot carries the parity eps."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    if min(m, s) < 0 or k < 1:
        raise UsageError("m, s must be nonnegative and k positive")
    if family == "sB":
        return enumerate_sB(RigidIndex(m, s, k))
    if family == "sD":
        return enumerate_sD(RigidIndex(m, s, k))
    if family == "parity":
        if s not in (0, 1):
            raise UsageError("parity family takes s = eps in {0, 1}")
        return enumerate_parity(s, m, k)
    return enumerate_almost_even(m, k)


def schema() -> dict:
    return json.loads(resources.files("rigidtab").joinpath("schemas/tableaux.json").read_text())


def tableaux_document(family: str, m: int, s: int, k: int, tableaux) -> dict:
    doc = {"family": family, "m": m, "s": s, "k": k,
           "tableaux": [{"outer": list(T.outer), "inner": list(T.inner), "rows": [list(r) for r in T.rows]}
                        for T in tableaux]}
    jsonschema.validate(doc, schema())
    return doc


def export_tableaux(family: str, idx, path) -> dict:
    """Write the family's JSON export to path; idx is (m, s, k)."""
    m, s, k = idx
    doc = tableaux_document(family, m, s, k, family_tableaux(family, m, s, k))
    try:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, sort_keys=True, indent=1)
            fh.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write export to {path}: {exc.strerror}") from exc
    return doc


def import_tableaux(path) -> tuple:
    """(family, (m, s, k), tableaux) read back from an export file."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read export {path}: {exc.strerror}") from exc
    jsonschema.validate(doc, schema())
    tabs = [Tableau(tuple(t["outer"]), tuple(t["inner"]), tuple(tuple(r) for r in t["rows"]), "reverse")
            for t in doc["tableaux"]]
    return doc["family"], (doc["m"], doc["s"], doc["k"]), tabs


# verification suites

class Check(NamedTuple):
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(suite, name, got, want) -> Check:
    return Check(suite, name, got == want, "" if got == want else f"got {got}, expected {want}")


def suite_level2(max_m: int) -> list:
    out = []
    for m in range(max_m + 1):
        for s in range(m + 1):
            out.append(_check("level2", f"|sB2({m},{s})| = binom", count_sB(m, s, 2), cf.sB2(m, s)))
            words = sorted(tableau_to_pascal_path(T) for T in enumerate_sB(RigidIndex(m, s, 2)))
            end = s + (m - s) % 2
            out.append(_check("level2", f"pascal bijection ({m},{s})", words, lp.enumerate_paths("pascal", m, end)))
    for u in range(0, max_m // 2 + 2):
        for s in range(0, max_m + 2):
            M = 2 * u - 1 + s
            if 0 <= M <= max_m:
                out.append(_check("level2", f"|sD2({M},{s})| = binom", count_sD(M, s, 2), cf.sD2(u, s)))
    return out


def suite_level3(max_m: int) -> list:
    out = []
    for m in range(max_m + 1):
        for s in range(m + 1):
            n = count_sB(m, s, 3)
            out.append(_check("level3", f"|sB3({m},{s})| = M", n, lp.motzkin(m, s)))
            out.append(_check("level3", f"sB3 closed ({m},{s})", cf.sB3(m, s), n))
            if m >= 1:
                h, u, d = partition_level3(m, s)
                out.append(_check("level3", f"jdt split ({m},{s})", (len(h), len(u), len(d)),
                                  (lp.motzkin(m - 1, s), lp.motzkin(m - 1, s - 1) if s else 0,
                                   lp.motzkin(m - 1, s + 1))))
        for s in range(m + 2):
            out.append(_check("level3", f"|sD3({m},{s})| = R", count_sD(m, s, 3), lp.riordan(m + 1, s)))
    return out


def suite_limits(max_m: int) -> list:
    out = []
    for m in range(max_m + 1):
        out.append(_check("limits", f"Binfty({m})", count_sB(m, 0, max(m, 1)), cf.b_infty(m)))
        if m >= 1:
            out.append(_check("limits", f"Dinfty({m})", count_sD(m, 0, cf.stabilization_bounds(m, 0, "D")),
                              cf.d_infty(m)))
        for s in range(m + 1):
            k = cf.stabilization_bounds(m, s, "B")
            out.append(_check("limits", f"sBinfty({m},{s})", count_sB(m, s, k), cf.sb_infty(m, s)))
            for kk in (m - s + 1, m - s):
                if s and kk >= 1:
                    out.append(_check("limits", f"boundary sB({m},{s},{kk})", count_sB(m, s, kk),
                                      cf.sb_boundary(m, s, kk)))
        for s in range(m + 2):
            k = cf.stabilization_bounds(m, s, "sD")
            out.append(_check("limits", f"sDinfty({m},{s})", count_sD(m, s, k), cf.sd_infty(m, s)))
    return out


def suite_selberg(max_m: int) -> list:
    out = []
    for k in range(1, 7):
        for m in range(max_m + 1):
            n = count_syt_rows(m, k)
            out.append(_check("selberg", f"selberg({m},{k})", cf.selberg(m, k), n))
            if 2 <= k <= 5:
                out.append(_check("selberg", f"closed B{k}({m})", cf.b_rows_atmost(m, k), n))
            if k == 6:
                out.append(_check("selberg", f"S6({m})", cf.selberg_six(m), n))
    return out


def suite_skt(max_m: int) -> list:
    out = []
    for k in range(1, 6):
        for t in range(k + 1):
            for m in range(max_m + 1):
                out.append(_check("skt", f"S({m};{k},{t})", cf.s_kt(m, k, t), count_syt_rows(m, k, t)))
    return out


def _random_wall(rng: random.Random, g: yw.GroundState, steps: int) -> yw.YoungWall:
    w = yw.ground_wall(g)
    for _ in range(steps):
        nxt = yw.crystal_f(w, rng.randrange(g.n + 1))
        if nxt is not None:
            w = nxt
    return w


def _in_bound(t: yw.TensorWall) -> bool:
    return all(max(w.counts, default=0) <= w.n for w in t.factors)


def suite_crystal(max_m: int) -> list:
    out = []
    g = yw.GroundState(3, 0)
    w = yw.wall_from_partition((6, 3, 1), g, 1)
    out.append(_check("crystal", "golden content", yw.content(w), (2, 2, 3, 3)))
    golden = {0: ("-", ".", "+"), 1: (".", ".", "-"), 2: ("+", ".", "."), 3: (".", "-+", ".")}
    for i, want in golden.items():
        out.append(_check("crystal", f"golden sig_{i}", yw.signature(w, i).symbols, want))
    rng = random.Random(20241016)
    bad = 0
    for _ in range(200):
        a = _random_wall(rng, yw.GroundState(3, 3), rng.randrange(12))
        b = _random_wall(rng, yw.GroundState(3, 3), rng.randrange(12))
        t = yw.TensorWall((a, b))
        s = yw.wall_s_index(a, b)
        i = rng.randrange(4)
        e = yw.tensor_e(t, i)
        # the index is defined inside the pattern bound lambda_1 <= n
        if e is None or not (_in_bound(t) and _in_bound(e)):
            continue
        if yw.wall_s_index(*e.factors) != s:
            bad += 1
    out.append(_check("crystal", "s_index invariant under e_i", bad, 0))
    for n in (3, 4):
        for k in (1, 2, 3):
            for m in range(min(n, max_m) + 1):
                for s in range(m + 1):
                    out.append(_check("crystal", f"components n={n} k={k} ({m},{s})",
                                      yw.connected_component_count(n, k, s, m), count_sB(m, s, k)))
        for m in range(min(n, max_m) + 1):
            for s in range(m + 2):
                if (m - s) % 2:
                    out.append(_check("crystal", f"spin components n={n} ({m},{s})",
                                      len(yw.spin_component_members(n, s, m)), count_sD(m, s, 2)))
    return out


def suite_affine(max_m: int) -> list:
    out = []
    top = max(3, min(6, max_m))
    for n in range(3, top + 1):
        for c in lo.level2_counts(n) + lo.level3_counts(n):
            out.append(Check("affine", f"n={n} level {c.level} count", c.ok, "" if c.ok else f"{c}"))
        for i, lam in lo.level2_family(n):
            got = {w.weight for w in lo.affine_kac_enumerate(n, lam, 2)}
            out.append(_check("affine", f"n={n} lemma union for weight {i}", got, lo.lemma_weights(n, i)))
    eta = lo.shift(lo.level2_weight(9, 7), 2)
    idx = lo.staircase_index(eta, lo.level2_weight(9, 3))
    out.append(_check("affine", "B9 index of Lambda_7 - 2 delta", (idx.m, idx.s) if idx else None, (6, 2)))
    for n in range(3, min(4, top) + 1):
        for k in (2, 3):
            for s in range(n + 1):
                for m in range(s, n + 1):
                    r = lo.verify_theorem_7x(n, k, s, m, strict=False)
                    out.append(Check("affine", f"Freudenthal B n={n} k={k} ({m},{s})", r.ok))
    return out


SUITE_FUNCS: dict = {"level2": suite_level2, "level3": suite_level3, "limits": suite_limits,
                     "selberg": suite_selberg, "skt": suite_skt, "crystal": suite_crystal,
                     "affine": suite_affine}
SUITE_DEFAULT_M = {"level2": 12, "level3": 9, "limits": 8, "selberg": 10, "skt": 10, "crystal": 4, "affine": 4}


def run_suites(names, max_m: int | None, budget: float | None) -> tuple:
    """(checks, skipped suite names); suites after the budget runs out are skipped."""
    start = time.monotonic()
    checks, skipped = [], []
    for name in names:
        if budget is not None and time.monotonic() - start > budget:
            skipped.append(name)
            continue
        checks.extend(SUITE_FUNCS[name](SUITE_DEFAULT_M[name] if max_m is None else max_m))
    return checks, skipped


# parsing helpers

def _ints(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _rows(text: str) -> tuple:
    """Rows separated by '/', entries by ','; e.g. '5,3,1/4,2'."""
    return tuple(_ints(r) for r in text.split("/"))


# commands

def cmd_triangle(a, out) -> int:
    out.write(triangle_csv(a.kind, a.rows) if a.format == "csv" else triangle_json(a.kind, a.rows))
    return 0


def cmd_enumerate(a, out) -> int:
    if a.out:
        doc = export_tableaux(a.family, (a.m, a.s, a.k), a.out)
        out.write(f"wrote {len(doc['tableaux'])} tableaux to {a.out}\n")
    else:
        doc = tableaux_document(a.family, a.m, a.s, a.k, family_tableaux(a.family, a.m, a.s, a.k))
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    return 0


def cmd_count(a, out) -> int:
    if a.family == "sB":
        n = count_sB(a.m, a.s, a.k)
    elif a.family == "sD":
        n = count_sD(a.m, a.s, a.k)
    else:
        n = len(family_tableaux(a.family, a.m, a.s, a.k))
    out.write(f"{n}\n")
    return 0


def cmd_verify(a, out) -> int:
    if a.all == bool(a.suite):
        raise UsageError("give exactly one of --suite or --all")
    names = SUITES if a.all else [a.suite]
    if a.max_m is not None and a.max_m < 0:
        raise UsageError("--max-m must be nonnegative")
    checks, skipped = run_suites(names, a.max_m, a.budget_seconds)
    failed = [c for c in checks if not c.ok]
    for c in checks:
        if a.verbose or not c.ok:
            out.write(f"{'PASS' if c.ok else 'FAIL'} [{c.suite}] {c.name} {c.detail}".rstrip() + "\n")
    for name in skipped:
        out.write(f"SKIP [{name}] budget exhausted\n")
    out.write(f"{len(checks) - len(failed)}/{len(checks)} checks passed\n")
    return 1 if failed else 0


def cmd_oracle(a, out) -> int:
    if a.kind == "freudenthal":
        C = lo.cartan(a.family, a.rank)
        out.write(f"{lo.freudenthal(C, _ints(a.highest), _ints(a.weight))}\n")
    elif a.kind == "theorem":
        r = lo.verify_theorem_7x(a.n, a.k, a.s, a.m, family=a.family, strict=False)
        out.write(json.dumps(r._asdict(), sort_keys=True) + "\n")
        return 0 if r.ok else 1
    elif a.kind == "affine":
        lam = lo.AffineWeight(_ints(a.labels), 0)
        if len(lam.labels) != a.n + 1:
            raise UsageError(f"--labels needs {a.n + 1} entries")
        for w in lo.affine_kac_enumerate(a.n, lam, lo.affine_level(lam.labels)):
            idx = lo.staircase_index(w.weight, lam, a.n)
            out.write(json.dumps({"labels": list(w.weight.labels), "delta": w.weight.delta,
                                  "content": list(w.content),
                                  "index": None if idx is None else [idx.m, idx.s]}, sort_keys=True) + "\n")
    else:
        for line in lo.check_conjecture(a.n, a.level):
            out.write(json.dumps({"weight": list(line.lam.labels), "part": line.part, "found": line.found,
                                  "conjectured": line.conjectured, "agrees": line.agrees},
                                 sort_keys=True) + "\n")
    return 0


def cmd_biject(a, out) -> int:
    if a.kind == "rs":
        P, Q = rs(_ints(a.perm))
        out.write(json.dumps({"P": [list(r) for r in P.rows], "Q": [list(r) for r in Q.rows]}) + "\n")
    elif a.kind == "nr":
        out.write(phi(_ints(a.perm)) + "\n")
    else:
        T = tableau_from_strict_sequence(_rows(a.rows), a.s)
        word = tableau_to_motzkin(T) if a.kind == "motzkin" else tableau_to_pascal_path(T)
        out.write(word + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigidtab", description="Rigid Young tableaux and weight multiplicities.")
    sub = p.add_subparsers(dest="verb", required=True)

    t = sub.add_parser("triangle", help="print a number triangle")
    t.add_argument("--kind", choices=TRIANGLES, required=True)
    t.add_argument("--rows", type=int, default=8)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_triangle)

    for verb, func, helptext in (("enumerate", cmd_enumerate, "list a family as JSON"),
                                 ("count", cmd_count, "count a family")):
        e = sub.add_parser(verb, help=helptext)
        e.add_argument("--family", choices=FAMILIES, required=True)
        e.add_argument("--m", type=int, required=True)
        e.add_argument("--s", type=int, default=0, help="shift (parity eps for --family parity)")
        e.add_argument("--k", type=int, required=True)
        if verb == "enumerate":
            e.add_argument("--out", help="write the export to this path")
        e.set_defaults(func=func)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=SUITES)
    v.add_argument("--all", action="store_true")
    v.add_argument("--max-m", type=int)
    v.add_argument("--budget-seconds", type=float)
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="Lie-theoretic oracles")
    o.add_argument("kind", choices=("freudenthal", "theorem", "affine", "conjecture"))
    o.add_argument("--family", default="B", choices=lo.FAMILIES)
    o.add_argument("--rank", type=int, default=3)
    o.add_argument("--highest", default="")
    o.add_argument("--weight", default="")
    o.add_argument("--n", type=int, default=3)
    o.add_argument("--k", type=int, default=2)
    o.add_argument("--s", type=int, default=0)
    o.add_argument("--m", type=int, default=0)
    o.add_argument("--labels", default="")
    o.add_argument("--level", type=int, default=2)
    o.set_defaults(func=cmd_oracle)

    b = sub.add_parser("biject", help="apply a bijection")
    b.add_argument("kind", choices=("motzkin", "pascal", "rs", "nr"))
    b.add_argument("--rows", default="", help="tableau rows, e.g. '5,3,1/4,2/'")
    b.add_argument("--s", type=int, default=0)
    b.add_argument("--perm", default="")
    b.set_defaults(func=cmd_biject)
    return p


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, BoundExceeded, ValueError, jsonschema.ValidationError) as exc:
        err.write(f"rigidtab {args.verb}: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"rigidtab {args.verb}: {exc}\n")
        return 2


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
