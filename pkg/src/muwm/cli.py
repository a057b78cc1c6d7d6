"""Command-line interface: verification, construction, search, bounds, export.

Every subcommand prints one JSON object per check, shaped
{"check": ..., "subject": ..., "pass": ..., "details": ...}, and the process
exits 0 exactly when every printed check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import bounds, construct, corpus, latin, matesearch, spherical, wmatrix

# printed by `table1`, compared against the closed form it regenerates
_LP_COLUMN = {
    10: 5, 11: 6, 12: 7, 13: 9, 14: 10, 15: 12, 16: 15, 17: 18, 18: 21,
    19: 27, 20: 34, 21: 45, 22: 63, 23: 99, 24: 107, 25: 116, 26: 125,
    27: 134, 28: 144, 29: 154, 30: 164,
}


class _Report:
    def __init__(self):
        self.all_pass = True

    def add(self, check: str, subject: str, ok: bool, details) -> None:
        self.all_pass = self.all_pass and bool(ok)
        print(
            json.dumps(
                {"check": check, "subject": subject, "pass": bool(ok), "details": details}
            )
        )

    @property
    def exit_code(self) -> int:
        return 0 if self.all_pass else 1


def _load_matrices(paths: list[str], weight: int) -> list[tuple[str, wmatrix.WeighingMatrix]]:
    out = []
    for p in paths:
        raw = corpus.parse_matrix(Path(p).read_text())
        out.append((Path(p).stem, wmatrix.WeighingMatrix.from_array(raw, weight)))
    return out


def _cmd_verify(args, rep: _Report) -> None:
    named = _load_matrices(args.files, args.weight)
    fam = wmatrix.MuwmFamily(
        members=tuple(m for _, m in named), labels=tuple(n for n, _ in named)
    )
    for entry in wmatrix.verify_family(fam):
        rep.add(entry["check"], entry["subject"], entry["pass"], entry["details"])


def _cmd_construct(args, rep: _Report) -> None:
    if args.base.startswith("paley:"):
        p = int(args.base.split(":", 1)[1])
        base = construct.paley_weighing(p)
        base_name = f"paley-{p}"
    else:
        raw = corpus.parse_matrix(Path(args.base).read_text())
        weight = int(np.sum(np.abs(raw[0])))
        base = wmatrix.WeighingMatrix.from_array(raw, weight)
        base_name = Path(args.base).stem
    squares = latin.msls_family(args.q)
    fam = construct.muwm_from_msls(base, squares)
    members = list(fam.members)
    labels = [f"{base_name}-L{m}" for m in range(1, len(members) + 1)]
    if args.companion:
        if args.q != base.order:
            rep.add(
                "construct",
                base_name,
                False,
                f"companion needs q = order, got q={args.q}, order={base.order}",
            )
            return
        members.append(construct.companion(base))
        labels.append(f"{base_name}-companion")
    out_fam = wmatrix.MuwmFamily(members=tuple(members), labels=tuple(labels))
    for entry in wmatrix.verify_family(out_fam):
        rep.add(entry["check"], entry["subject"], entry["pass"], entry["details"])
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for label, member in zip(labels, members):
            (outdir / f"{label}.txt").write_text(corpus.serialize_matrix(member.rows))
        rep.add("write", str(outdir), True, f"{len(members)} matrices written")


def _cmd_mates(args, rep: _Report) -> None:
    raw = corpus.parse_matrix(Path(args.file).read_text())
    weight = int(np.sum(np.abs(raw[0])))
    w1 = wmatrix.WeighingMatrix.from_array(raw, weight)
    name = Path(args.file).stem
    if args.max_clique:
        size, family, exact = matesearch.muwm_lower_bound(w1, time_budget=args.budget)
        rep.add(
            "lower-bound",
            name,
            True,
            {"family_size": size, "exact": exact, "members": len(family)},
        )
    else:
        mates = matesearch.find_mates(w1, limit=args.limit, time_budget=args.budget)
        rep.add("mates", name, True, {"count": len(mates)})


def _cmd_lp_bound(args, rep: _Report) -> None:
    import math

    if args.delsarte:
        root = math.isqrt(args.k)
        if root * root != args.k:
            rep.add("lp-bound", f"n={args.n}", False, f"weight {args.k} not a square")
            return
        d = bounds.DistanceSet([Fraction(1, root), Fraction(-1, root), Fraction(0)])
        try:
            value = bounds.lp_bound_delsarte(args.n, d, args.p)
        except bounds.UnboundedProgramError:
            rep.add(
                "lp-bound",
                f"n={args.n} k={args.k} p={args.p}",
                False,
                "program unbounded at this degree",
            )
            return
        rep.add(
            "lp-bound",
            f"n={args.n} k={args.k} p={args.p}",
            True,
            {"exact": str(value), "value": float(value), "floor": value.numerator // value.denominator},
        )
    else:
        value = bounds.lp_bound_closed(args.n, args.k)
        rep.add("lp-bound", f"n={args.n} k={args.k}", True, {"value": value})


def _cmd_sdp_export(args, rep: _Report) -> None:
    import math

    root = math.isqrt(args.k)
    if root * root != args.k:
        rep.add("sdp-export", f"n={args.n}", False, f"weight {args.k} not a square")
        return
    d = bounds.DistanceSet([Fraction(1, root), Fraction(-1, root), Fraction(0)])
    problem = bounds.sdp_assemble(args.n, d, args.p_lp, args.p_sdp)
    path = bounds.sdp_export(problem, args.out)
    rep.add(
        "sdp-export",
        f"n={args.n}",
        True,
        {"path": str(path), "blocks": len(problem.blocks), "variables": problem.variable_count},
    )


def _cmd_geometry(args, rep: _Report) -> None:
    files = sorted(Path(args.family_dir).glob("*.txt"))
    if not files:
        rep.add("geometry", args.family_dir, False, "no matrix files found")
        return
    parsed = [corpus.parse_matrix(f.read_text()) for f in files]
    weight = int(np.sum(np.abs(parsed[0][0])))
    fam = wmatrix.MuwmFamily(
        members=tuple(wmatrix.WeighingMatrix.from_array(a, weight) for a in parsed),
        labels=tuple(f.stem for f in files),
    )
    vs = spherical.vector_system(fam)
    rep.add("vector-system", args.family_dir, True, {"vectors": len(vs)})
    if args.srg:
        res = spherical.orthogonality_srg(vs)
        ok = not isinstance(res, str)
        rep.add("srg", args.family_dir, ok, list(res) if ok else res)
    if args.scheme:
        doubled = spherical.antipodal_double(vs)
        mode = "four_class" if args.scheme == 4 else "five_class"
        partition = spherical.relation_partition(doubled, mode)
        ok, table = spherical.is_association_scheme(partition)
        rep.add(
            "association-scheme",
            f"{args.family_dir} ({mode})",
            ok,
            {"classes": partition.classes, "points": partition.points},
        )


def _cmd_table1(args, rep: _Report) -> None:
    for n in range(10, 31):
        value = bounds.lp_bound_closed(n, 9)
        rep.add("table1-lp", f"n={n}", value == _LP_COLUMN[n], {"value": value})


def _cmd_corpus(args, rep: _Report) -> None:
    if args.action != "verify":
        raise ValueError(f"unknown corpus action {args.action!r}")
    manifest = corpus.corpus_manifest()
    families = corpus.load_corpus()
    for entry, fam in zip(manifest["families"], families):
        ok_size = len(fam) == entry["size"]
        rep.add(
            "family-size",
            entry["id"],
            ok_size,
            {"expected": entry["size"], "actual": len(fam)},
        )
        results = wmatrix.verify_family(fam)
        bad = [r for r in results if not r["pass"]]
        rep.add(
            "family-valid",
            entry["id"],
            not bad,
            {"checks": len(results), "failures": len(bad)},
        )


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="muwm",
        description="Mutually unbiased weighing matrices: verify, construct, search, bound.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check weighing + pairwise unbiasedness of matrix files")
    p.add_argument("files", nargs="+")
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("construct", help="build a family from a base matrix and Latin squares")
    p.add_argument("--base", required=True, help="matrix file or paley:<p>")
    p.add_argument("--q", type=int, required=True, help="field size for the Latin squares")
    p.add_argument("--companion", action="store_true")
    p.add_argument("--out", help="directory to write the family to")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("mates", help="enumerate unbiased mates of a matrix")
    p.add_argument("file")
    p.add_argument("--max-clique", action="store_true", help="also compute the family lower bound")
    p.add_argument("--budget", type=float, default=None, help="time budget in seconds")
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_mates)

    p = sub.add_parser("lp-bound", help="closed-form or exact-LP family bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delsarte", action="store_true")
    p.add_argument("--p", type=int, default=5, help="degree budget for --delsarte")
    p.set_defaults(func=_cmd_lp_bound)

    p = sub.add_parser("sdp-export", help="write the moment SDP in sparse SDPA format")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=9)
    p.add_argument("--p-lp", type=int, default=5)
    p.add_argument("--p-sdp", type=int, default=5)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_sdp_export)

    p = sub.add_parser("geometry", help="vector system, SRG, association schemes")
    p.add_argument("family_dir")
    p.add_argument("--srg", action="store_true")
    p.add_argument("--scheme", type=int, choices=(4, 5))
    p.set_defaults(func=_cmd_geometry)

    p = sub.add_parser("table1", help="regenerate the closed-form LP bound column")
    p.add_argument("--column", default="lp", choices=("lp",))
    p.set_defaults(func=_cmd_table1)

    p = sub.add_parser("corpus", help="bundled-data operations")
    p.add_argument("action", choices=("verify",))
    p.set_defaults(func=_cmd_corpus)

    return ap


def cli(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    rep = _Report()
    args.func(args, rep)
    return rep.exit_code


def main() -> None:
    sys.exit(cli())
