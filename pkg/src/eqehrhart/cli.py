"""Command-line front end: ``eqehrhart analyze | hstar | series | check | example``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from .equivariant import (THREADS_ENV, EquivariantInstance, chi_mP, chi_star_mP,
                          criterion_all_fixed_lattice, criterion_bad_element,
                          criterion_face_fixed_points, equivariant_hstar,
                          orbit_quasipolynomials, phi_at_one)
from .exact_arith import CyclotomicValue, PoleError, render_fraction
from .fixed_locus import NotInvariant
from .instance_io import (DocumentError, dump_document, instance_from_document,
                          instance_to_document, load_document, parse_cyclotomic)
from .lattice_group import (DEFAULT_GROUP_CAP, CapExceeded, ClosureExceeded,
                            NonInvertibleGenerator, table_from_values)


def _value(x) -> str | int:
    if isinstance(x, CyclotomicValue):
        r = x.as_rational()
        if r is None:
            return x.render()
        x = r
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else render_fraction(x)
    return x


def _load(args) -> EquivariantInstance:
    with open(args.file, encoding="utf-8") as fh:
        fields = load_document(fh.read())
    if getattr(args, "table", None):
        with open(args.table, encoding="utf-8") as fh:
            raw = json.load(fh)
        rows = raw.get("character_table") if isinstance(raw, dict) else raw
        fields["table"] = [[parse_cyclotomic(x, f"table[{i}][{j}]") for j, x in enumerate(r)]
                           for i, r in enumerate(rows)]
        if isinstance(raw, dict) and raw.get("labels"):
            fields["labels"] = raw["labels"]
    return instance_from_document(fields, cap=args.cap)


def _element(g) -> dict:
    return {"matrix": [list(r) for r in g.linear], "translation": list(g.translation)}


# --------------------------------------------------------------------------
# reports


def analyze_report(inst: EquivariantInstance) -> dict:
    G = inst.group
    H = equivariant_hstar(inst)
    poly = criterion_all_fixed_lattice(inst, H)
    bad = criterion_bad_element(inst, H)
    face = criterion_face_fixed_points(inst, H)
    if face.applies:
        verdict = "EffectiveGuaranteed"
    elif poly.applies:
        verdict = "PolynomialGuaranteed"
    elif bad.applies:
        verdict = "NonPolynomial"
    else:
        verdict = "Undecided"
    classes = []
    for c in range(G.num_classes):
        rec = inst.fixed[c]
        classes.append({
            "class": c, "size": G.class_sizes[c], "representative": _element(G.representative(c)),
            "element_order": G.element_order(G.representatives[c]),
            "fixed_space_dim": rec.fixed_dim, "fixed_polytope_dim": rec.dim,
            "denominator": rec.denominator, "index": rec.index, "lattice": rec.is_lattice(),
        })
    return {
        "group": {"order": G.order, "exponent": G.exponent, "num_classes": G.num_classes,
                  "class_sizes": G.class_sizes},
        "polytope": {"dim": inst.d, "ambient_rank": inst.ambient.ambient_dim,
                     "num_vertices": inst.P.num_vertices, "reflexive": inst.P.is_reflexive(),
                     "normalized_volume": _value(inst.P.normalized_volume()),
                     "hstar": [_value(x) for x in inst.hstar_ordinary]},
        "classes": classes,
        "criteria": {
            "all_fixed_polytopes_lattice": {"applies": poly.applies, "detail": poly.detail},
            "bad_element": {"applies": bad.applies, "detail": bad.detail,
                            "witness_class": bad.witness},
            "face_fixed_points": {"applies": face.applies, "detail": face.detail},
        },
        "verdict": verdict,
        "phi_polynomial": H.is_polynomial,
    }


def hstar_report(inst: EquivariantInstance) -> dict:
    H = equivariant_hstar(inst)
    tab = H.table
    out: dict = {"polynomial": H.is_polynomial, "irreducibles": tab.labels,
                 "per_class": [f.render() for f in H.per_class], "effective": bool(H.effective)}
    if H.is_polynomial:
        out["degree"] = H.degree
        out["multiplicities"] = [[_value(m) for m in row] for row in H.multiplicities]
    else:
        den, nums = H.isotypic_numerators()
        out["common_denominator"] = den.render()
        out["isotypic_numerators"] = {tab.labels[j]: [_value(x) for x in nums[j]]
                                      for j in range(len(tab))}
    try:
        one = phi_at_one(inst, H)
        out["phi_at_one"] = [_value(v) for v in one.closed_form.values]
        out["phi_at_one_integral"] = one.integral
    except PoleError:  # pragma: no cover - phi has no pole at 1 for invariant polytopes
        out["phi_at_one"] = None
    return out


def series_report(inst: EquivariantInstance, terms: int) -> dict:
    G = inst.group
    rows = []
    for m in range(terms + 1):
        row = {"m": m, "chi": [_value(v) for v in chi_mP(inst, m).values]}
        row["chi_interior"] = ([_value(v) for v in chi_star_mP(inst, m).values] if m else
                               [0] * G.num_classes)
        rows.append(row)
    orb = orbit_quasipolynomials(inst, horizon=min(terms, 12))

    def qp(q):
        return {"period": q.period, "constituents": q.render()}

    return {"terms": rows,
            "orbits": qp(orb.orbits), "orbits_det_twisted": qp(orb.det_twisted),
            "interior_orbits": qp(orb.interior_orbits),
            "interior_orbits_det_twisted": qp(orb.interior_det_twisted),
            "orbit_reciprocity": orb.ok}


# --------------------------------------------------------------------------
# text and csv renderers


def _text_analyze(r: dict) -> str:
    g, p = r["group"], r["polytope"]
    lines = [f"group: order {g['order']}, exponent {g['exponent']}, {g['num_classes']} classes",
             f"polytope: dim {p['dim']} in rank {p['ambient_rank']}, {p['num_vertices']} vertices, "
             f"reflexive: {p['reflexive']}",
             "class  size  dim P_g  den  ind"]
    for c in r["classes"]:
        lines.append(f"{c['class']:>5}  {c['size']:>4}  {c['fixed_polytope_dim']:>7}  "
                     f"{c['denominator']:>3}  {c['index']:>3}")
    for name, v in r["criteria"].items():
        lines.append(f"{name}: {'yes' if v['applies'] else 'no'} ({v['detail']})")
    lines.append(f"verdict: {r['verdict']}")
    return "\n".join(lines) + "\n"


def _text_hstar(r: dict) -> str:
    lines = [f"polynomial: {r['polynomial']}", f"effective: {r['effective']}",
             "per class: " + ", ".join(r["per_class"])]
    if r["polynomial"]:
        lines.append("phi_i  " + "  ".join(r["irreducibles"]))
        for i, row in enumerate(r["multiplicities"]):
            lines.append(f"{i:>5}  " + "  ".join(str(x) for x in row))
    else:
        lines.append(f"common denominator: {r['common_denominator']}")
        for label, nums in r["isotypic_numerators"].items():
            lines.append(f"  {label}: {nums}")
    if r.get("phi_at_one") is not None:
        lines.append(f"phi[1]: {r['phi_at_one']} (integral: {r['phi_at_one_integral']})")
    return "\n".join(lines) + "\n"


def _csv_hstar(r: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if r["polynomial"]:
        w.writerow(["i"] + r["irreducibles"])
        for i, row in enumerate(r["multiplicities"]):
            w.writerow([i] + row)
    else:
        w.writerow(["class", "phi"])
        for c, f in enumerate(r["per_class"]):
            w.writerow([c, f])
    return buf.getvalue()


def _text_series(r: dict) -> str:
    lines = ["m  chi  chi_interior"]
    for row in r["terms"]:
        lines.append(f"{row['m']}  {row['chi']}  {row['chi_interior']}")
    for key in ("orbits", "orbits_det_twisted", "interior_orbits", "interior_orbits_det_twisted"):
        q = r[key]
        lines.append(f"{key}: period {q['period']}: {q['constituents']}")
    return "\n".join(lines) + "\n"


def _csv_series(r: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    k = len(r["terms"][0]["chi"])
    w.writerow(["m"] + [f"chi[{c}]" for c in range(k)] + [f"chi_interior[{c}]" for c in range(k)])
    for row in r["terms"]:
        w.writerow([row["m"]] + row["chi"] + row["chi_interior"])
    return buf.getvalue()


def _emit(report: dict, fmt: str, text_fn, csv_fn=None) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        if csv_fn is None:
            raise SystemExit("csv output is not available for this command")
        return csv_fn(report)
    return text_fn(report)


# --------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    sys.stdout.write(_emit(analyze_report(_load(args)), args.format, _text_analyze))
    return 0


def cmd_hstar(args) -> int:
    sys.stdout.write(_emit(hstar_report(_load(args)), args.format, _text_hstar, _csv_hstar))
    return 0


def cmd_series(args) -> int:
    if args.terms < 0:
        raise SystemExit("--terms must be nonnegative")
    sys.stdout.write(_emit(series_report(_load(args), args.terms), args.format,
                           _text_series, _csv_series))
    return 0


def cmd_check(args) -> int:
    from .properties import run_property_suite
    results = run_property_suite(_load(args))
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        report = {"passed": not failed,
                  "properties": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                                 for r in results]}
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        for r in results:
            line = f"{'PASS' if r.ok else 'FAIL'}  {r.name}  ({r.seconds:.2f}s)"
            if r.detail and (not r.ok or args.verbose):
                line += f"  {r.detail}"
            sys.stdout.write(line + "\n")
        sys.stdout.write(f"{len(results) - len(failed)}/{len(results)} properties hold\n")
    return 0 if not failed else 1


def _parse_params(items: Sequence[str]) -> dict:
    out = {}
    for item in items:
        if "=" not in item:
            raise SystemExit(f"parameters are key=value pairs, got {item!r}")
        k, v = item.split("=", 1)
        out[k] = v
    return out


def cmd_example(args) -> int:
    from .gallery import GALLERY, gallery_instance
    if args.name not in GALLERY:
        raise SystemExit(f"unknown example {args.name!r}; choose from {', '.join(sorted(GALLERY))}")
    inst = gallery_instance(args.name, _parse_params(args.params))
    text = dump_document(instance_to_document(inst))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eqehrhart",
        description="Equivariant Ehrhart theory of lattice polytopes with finite symmetry groups.",
        epilog=f"Set {THREADS_ENV}=N to process conjugacy classes on N threads.")
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name, help_text, formats=("text", "json")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="instance document (JSON)")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--cap", type=int, default=DEFAULT_GROUP_CAP,
                       help="maximum group order (default %(default)s)")
        p.add_argument("--table", help="JSON file with a character table override")
        return p

    instance_cmd("analyze", "group, fixed polytopes and criteria").set_defaults(func=cmd_analyze)
    instance_cmd("hstar", "the equivariant h*-series",
                 ("text", "json", "csv")).set_defaults(func=cmd_hstar)
    p = instance_cmd("series", "permutation characters of dilates", ("text", "json", "csv"))
    p.add_argument("--terms", type=int, default=6, help="largest dilation factor")
    p.set_defaults(func=cmd_series)
    p = instance_cmd("check", "run the property suite; exit status 1 on failure")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("example", help="write a gallery instance document")
    p.add_argument("name")
    p.add_argument("params", nargs="*", help="key=value parameters, e.g. d=3 group=S")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, NotInvariant, NonInvertibleGenerator, ClosureExceeded,
            CapExceeded, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
