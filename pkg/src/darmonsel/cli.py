"""Command-line front end: single configs, batch corpora, traces, reports.

Exit codes: 0 at least one admissible spec, 2 infeasible, 1 input or
validation error (including an oracle mismatch under --oracle). The machine
report goes to --out (or stdout), the human trace to stderr unless --no-trace.
"""

import argparse
import json
import re
import sys
from dataclasses import replace
from fractions import Fraction
from pathlib import Path

from .errors import DarmonselError, OracleMismatch
from .feasibility import (
    FeasibilityReport,
    Kind,
    feasibility_report,
    select_gartner,
    select_greenberg,
)
from .fields import _poly_str
from .oracle import enumerate_admissible
from .quadratic import PlaceType
from .serialize import (
    InputConfig,
    Options,
    config_from_doc,
    emit_report,
    parse_config,
    realize_config,
)


def _fmt_ideal(I) -> str:
    return str(I)


def _fmt_spec(spec) -> str:
    reals = ", ".join(f"tau_{v.index}" for v in spec.ramified_real) or "none"
    primes = ", ".join(str(P) for P in spec.ramified_finite) or "none"
    return (f"N+ = {spec.n_plus}, N' = {spec.n_prime}, N- = {spec.n_minus}; "
            f"ramified reals: {reals}; ramified primes: {primes}")


def _trace_header(lines, report):
    prof = report.profile
    F = prof.extension.base
    lines.append(f"base field F: Q[x]/({_poly_str(F.defining_poly)}), "
                 f"degree {F.degree}, polynomial discriminant {F.poly_disc}")
    delta = ", ".join(str(c) for c in prof.extension.delta)
    lines.append(f"K = F(sqrt(delta)), delta coefficients in theta: [{delta}]")
    cert = prof.extension.certificate
    lines.append("delta non-squareness: "
                 + (f"certified non-residue at {cert}" if cert
                    else "certified by sign or exact reconstruction"))
    lines.append(f"conductor N = {prof.conductor} (norm {prof.conductor.norm()})")
    lines.append("real places of F:")
    for v, t in prof.real_classes:
        lines.append(f"  tau_{v.index}: theta in [{v.lo}, {v.hi}] -> {t.value}"
                     + (" (delta < 0)" if t is PlaceType.INERT else " (delta > 0)"))
    if not prof.real_classes:
        lines.append("  (none)")
    lines.append("primes dividing N:")
    for P, e, t in prof.finite_classes:
        lines.append(f"  {P} exponent {e}: {t.value}")
    if not prof.finite_classes:
        lines.append("  (none)")
    if not prof.disc_coprime:
        lines.append("WARNING: N meets the relative discriminant of K/F "
                     "(a ramified prime divides N)")
    lines.append(
        f"sign of the functional equation = "
        f"(-1)^(inert reals + inert primes dividing N) = "
        f"(-1)^({prof.inert_real_count} + {len(prof.inert_finite)}) = "
        f"{'+1' if report.sign == 1 else '-1'}")


def _check(lines, label: str, ok: bool, text: str):
    lines.append(f"    {label} {'ok' if ok else 'FAIL'}: {text}")
    return ok


def _trace_gartner(lines, report, allow_drop_b4: bool):
    prof = report.profile
    inert_reals = prof.inert_real_places
    lines.append("gartner candidates (one split inert real place, N' = (1)):")
    if not inert_reals:
        lines.append("    B1 FAIL: no real place of F is inert in K, "
                     "no candidate exists")
        return
    by_tau = {}
    for s in report.gartner_options:
        by_tau.setdefault(s.distinguished, []).append(s)
    inert_primes = [P for P, _ in prof.inert_finite]
    for tau in inert_reals:
        ram_real = [v for v in inert_reals if v != tau]
        lines.append(f"  candidate: distinguished place tau_{tau.index}")
        _check(lines, "B1", True,
               f"tau_{tau.index} split in B, inert in K; r_K = 1")
        if allow_drop_b4:
            specs = by_tau.get(tau, [])
            if not specs:
                lines.append("    (vii)/(viii) FAIL: no subset of inert primes "
                             "gives an even ramification set with admissible "
                             "N+ (B4 dropped)")
                continue
            for s in specs:
                note = ("B4 dropped: ramified primes = {"
                        + (", ".join(str(P) for P in s.ramified_finite) or "")
                        + "}")
                _check(lines, "B4", True, note + " (widened mode)")
                _trace_common_checks(lines, s, prof, relaxed=True)
                lines.append(f"    accepted -> {_fmt_spec(s)}")
            continue
        if not prof.inert_part_squarefree:
            _check(lines, "B4", False,
                   "an inert prime divides N with exponent >= 2; it must "
                   "ramify in B but N- is squarefree")
            continue
        _check(lines, "B4", True,
               "ramified primes = all inert primes dividing N = {"
               + (", ".join(str(P) for P in inert_primes) or "") + "}")
        parity = len(ram_real) + len(inert_primes)
        if not _check(lines, "(vii)", parity % 2 == 0,
                      f"|ramified| = {len(ram_real)} + {len(inert_primes)} "
                      f"= {parity}, {'even' if parity % 2 == 0 else 'odd'}"):
            continue
        specs = by_tau.get(tau, [])
        if specs:
            s = specs[0]
            _trace_common_checks(lines, s, prof, relaxed=False)
            lines.append(f"    accepted -> {_fmt_spec(s)}")
        else:
            lines.append("    (viii) FAIL: a prime of N+ is not split in K")


def _trace_common_checks(lines, spec, prof, relaxed: bool):
    _check(lines, "A", True, "every ramified place of B is inert in K")
    _check(lines, "(iv)", True,
           f"N = N+ N' N- pairwise coprime: {_fmt_spec(spec)}")
    minus = ", ".join(str(P) for P in spec.n_minus.primes()) or "none"
    plus = ", ".join(str(P) for P in spec.n_plus.primes()) or "none"
    if relaxed:
        _check(lines, "(viii)", True,
               f"N- primes inert: {minus}; N+ primes unramified: {plus}")
    else:
        _check(lines, "(viii)", True,
               f"N- primes inert: {minus}; N+ primes split: {plus}")
    _check(lines, "C4" if spec.kind is Kind.GREENBERG else "B3", True,
           "local optimal-embedding criterion holds at every place "
           "(checked via (viii), not assumed)")


def _trace_greenberg(lines, report):
    prof = report.profile
    lines.append("greenberg candidates (all inert reals ramified, N' = (p)):")
    exact = [P for P, e in prof.inert_finite if e == 1]
    if not exact:
        lines.append("    C2 FAIL: no inert prime divides N with exponent "
                     "exactly 1")
        return
    by_prime = {s.distinguished: s for s in report.greenberg_options}
    inert_reals = prof.inert_real_places
    for p0 in exact:
        lines.append(f"  candidate: level-extension prime {p0}")
        _check(lines, "C2", True, f"{p0} inert and exactly divides N")
        others = [(P, e) for P, e in prof.inert_finite if P != p0]
        bad = [f"{P} exponent {e}" for P, e in others if e >= 2]
        if not _check(lines, "C3", not bad,
                      ("remaining inert primes each have exponent 1"
                       if not bad else "remaining inert prime(s) with exponent"
                       " >= 2: " + ", ".join(bad))):
            continue
        _check(lines, "C1", True,
               "ramified reals = all inert real places {"
               + (", ".join(f"tau_{v.index}" for v in inert_reals) or "")
               + "}; r_K = 0")
        parity = len(inert_reals) + len(others)
        if not _check(lines, "(vii)", parity % 2 == 0,
                      f"|ramified| = {len(inert_reals)} + {len(others)} "
                      f"= {parity}, {'even' if parity % 2 == 0 else 'odd'}"):
            continue
        s = by_prime.get(p0)
        if s is not None:
            _trace_common_checks(lines, s, prof, relaxed=False)
            lines.append(f"    accepted -> {_fmt_spec(s)}")
        else:
            lines.append("    (viii) FAIL: a prime of N+ is not split in K")


def format_trace(report: FeasibilityReport, allow_drop_b4: bool = False) -> str:
    lines: list[str] = []
    _trace_header(lines, report)
    _trace_gartner(lines, report, allow_drop_b4)
    _trace_greenberg(lines, report)
    lines.append("assumed without computation: B2 (Jacquet-Langlands "
                 "correspondence); global halves of B3/C4 beyond the local "
                 "criterion")
    if report.failure_reasons:
        lines.append("failure reasons: "
                     + "; ".join(f"{r.code.value} ({r.detail})"
                                 for r in report.failure_reasons))
    n_g = len(report.gartner_options)
    n_h = len(report.greenberg_options)
    verdict = "FEASIBLE" if report.feasible else "INFEASIBLE"
    lines.append(f"verdict: {verdict} ({n_g} gartner, {n_h} greenberg), "
                 f"sign {'+1' if report.sign == 1 else '-1'}, "
                 f"theorem-1 consistency {report.theorem1_consistent}")
    return "\n".join(lines)


def run_single(config: InputConfig):
    """(exit_code, machine_report_json or None, trace_text)."""
    try:
        K, N, order = realize_config(config)
        report = feasibility_report(
            K, N,
            order_conductor=order,
            allow_drop_b4=config.options.allow_drop_b4,
            precision=Fraction(1, 2 ** config.options.precision_bits),
        )
        if config.options.oracle_check:
            selected = tuple(sorted(
                select_gartner(report.profile,
                               allow_drop_b4=config.options.allow_drop_b4)
                + select_greenberg(report.profile),
                key=lambda s: s.sort_key))
            enumerated = enumerate_admissible(
                report.profile, allow_drop_b4=config.options.allow_drop_b4)
            if selected != enumerated:
                raise OracleMismatch(
                    f"selectors found {len(selected)} specs, oracle found "
                    f"{len(enumerated)}")
    except DarmonselError as e:
        return 1, None, f"error: {type(e).__name__}: {e}"
    trace = format_trace(report, allow_drop_b4=config.options.allow_drop_b4)
    return (0 if report.feasible else 2), emit_report(report), trace


def _record_id(doc, position: int) -> str:
    rid = doc.get("id") if isinstance(doc, dict) else None
    return rid if isinstance(rid, str) and rid else f"record-{position:03d}"


def _safe_name(rid: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]", "_", rid) or "record"


def run_batch(corpus_path: str, output_dir: str,
              override: Options | None = None):
    """(exit_code, summary_doc). Writes per-record reports and summary.json."""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    try:
        corpus = json.loads(Path(corpus_path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        return 1, {"schema_version": 1, "kind": "batch_summary",
                   "error": f"cannot read corpus: {e}", "rows": []}
    records = corpus.get("records") if isinstance(corpus, dict) else corpus
    if not isinstance(records, list):
        return 1, {"schema_version": 1, "kind": "batch_summary",
                   "error": "corpus must be a list of configs or "
                            "{schema_version, records: [...]}", "rows": []}
    rows = []
    any_error = False
    for k, doc in enumerate(records, start=1):
        rid = _record_id(doc, k)
        row = {"id": rid, "sign": None, "gartner": None, "greenberg": None,
               "verdict": "ERROR"}
        try:
            config = config_from_doc(doc)
            if override is not None:
                config = replace(config, options=_merge_options(
                    config.options, override))
            code, report_json, trace = run_single(config)
            if code == 1:
                row["error"] = trace
                any_error = True
            else:
                report_doc = json.loads(report_json)
                row.update(sign=report_doc["sign"],
                           gartner=len(report_doc["gartner_options"]),
                           greenberg=len(report_doc["greenberg_options"]),
                           verdict="feasible" if code == 0 else "infeasible")
                (out / f"{_safe_name(rid)}.json").write_text(report_json)
        except DarmonselError as e:
            row["error"] = f"{type(e).__name__}: {e}"
            any_error = True
        rows.append(row)
    rows.sort(key=lambda r: r["id"])
    summary = {"schema_version": 1, "kind": "batch_summary", "rows": rows}
    (out / "summary.json").write_text(json.dumps(summary, indent=2,
                                                 sort_keys=True))
    return (1 if any_error else 0), summary


_SENTINEL = Options()


def _merge_options(base: Options, override: Options) -> Options:
    # command-line flags strengthen per-record options, never weaken them
    return Options(
        allow_drop_b4=base.allow_drop_b4 or override.allow_drop_b4,
        oracle_check=base.oracle_check or override.oracle_check,
        precision_bits=(override.precision_bits
                        if override.precision_bits != _SENTINEL.precision_bits
                        else base.precision_bits),
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="darmonsel",
        description="Decide which modular point construction applies for a "
                    "conductor N over a totally real field F and a quadratic "
                    "extension K, and enumerate the admissible quaternion "
                    "algebra data.")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--input", help="path to a single JSON config")
    target.add_argument("--batch", help="path to a JSON corpus of configs")
    parser.add_argument("--out", help="output file (single) or directory "
                                      "(batch) for machine reports")
    parser.add_argument("--oracle", action="store_true",
                        help="re-derive every answer with the brute-force "
                             "enumerator and fail on any mismatch")
    parser.add_argument("--allow-drop-b4", action="store_true",
                        help="widen the gartner selector: inert primes may "
                             "stay unramified in B, subject to parity")
    parser.add_argument("--precision-bits", type=int, default=None,
                        help="width bound 2^-bits for real-place intervals "
                             "(default 32)")
    parser.add_argument("--trace", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="print the human-readable decision trace to "
                             "stderr (default on)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if args.precision_bits is not None and args.precision_bits < 1:
        print("error: --precision-bits must be >= 1", file=sys.stderr)
        return 1
    override = Options(
        allow_drop_b4=args.allow_drop_b4,
        oracle_check=args.oracle,
        precision_bits=(args.precision_bits if args.precision_bits is not None
                        else _SENTINEL.precision_bits),
    )
    if args.batch:
        if not args.out:
            print("error: --batch requires --out OUTPUT_DIR", file=sys.stderr)
            return 1
        code, summary = run_batch(args.batch, args.out, override=override)
        print(json.dumps(summary, indent=2, sort_keys=True))
        if args.trace:
            for row in summary["rows"]:
                mark = row["verdict"]
                extra = (f" sign {row['sign']:+d}, {row['gartner']} gartner, "
                         f"{row['greenberg']} greenberg"
                         if row["verdict"] != "ERROR"
                         else f" {row.get('error', '')}")
                print(f"{row['id']}: {mark}{extra}", file=sys.stderr)
        return code
    try:
        text = Path(args.input).read_text()
    except OSError as e:
        print(f"error: cannot read {args.input}: {e}", file=sys.stderr)
        return 1
    try:
        config = parse_config(text)
    except DarmonselError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    config = replace(config, options=_merge_options(config.options, override))
    code, report_json, trace = run_single(config)
    if code == 1:
        print(trace, file=sys.stderr)
        return 1
    if args.trace:
        print(trace, file=sys.stderr)
    if args.out:
        Path(args.out).write_text(report_json)
    else:
        print(report_json)
    return code


if __name__ == "__main__":
    sys.exit(main())
