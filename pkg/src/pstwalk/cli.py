"""Command-line interface: ``pstwalk analyze|covers|double|sporadic``.

Exit status: 0 when perfect state transfer is found, 1 when it is not, 2 on
input errors.  Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

EXIT_PST, EXIT_NO_PST, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _limit_threads() -> None:
    """Honour ``PST_THREADS`` by capping the BLAS/OpenMP pools (must run before numpy loads)."""
    cap = os.environ.get("PST_THREADS")
    if not cap:
        return
    if not cap.isdigit() or int(cap) < 1:
        raise InputError(f"PST_THREADS must be a positive integer, got {cap!r}")
    for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ[var] = cap


def _fmt_time(tau) -> str:
    return f"{tau} ≈ {tau.value:.10f}"


def _rounded(values: dict) -> dict:
    return {k: round(v, 12) if isinstance(v, float) else v for k, v in values.items()}


# ---------------------------------------------------------------- analyze


def _load_input(text: str):
    from .catalog import resolve
    from .drg import IntersectionArray
    from .graph import read_edge_list

    if text.startswith("catalog:"):
        try:
            return resolve(text)
        except (ValueError, TypeError, KeyError) as exc:
            raise InputError(f"cannot resolve {text!r}: {exc}") from None
    from .catalog import CatalogItem

    if ";" in text:
        try:
            return CatalogItem(text, array=IntersectionArray.parse(text))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    path = Path(text)
    if not path.is_file():
        raise InputError(f"{text!r} is neither a catalog name, an intersection array, nor a readable file")
    try:
        return CatalogItem(text, graph=read_edge_list(path))
    except (OSError, ValueError) as exc:
        raise InputError(f"{text}: {exc}") from None


def _spectrum_dict(spec) -> dict:
    from .numerics import NonIntegerReport

    if isinstance(spec, NonIntegerReport):
        return {"non_integer": True, "reason": spec.reason, "approximations": [round(x, 9) for x in spec.approximations]}
    out = {"eigenvalues": list(spec.eigenvalues)}
    if spec.multiplicities is not None:
        out["multiplicities"] = list(spec.multiplicities)
    return out


def analyze(item, verify: bool = False, tolerance: float = 1e-9) -> dict:
    """Library entry point behind ``pstwalk analyze``; returns the JSON report."""
    from .drg import spectrum_from_array, validate_array
    from .pst import (
        InternalConsistencyError,
        drg_pst_test,
        drg_spectrum_pst_test,
        numeric_verify,
        pst_in_scheme,
    )
    from .scheme import Eigenmatrices, SchemeError, eigenmatrices, scheme_from_graph

    report: dict = {"input": item.label}
    timings = {}
    if item.graph is not None:
        g = item.graph
        report.update(kind="graph", n=g.n)
        t0 = time.perf_counter()
        try:
            s = scheme_from_graph(g)
        except SchemeError as exc:
            raise InputError(f"{item.label}: {exc}; the decision procedure needs a distance-regular graph") from None
        timings["scheme"] = time.perf_counter() - t0
        arr = s.intersection_array()
        report["scheme"] = {"d": s.d, "valencies": list(s.valencies)}
        report["intersection_array"] = str(arr)
        report["spectrum"] = _spectrum_dict(spectrum_from_array(arr))
        cert = drg_pst_test(arr)
        certs = [dict(route="distance-regular", **cert.to_dict())]
        em = eigenmatrices(s)
        if isinstance(em, Eigenmatrices):
            alt = pst_in_scheme(em, 1)
            if alt.verdict != cert.verdict or alt.tau != cert.tau:
                raise InternalConsistencyError("scheme route and distance-regular route disagree")
            certs.append(dict(route="scheme", **alt.to_dict()))
        report["certificates"] = certs
        if verify:
            t0 = time.perf_counter()
            fr = numeric_verify(g, cert, tol=tolerance)
            timings["verify"] = time.perf_counter() - t0
            report["verification"] = dict(fr.to_dict(), values=_rounded(fr.values))
    elif item.array is not None:
        arr = item.array
        rep = validate_array(arr)
        report.update(kind="intersection-array", intersection_array=str(arr))
        if rep.valid:
            report["n"] = int(arr.n)
            report["spectrum"] = _spectrum_dict(spectrum_from_array(arr))
        cert = drg_pst_test(arr)
        report["certificates"] = [dict(route="distance-regular", **cert.to_dict())]
        if verify:
            report["verification"] = {"checked": False, "notice": "no vertex-level graph for an intersection array"}
    elif item.spectrum is not None:
        report.update(kind="spectrum", spectrum=_spectrum_dict(item.spectrum),
                      assumption="antipodal distance-regular graph with fibres of size 2")
        cert = drg_spectrum_pst_test(item.spectrum.eigenvalues)
        report["certificates"] = [dict(route="distance-regular", **cert.to_dict())]
    elif item.pscheme is not None:
        return sporadic_report(item.pscheme)
    else:  # pragma: no cover
        raise InputError("empty catalog item")
    report["verdict"] = cert.to_dict()["verdict"]
    if cert.verdict:
        report["time"] = str(cert.tau)
    report["_timings"] = timings
    return report


# ---------------------------------------------------------------- sporadic / double


def sporadic_report(sp) -> dict:
    from .pst import pst_in_scheme

    view = sp.view()
    certs = [pst_in_scheme(view, r) for r in range(1, view.d + 1)]
    rows = []
    for r, c in enumerate(certs, 1):
        row = {"relation": r, "valency": view.valencies[r], **c.to_dict()}
        rows.append(row)
    yes = [c for c in certs if c.verdict]
    return {
        "input": f"sporadic:{sp.name}" + (":" + ",".join(str(v) for v in sp.params.values()) if sp.params else ""),
        "kind": "sporadic",
        "name": sp.name,
        "params": sp.params,
        "n": sp.n,
        "P": [list(r) for r in sp.P],
        "involution_candidates": view.involution_candidates(),
        "certificates": rows,
        "verdict": "yes" if yes else "no",
        "_timings": {},
    }


def _parse_spectrum(text: str):
    from .numerics import IntegerSpectrum

    try:
        vals = [int(x) for x in text.replace(" ", "").strip("{}").split(",") if x]
    except ValueError:
        raise InputError(f"non-integer spectrum {text!r}") from None
    if not vals:
        raise InputError("empty spectrum")
    return IntegerSpectrum.from_values(sorted(set(vals)))


def double_report(text: str, verify: bool = False, tolerance: float = 1e-9) -> dict:
    from .catalog import bipartite_double
    from .drg import spectrum_from_array
    from .numerics import NonIntegerReport, integer_eigensystem
    from .pst import InternalConsistencyError, bipartite_double_pst_test, numeric_verify, pst_in_scheme
    from .scheme import Eigenmatrices, SchemeError, complete_scheme, eigenmatrices, scheme_from_graph, tensor_product

    graph = None
    if text.startswith("catalog:"):
        item = _load_input(text)
        if item.graph is not None:
            graph = item.graph
            dec = integer_eigensystem(graph.adjacency())
            spec = dec if isinstance(dec, NonIntegerReport) else dec.spectrum
        elif item.spectrum is not None:
            spec = item.spectrum
        elif item.array is not None:
            spec = spectrum_from_array(item.array)
        else:
            raise InputError(f"{text!r} has no base spectrum")
        if isinstance(spec, NonIntegerReport):
            raise InputError(f"{text}: base graph has non-integer eigenvalues")
    else:
        spec = _parse_spectrum(text)
    cert = bipartite_double_pst_test(spec)
    report = {"input": text, "kind": "bipartite-double", "spectrum": _spectrum_dict(spec),
              "certificates": [dict(route="double", **cert.to_dict())]}
    if graph is not None:
        try:
            base = scheme_from_graph(graph)
        except SchemeError:
            base = None
        if base is not None:
            em = eigenmatrices(tensor_product(base, complete_scheme(2)))
            if isinstance(em, Eigenmatrices):
                alt = pst_in_scheme(em, 3, involutions=[1])
                if alt.verdict != cert.verdict or alt.tau != cert.tau:
                    raise InternalConsistencyError("tensor-scheme route disagrees with the double criterion")
                report["certificates"].append(dict(route="tensor-scheme", **alt.to_dict()))
        if verify:
            fr = numeric_verify(bipartite_double(graph), cert, partner=1, u=0, tol=tolerance)
            report["verification"] = dict(fr.to_dict(), values=_rounded(fr.values))
    elif verify:
        report["verification"] = {"checked": False, "notice": "no vertex-level base graph"}
    report["verdict"] = cert.to_dict()["verdict"]
    if cert.verdict:
        report["time"] = str(cert.tau)
    report["_timings"] = {}
    return report


# ---------------------------------------------------------------- output


def _emit_json(report: dict) -> str:
    clean = {k: v for k, v in report.items() if not k.startswith("_")}
    return json.dumps(clean, sort_keys=True, ensure_ascii=False, indent=2)


def _human(report: dict) -> str:
    lines = [f"input: {report['input']}"]
    for key in ("n", "intersection_array"):
        if key in report and report["kind"] != "sporadic":
            lines.append(f"{key.replace('_', ' ')}: {report[key]}")
    if "scheme" in report:
        lines.append(f"classes: {report['scheme']['d']}  valencies: {report['scheme']['valencies']}")
    spec = report.get("spectrum")
    if spec:
        if spec.get("non_integer"):
            lines.append(f"spectrum: {spec['reason']} ({', '.join(f'{x:.6g}' for x in spec['approximations'])})")
        elif "multiplicities" in spec:
            lines.append("spectrum: " + "  ".join(f"{e}^{m}" for e, m in zip(spec["eigenvalues"], spec["multiplicities"])))
        else:
            lines.append(f"spectrum: {spec['eigenvalues']}")
    if "assumption" in report:
        lines.append(f"assumes: {report['assumption']}")
    if report["kind"] == "sporadic":
        lines.append(f"n: {report['n']}  involution candidates: {report['involution_candidates']}")
        for row in report["P"]:
            lines.append("  " + " ".join(f"{x:>8}" for x in row))
    for c in report["certificates"]:
        head = c.get("route", f"relation {c.get('relation')}")
        if report["kind"] == "sporadic":
            head = f"relation {c['relation']} (valency {c['valency']})"
        if c["verdict"] == "yes":
            from .numerics import RationalPiTime

            tau = RationalPiTime.from_dict(c["tau"])
            lines.append(f"{head}: PST yes, T = class {c['T_index']}, alpha = {c['alpha']}, "
                         f"time {_fmt_time(tau)} (and odd multiples)")
        else:
            lines.append(f"{head}: PST no ({c.get('failure_reason')})")
        det = c.get("details") or {}
        if "f" in det:
            lines.append("  theta: " + " ".join(f"{x:>6}" for x in det["theta"]))
            lines.append("  f:     " + " ".join(f"{x:>6}" for x in det["f"]))
            lines.append("  m:     " + " ".join(f"{x:>6}" for x in det["m"]))
    ver = report.get("verification")
    if ver:
        if not ver.get("checked"):
            lines.append(f"verification: skipped ({ver.get('notice')})")
        else:
            tag = "heuristic scan" if ver.get("heuristic") else "fidelity"
            vals = ", ".join(f"{k}={v:.10g}" if isinstance(v, float) else f"{k}={v}" for k, v in ver["values"].items())
            lines.append(f"verification ({tag}): {'pass' if ver['passed'] else 'FAIL'}; {vals}")
    lines.append(f"verdict: {report['verdict']}" + (f" at {report['time']}" if "time" in report else ""))
    return "\n".join(lines)


def _tsv(report: dict) -> str:
    rows = [("input", report["input"]), ("verdict", report["verdict"]), ("time", report.get("time", ""))]
    for c in report["certificates"]:
        key = c.get("route") or f"relation{c['relation']}"
        if report["kind"] == "sporadic":
            key = f"relation{c['relation']}"
        tau = c.get("tau")
        rows.append((key, c["verdict"] + ("\t" + f"{tau['num']}/{tau['den']}" if tau else "")))
    return "\n".join("\t".join(map(str, r)) for r in rows)


def _print_report(report: dict, fmt: str) -> None:
    out = {"json": _emit_json, "tsv": _tsv, "human": _human}[fmt](report)
    print(out)
    for k, v in report.get("_timings", {}).items():
        print(f"[timing] {k}: {v:.3f}s", file=sys.stderr)
    ver = report.get("verification")
    if ver and ver.get("checked") and not ver.get("passed"):
        print("warning: numeric verification disagrees with the exact verdict", file=sys.stderr)


def _covers_output(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], sort_keys=True, ensure_ascii=False, indent=2)
    if fmt == "tsv":
        lines = ["n\tc\tdelta\ttime\tflags"]
        lines += [f"{r.n}\t{r.c}\t{r.delta}\t{r.tau}\t{','.join(r.flags)}" for r in rows]
        return "\n".join(lines)
    lines = [f"{'n':>5} {'c':>5} {'delta':>6}  time"]
    lines += [f"{r.n:>5} {r.c:>5} {r.delta:>6}  {_fmt_time(r.tau)}" + (f"  [{', '.join(r.flags)}]" if r.flags else "")
              for r in rows]
    lines.append(f"{len(rows)} rows")
    return "\n".join(lines)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "tsv"), default="human")
    common.add_argument("--verify", action="store_true", help="replay the verdict with the floating walk")
    common.add_argument("--tolerance", type=float, default=1e-9, help="fidelity tolerance for --verify")

    p = argparse.ArgumentParser(prog="pstwalk", description="Perfect state transfer in association schemes.")
    sub = p.add_subparsers(dest="command", required=True)
    a = sub.add_parser("analyze", parents=[common], help="edge-list file, 'b0,..;c1,..' array, or catalog:NAME")
    a.add_argument("input")
    c = sub.add_parser("covers", parents=[common], help="enumerate (n,2,c) covers of K_n with PST")
    c.add_argument("--max-n", type=int, default=280)
    c.add_argument("--stream", choices=("table1", "hadamard", "all"), default="table1")
    d = sub.add_parser("double", parents=[common], help="bipartite double X x K2 from a spectrum or catalog:NAME")
    d.add_argument("input")
    s = sub.add_parser("sporadic", parents=[common], help="sporadic scheme, e.g. leech11 or tight7:2")
    s.add_argument("name")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        _limit_threads()
        if args.command == "covers":
            if args.max_n < 4:
                raise InputError("--max-n must be at least 4")
            from .catalog import enumerate_pst_covers

            t0 = time.perf_counter()
            rows = enumerate_pst_covers(args.max_n, args.stream)
            print(_covers_output(rows, args.format))
            print(f"[timing] enumerate: {time.perf_counter() - t0:.3f}s", file=sys.stderr)
            return EXIT_PST if rows else EXIT_NO_PST
        if args.command == "analyze":
            report = analyze(_load_input(args.input), args.verify, args.tolerance)
        elif args.command == "double":
            report = double_report(args.input, args.verify, args.tolerance)
        else:
            from .catalog import parse_sporadic

            try:
                sp = parse_sporadic(args.name.removeprefix("sporadic:"))
            except (ValueError, KeyError) as exc:
                raise InputError(str(exc)) from None
            report = sporadic_report(sp)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _print_report(report, args.format)
    return EXIT_PST if report["verdict"] == "yes" else EXIT_NO_PST


if __name__ == "__main__":
    raise SystemExit(main())
