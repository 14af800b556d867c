"""Command-line front end and report layer.

Subcommands: ``analyze`` (per-graph criticality report), ``classify``
(fourteen-configuration taxonomy), ``verify`` (minimum-degree sweeps over
exhaustive, file, or sampled sources), ``minimalize``, and ``certify``.

Exit codes: 0 all checks passed, 1 mathematical counterexample or failed
check precondition, 2 malformed input. Primary output is byte-deterministic
for fixed (command, flags, seed, input); wall-clock timestamps appear only
in the optional append-only run log.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from multiprocessing import Pool
from typing import Iterable, TextIO

from .configurations import ClassificationError, classify
from .criticality import (
    check_connectivity_properties,
    is_k_factor_critical,
    is_minimal_kfc,
    minimality_certificate,
    minimalize,
)
from .decomp import gallai_edmonds
from .enumeration import all_graphs, random_graph, read_graph6_stream
from .graphs import Graph, Graph6Error, GraphError, bits, min_degree, parse_graph6, to_graph6
from .matching import deficiency

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2

DEFAULT_SAMPLE_P = 0.8


def _vertices(mask: int) -> list[int]:
    return list(bits(mask))


# ---------------------------------------------------------------------------
# verify machinery
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerificationRecord:
    graph6: str
    n: int
    k: int
    is_kfc: bool
    is_minimal: bool
    min_degree: int
    verdict: str  # "pass" / "fail"
    witness: dict | None

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "k": self.k,
            "is_kfc": self.is_kfc,
            "is_minimal": self.is_minimal,
            "min_degree": self.min_degree,
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass
class VerifySummary:
    scanned: int
    kfc: int
    minimal: int
    failures: int
    records: list[VerificationRecord]


def _quick_minimal(g: Graph, k: int) -> bool:
    """Minimality with early exit: stop at the first deletable edge."""
    for e in g.edges():
        if minimality_certificate(g, k, e) is None:
            return False
    return True


def _record_for(g: Graph, k: int, minimal: bool) -> VerificationRecord:
    dmin = min_degree(g)
    ok = (not minimal) or dmin == k + 1
    witness = None if ok else {"min_degree": dmin, "expected": k + 1}
    return VerificationRecord(
        graph6=to_graph6(g), n=g.n, k=k, is_kfc=True, is_minimal=minimal,
        min_degree=dmin, verdict="pass" if ok else "fail", witness=witness,
    )


def _scan_worker(task: tuple[str, int]) -> dict | None:
    g6, k = task
    g = parse_graph6(g6)
    ok, _ = is_k_factor_critical(g, k)
    if not ok:
        return None
    return _record_for(g, k, _quick_minimal(g, k)).to_dict()


def _sample_worker(task: tuple[int, float, int, int]) -> dict | None:
    n, p, k, seed = task
    g = random_graph(n, p, seed)
    ok, _ = is_k_factor_critical(g, k)
    if not ok:
        return None
    m = minimalize(g, k, seed)
    return _record_for(m, k, True).to_dict()


def _run_pool(worker, tasks: list, jobs: int) -> Iterable[dict | None]:
    if jobs <= 1:
        return map(worker, tasks)
    pool = Pool(jobs)
    chunk = max(1, len(tasks) // (jobs * 8))
    try:
        return list(pool.imap(worker, tasks, chunksize=chunk))
    finally:
        pool.close()
        pool.join()


def verify_scan(
    n: int,
    k: int,
    source: str,
    samples: int = 1000,
    seed: int = 0,
    p: float = DEFAULT_SAMPLE_P,
    jobs: int = 1,
) -> VerifySummary:
    """Run a verification sweep; records appear in input order.

    ``source`` is ``all``, ``file:PATH``, or ``sample``. Exhaustive scans
    need n <= 8; sampling draws graph i from seed + i and minimalizes the
    k-factor-critical ones with the same per-sample seed.
    """
    if (n + k) % 2:
        raise GraphError(f"n + k must be even, got n={n}, k={k}")
    if not 0 <= k < n:
        raise GraphError(f"k={k} outside 0..{n - 1}")

    if source == "sample":
        tasks = [(n, p, k, seed + i) for i in range(samples)]
        results = _run_pool(_sample_worker, tasks, jobs)
    else:
        if source == "all":
            if n > 8:
                raise GraphError("source=all is limited to n <= 8")
            graphs = list(all_graphs(n))
        elif source.startswith("file:"):
            path = source[len("file:"):]
            with open(path, "r", encoding="ascii") as fh:
                graphs = list(read_graph6_stream(fh, strict=True))
            bad = [g.n for g in graphs if g.n != n]
            if bad:
                raise GraphError(f"input file contains graphs of order {bad[0]}, expected {n}")
        else:
            raise GraphError(f"unknown source {source!r}")
        scan_tasks = [(to_graph6(g), k) for g in graphs]
        results = _run_pool(_scan_worker, scan_tasks, jobs)
        tasks = scan_tasks

    records = []
    kfc = minimal = failures = 0
    for raw in results:
        if raw is None:
            continue
        rec = VerificationRecord(**raw)
        kfc += 1
        minimal += 1 if rec.is_minimal else 0
        failures += 1 if rec.verdict == "fail" else 0
        records.append(rec)
    return VerifySummary(
        scanned=len(tasks), kfc=kfc, minimal=minimal, failures=failures, records=records,
    )


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _emit_records(records: list[VerificationRecord], fmt: str, out: TextIO) -> None:
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec.to_dict()) + "\n")
    elif fmt == "tsv":
        out.write("graph6\tn\tk\tis_kfc\tis_minimal\tmin_degree\tverdict\twitness\n")
        for rec in records:
            wit = json.dumps(rec.witness) if rec.witness else ""
            out.write(
                f"{rec.graph6}\t{rec.n}\t{rec.k}\t{rec.is_kfc}\t{rec.is_minimal}"
                f"\t{rec.min_degree}\t{rec.verdict}\t{wit}\n"
            )
    else:
        if records:
            width = max(len(r.graph6) for r in records)
            for rec in records:
                out.write(
                    f"{rec.graph6:<{width}}  minimal={str(rec.is_minimal):<5}  "
                    f"min_degree={rec.min_degree}  verdict={rec.verdict}\n"
                )


def _append_run_log(path: str, args: argparse.Namespace, digest: str, summary: VerifySummary) -> None:
    entry = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "command": " ".join(sys.argv),
        "input_digest": digest,
        "seed": args.seed,
        "counts": {
            "scanned": summary.scanned,
            "kfc": summary.kfc,
            "minimal": summary.minimal,
        },
        "verdict": "fail" if summary.failures else "pass",
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry) + "\n")


def _load_graph(arg: str) -> Graph:
    if arg == "-":
        line = sys.stdin.readline()
        return parse_graph6(line)
    if os.path.exists(arg):
        with open(arg, "r", encoding="ascii") as fh:
            for line in fh:
                if line.strip():
                    return parse_graph6(line)
        raise Graph6Error(f"no graph6 line in {arg}")
    return parse_graph6(arg)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    k = args.k
    if not 0 <= k < g.n:
        raise GraphError(f"k={k} outside 0..{g.n - 1}")
    parity_ok = (g.n + k) % 2 == 0
    report = is_minimal_kfc(g, k)
    ge = gallai_edmonds(g)
    conn_ok = check_connectivity_properties(g, k) if report.is_kfc and k >= 1 else None
    dmin = min_degree(g)
    verdict = "pass"
    if report.is_kfc and report.is_minimal and dmin != k + 1:
        verdict = "fail"
    if conn_ok is False:
        verdict = "fail"
    payload = {
        "graph6": to_graph6(g),
        "n": g.n,
        "k": k,
        "parity_ok": parity_ok,
        "is_kfc": report.is_kfc,
        "failing_set": _vertices(report.failing_set) if report.failing_set is not None else None,
        "is_minimal": report.is_minimal,
        "certificates": [
            {"edge": list(c.edge), "s_e": _vertices(c.s_e)} for c in report.certificates
        ],
        "deletable_edges": [list(e) for e in report.deletable_edges],
        "gallai_edmonds": {"d": _vertices(ge.d), "a": _vertices(ge.a), "c": _vertices(ge.c)},
        "deficiency": deficiency(g),
        "min_degree": dmin,
        "connectivity_ok": conn_ok,
        "verdict": verdict,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"graph: {payload['graph6']}  (n={g.n}, k={k})")
        if not parity_ok:
            print("note: n + k is odd, so the graph cannot be k-factor-critical")
        print(f"k-factor-critical: {report.is_kfc}")
        if report.failing_set is not None:
            print(f"failing set: {_vertices(report.failing_set)}")
        print(f"minimal: {report.is_minimal}")
        if report.deletable_edges:
            print(f"deletable edges: {[list(e) for e in report.deletable_edges]}")
        if report.certificates and report.is_minimal:
            for c in report.certificates:
                print(f"certificate: edge {list(c.edge)} forced by S_e={_vertices(c.s_e)}")
        print(f"gallai-edmonds: D={_vertices(ge.d)} A={_vertices(ge.a)} C={_vertices(ge.c)}")
        print(f"deficiency: {payload['deficiency']}")
        print(f"min degree: {dmin}")
        print(f"connectivity consequences: {conn_ok}")
        print(f"verdict: {verdict}")
    return EXIT_OK if verdict == "pass" else EXIT_COUNTEREXAMPLE


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        u_s, v_s = args.edge.split(",")
        e = (int(u_s), int(v_s))
    except ValueError:
        raise GraphError(f"--edge expects U,V with integers, got {args.edge!r}") from None
    try:
        result = classify(g, e)
    except ClassificationError as exc:
        print(f"precondition failed ({exc.reason}): {exc}", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    entries = [
        {
            "label": ent.label.value,
            "x": _vertices(ent.witness.x),
            "components": [_vertices(c.vertices) for c in ent.witness.components],
            "u_component": _vertices(ent.u_component),
            "v_component": _vertices(ent.v_component),
        }
        for ent in result.entries
    ]
    payload = {
        "graph6": to_graph6(g),
        "edge": [min(e), max(e)],
        "labels": [lab.value for lab in result.labels()],
        "canonical": entries[0],
        "entries": entries,
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"graph: {payload['graph6']}  missing edge {payload['edge']}")
        print(f"labels: {', '.join(payload['labels'])}")
        can = entries[0]
        print(
            f"canonical: {can['label']} with X={can['x']}, "
            f"components {can['components']}"
        )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    summary = verify_scan(
        n=args.n, k=args.k, source=args.source, samples=args.samples,
        seed=args.seed, p=args.p, jobs=args.jobs,
    )
    _emit_records(summary.records, args.format, sys.stdout)
    summary_line = (
        f"scanned={summary.scanned} kfc={summary.kfc} "
        f"minimal={summary.minimal} failures={summary.failures}"
    )
    if args.format == "human":
        print(summary_line)
    else:
        print(summary_line, file=sys.stderr)
    if summary.failures:
        for rec in summary.records:
            if rec.verdict == "fail":
                print(f"counterexample: {rec.graph6}", file=sys.stderr)
    if args.log:
        if args.source.startswith("file:"):
            with open(args.source[len("file:"):], "rb") as fh:
                digest = hashlib.sha256(fh.read()).hexdigest()
        else:
            desc = f"{args.source}:n={args.n}:k={args.k}:samples={args.samples}:p={args.p}:seed={args.seed}"
            digest = hashlib.sha256(desc.encode()).hexdigest()
        _append_run_log(args.log, args, digest, summary)
    return EXIT_COUNTEREXAMPLE if summary.failures else EXIT_OK


def _cmd_minimalize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    ok, _ = is_k_factor_critical(g, args.k)
    if not ok:
        print("input graph is not k-factor-critical", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    print(to_graph6(minimalize(g, args.k, args.seed)))
    return EXIT_OK


def _cmd_certify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = is_minimal_kfc(g, args.k)
    if not report.is_kfc:
        print("input graph is not k-factor-critical", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    if not report.is_minimal:
        print(
            "not minimal; certificate-free edges: "
            + " ".join(f"({u},{v})" for u, v in report.deletable_edges),
            file=sys.stderr,
        )
        return EXIT_COUNTEREXAMPLE
    if args.format == "json":
        for c in report.certificates:
            print(json.dumps({"edge": list(c.edge), "s_e": _vertices(c.s_e)}))
    else:
        for c in report.certificates:
            print(f"edge ({c.edge[0]},{c.edge[1]}): S_e = {_vertices(c.s_e)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="factorcrit",
        description="verification toolkit for factor-criticality of small graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="criticality report for one graph")
    an.add_argument("--graph", required=True, help="graph6 string, file path, or - for stdin")
    an.add_argument("--k", type=int, required=True)
    an.add_argument("--format", choices=["human", "json"], default="human")
    an.set_defaults(func=_cmd_analyze)

    cl = sub.add_parser("classify", help="configuration label for a 10-vertex graph")
    cl.add_argument("--graph", required=True)
    cl.add_argument("--edge", required=True, metavar="U,V", help="designated missing edge")
    cl.add_argument("--format", choices=["human", "json"], default="human")
    cl.set_defaults(func=_cmd_classify)

    ve = sub.add_parser("verify", help="minimum-degree sweep over a graph source")
    ve.add_argument("--n", type=int, required=True)
    ve.add_argument("--k", type=int, required=True)
    ve.add_argument("--source", required=True, help="all | file:PATH | sample")
    ve.add_argument("--samples", type=int, default=1000)
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--p", type=float, default=DEFAULT_SAMPLE_P,
                    help="edge probability for sampled starts")
    ve.add_argument("--jobs", type=int, default=1)
    ve.add_argument("--format", choices=["human", "json", "tsv"], default="human")
    ve.add_argument("--log", default=None, help="append-only NDJSON run log path")
    ve.set_defaults(func=_cmd_verify)

    mi = sub.add_parser("minimalize", help="delete edges until minimal k-factor-critical")
    mi.add_argument("--graph", required=True)
    mi.add_argument("--k", type=int, required=True)
    mi.add_argument("--seed", type=int, default=0)
    mi.set_defaults(func=_cmd_minimalize)

    ce = sub.add_parser("certify", help="per-edge certificates of a minimal graph")
    ce.add_argument("--graph", required=True)
    ce.add_argument("--k", type=int, required=True)
    ce.add_argument("--format", choices=["human", "json"], default="human")
    ce.set_defaults(func=_cmd_certify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
