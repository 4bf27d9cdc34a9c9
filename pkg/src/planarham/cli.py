"""Command-line front end: ingest graphs, run verifiers, emit certificates.

Exit codes: 0 pass, 1 fail, 2 inconclusive / budget exhausted, 3 input error.
Certificates go to standard output (and byte-identically to --out); progress
lines go to standard error as "done/total".
"""

from __future__ import annotations

import os
import sys
import time

import click

from .constructions import CombineRecipe, cubic_pivot, petersen, thomassen_combine, wiener_araya
from .graph import Graph, GraphInputError
from .graphio import (
    CertificateDocument,
    TOOL_VERSION,
    ParseError,
    input_digest,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from .grinberg import grinberg_obstruction
from .hamilton import SearchBudget, SearchStatus, hamiltonian_cycle, hamiltonian_path
from .verify import (
    AvoidanceQuery,
    VerificationReport,
    verify_avoidance,
    verify_hypohamiltonian,
    verify_hypotraceable,
)

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE, EXIT_INPUT_ERROR = 0, 1, 2, 3

_VERDICT_EXIT = {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}


def _fixture(name: str) -> Graph:
    if name == "wiener-araya":
        return wiener_araya()
    if name == "petersen":
        return petersen()
    if name == "thomassen":
        w = wiener_araya()
        return thomassen_combine(CombineRecipe((w,) * 4, (cubic_pivot(w),) * 4))
    if name == "thomassen-petersen":
        p = petersen()
        return thomassen_combine(CombineRecipe((p,) * 4, (0,) * 4))
    raise ParseError(f"unknown fixture '{name}'")


def _load_graph(in_path, fixture, fmt) -> tuple[Graph, bytes]:
    if (in_path is None) == (fixture is None):
        raise ParseError("exactly one of --in and --fixture is required")
    if fixture is not None:
        g = _fixture(fixture)
        return g, write_edge_list(g).encode()
    with open(in_path, "rb") as fh:
        raw = fh.read()
    text = raw.decode("utf-8")
    if fmt is None:
        fmt = "g6" if in_path.endswith((".g6", ".graph6")) else "edges"
    g = parse_graph6(text) if fmt == "g6" else parse_edge_list(text)
    return g, raw


def _emit(payload: str, out_path) -> None:
    sys.stdout.write(payload)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(payload)


def _progress(quiet: bool):
    if quiet:
        return None
    return lambda s: print(s, file=sys.stderr, flush=True)


def _budget(node_limit, time_limit_ms):
    if node_limit is None and time_limit_ms is None:
        return None
    return SearchBudget(node_limit=node_limit, time_limit_ms=time_limit_ms)


def _report_certificate(report: VerificationReport, digest: str, t0: float) -> CertificateDocument:
    witnesses = {k: list(v) for k, v in sorted(report.subcase_witnesses.items())}
    if report.global_witness is not None:
        witnesses["graph"] = list(report.global_witness)
    return CertificateDocument(
        tool_version=TOOL_VERSION,
        input_digest=digest,
        claim=report.claim,
        verdict=report.verdict,
        witnesses=witnesses,
        runtime_ms=int((time.monotonic() - t0) * 1000),
    )


def _finish(cert: CertificateDocument, out_path) -> int:
    _emit(cert.to_json(), out_path)
    return _VERDICT_EXIT[cert.verdict]


_in_opt = click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), default=None)
_fx_opt = click.option("--fixture", default=None)
_fmt_opt = click.option("--format", "fmt", type=click.Choice(["g6", "edges"]), default=None)
_out_opt = click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None)
_quiet_opt = click.option("--quiet", is_flag=True)
_threads_opt = click.option("--threads", type=int, default=lambda: os.cpu_count() or 1)
_node_opt = click.option("--node-limit", type=int, default=None)
_time_opt = click.option("--time-limit-ms", type=int, default=None)


@click.group()
def main():
    """Exact verification of hypohamiltonian-family graph claims."""


@main.group()
def verify():
    """Run a verifier and emit its certificate."""


def _verify_common(fn, in_path, fixture, fmt, out_path, quiet, threads):
    t0 = time.monotonic()
    g, raw = _load_graph(in_path, fixture, fmt)
    report = fn(g, workers=threads, progress=_progress(quiet))
    return _finish(_report_certificate(report, input_digest(raw), t0), out_path)


@verify.command("hypohamiltonian")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
@_quiet_opt
@_threads_opt
def verify_hypohamiltonian_cmd(in_path, fixture, fmt, out_path, quiet, threads):
    sys.exit(_verify_common(verify_hypohamiltonian, in_path, fixture, fmt, out_path, quiet, threads))


@verify.command("hypotraceable")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
@_quiet_opt
@_threads_opt
def verify_hypotraceable_cmd(in_path, fixture, fmt, out_path, quiet, threads):
    sys.exit(_verify_common(verify_hypotraceable, in_path, fixture, fmt, out_path, quiet, threads))


@verify.command("avoidance")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
@_quiet_opt
@_threads_opt
@_node_opt
@_time_opt
@click.option("--j", "j", type=int, required=True)
@click.option("--kind", type=click.Choice(["cycle", "path"]), required=True)
@click.option("--k", "k", type=int, required=True)
def verify_avoidance_cmd(in_path, fixture, fmt, out_path, quiet, threads, node_limit,
                         time_limit_ms, j, kind, k):
    t0 = time.monotonic()
    g, raw = _load_graph(in_path, fixture, fmt)
    report = verify_avoidance(
        g,
        AvoidanceQuery(j=j, kind=kind, k=k),
        budget=_budget(node_limit, time_limit_ms),
        progress=_progress(quiet),
    )
    sys.exit(_finish(_report_certificate(report, input_digest(raw), t0), out_path))


@main.command("grinberg")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
@_quiet_opt
def grinberg_cmd(in_path, fixture, fmt, out_path, quiet):
    """Grinberg non-Hamiltonicity obstruction from the face-size multiset."""
    t0 = time.monotonic()
    g, raw = _load_graph(in_path, fixture, fmt)
    cert = grinberg_obstruction(g)
    witnesses = {}
    if cert is not None:
        verdict = "pass"
        witnesses["face-sizes"] = list(cert.face_sizes.sizes)
        witnesses[f"reason:{cert.reason}"] = []
    else:
        verdict = "inconclusive"
    doc = CertificateDocument(
        tool_version=TOOL_VERSION,
        input_digest=input_digest(raw),
        claim="grinberg-non-hamiltonian",
        verdict=verdict,
        witnesses=witnesses,
        runtime_ms=int((time.monotonic() - t0) * 1000),
    )
    sys.exit(_finish(doc, out_path))


@main.group()
def hamilton():
    """Exact Hamiltonian cycle / path decisions."""


def _hamilton_common(search, in_path, fixture, fmt, out_path, claim):
    t0 = time.monotonic()
    g, raw = _load_graph(in_path, fixture, fmt)
    status, w = search(g)
    verdict = {
        SearchStatus.FOUND: "pass",
        SearchStatus.REFUTED: "fail",
        SearchStatus.UNKNOWN: "inconclusive",
    }[status]
    witnesses = {} if w is None else {"witness": list(w.order)}
    doc = CertificateDocument(
        tool_version=TOOL_VERSION,
        input_digest=input_digest(raw),
        claim=claim,
        verdict=verdict,
        witnesses=witnesses,
        runtime_ms=int((time.monotonic() - t0) * 1000),
    )
    return _finish(doc, out_path)


@hamilton.command("cycle")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
def hamilton_cycle_cmd(in_path, fixture, fmt, out_path):
    sys.exit(_hamilton_common(hamiltonian_cycle, in_path, fixture, fmt, out_path, "hamiltonian-cycle"))


@hamilton.command("path")
@_in_opt
@_fx_opt
@_fmt_opt
@_out_opt
def hamilton_path_cmd(in_path, fixture, fmt, out_path):
    sys.exit(_hamilton_common(hamiltonian_path, in_path, fixture, fmt, out_path, "hamiltonian-path"))


@main.command("construct")
@click.argument("name", type=click.Choice(["wiener-araya", "petersen", "thomassen", "thomassen-petersen"]))
@_fmt_opt
@_out_opt
def construct_cmd(name, fmt, out_path):
    """Emit a named fixture graph."""
    g = _fixture(name)
    payload = write_graph6(g) + "\n" if fmt == "g6" else write_edge_list(g)
    _emit(payload, out_path)
    sys.exit(EXIT_PASS)


@main.command("convert")
@_in_opt
@click.option("--from", "fmt_in", type=click.Choice(["g6", "edges"]), default=None)
@click.option("--format", "fmt", type=click.Choice(["g6", "edges"]), default="g6")
@_out_opt
def convert_cmd(in_path, fmt_in, fmt, out_path):
    """Re-encode a graph between graph6 and edge-list formats."""
    g, _ = _load_graph(in_path, None, fmt_in)
    payload = write_graph6(g) + "\n" if fmt == "g6" else write_edge_list(g)
    _emit(payload, out_path)
    sys.exit(EXIT_PASS)


def entrypoint():
    try:
        main(standalone_mode=False)
    except click.exceptions.ClickException as exc:
        print(f"error: {exc.format_message()}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    except click.exceptions.Abort:
        sys.exit(EXIT_INPUT_ERROR)
    except (ParseError, GraphInputError, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(EXIT_INPUT_ERROR)
    except SystemExit:
        raise


if __name__ == "__main__":
    entrypoint()
