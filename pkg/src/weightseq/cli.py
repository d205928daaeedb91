"""Command line surface.

Subcommands: construct, check, compare, counterexample, report.  Inputs are
interchange files or builtin family specs (``gevrey:s:H``,
``power-tail:c:s:H``).  All outputs are structured text or CSV, written with
17 significant digits; identical invocations produce byte-identical files.

Exit codes: 0 success; 2 precondition violated; 3 I/O or format error;
4 verification failed; 5 overflow halt with partial results emitted.
Errors print a machine-readable record to stderr.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .conditions import (
    almost_increasing_defect,
    check_SV,
    check_SV_ramified,
    check_gamma1,
    check_mg,
    check_mixed_gamma1,
    check_mixed_gamma_r,
    preceq_defect,
)
from .constructions import (
    descendant,
    log_convex_minorant,
    modified_descendant,
    optimal_sequence,
    ramified_descendant,
    ramified_optimal,
    ramified_root,
)
from .counterexample import build_counterexample, verify_blocks
from .errors import (
    BeyondHorizon,
    FormatError,
    HorizonTooSmall,
    NonFinite,
    NotLogConvex,
    NotNormalized,
    OverflowHalt,
    Quasianalytic,
    RemainderUnbounded,
    ScheduleInvalid,
    TailMismatch,
    TailRequired,
    TailUnknown,
    TruncationTooSmall,
    VerificationFailed,
)
from .intervals import Interval
from .sequences import (
    MIN_HORIZON,
    WeightSequence,
    _from_quotients_unchecked,
    Unknown,
    check_LC,
    gevrey,
    log_factorial,
    power_quotient_family,
)
from .serialization import (
    fmt,
    pairs_csv,
    profile_csv,
    read_blocks,
    read_condition_report,
    read_sequence,
    triples_csv,
    write_blocks,
    write_condition_report,
    write_sequence,
    write_verify_report,
)
from .tails import is_nonquasianalytic
from .weights import default_t_grid, kappa, omega, theta_jet

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_IO = 3
EXIT_VERIFICATION = 4
EXIT_OVERFLOW = 5

_PRECONDITION_ERRORS = (
    NotNormalized,
    NotLogConvex,
    Quasianalytic,
    TailUnknown,
    TailRequired,
    TailMismatch,
    NonFinite,
    ScheduleInvalid,
    HorizonTooSmall,
    RemainderUnbounded,
    TruncationTooSmall,
    BeyondHorizon,
    ValueError,
)

_CONDITIONS = ("nq", "gamma1", "mg", "lc", "sv", "mixed-gamma1", "sv-r",
               "gamma-r", "snq-weights", "preceq")
_PAIR_CONDITIONS = ("sv", "mixed-gamma1", "sv-r", "gamma-r", "snq-weights",
                    "preceq")
_CONSTRUCT_WHAT = ("descendant", "modified-descendant", "optimal", "minorant",
                   "ramified-root", "ramified-optimal", "ramified-descendant")
_REPORT_WHAT = ("omega", "kappa", "jet")


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation: one command plus everything it may consume."""

    command: str
    inputs: Tuple[str, ...] = ()
    source: Optional[str] = None
    second: Optional[str] = None
    horizon: Optional[int] = None
    s: int = 1
    C: float = 1.0
    r: int = 2
    t_grid: Optional[str] = None
    out: Optional[str] = None
    fmt: str = "structured-text"
    what: Optional[str] = None
    cond: Optional[str] = None
    blocks: int = 2
    seed: Tuple[int, int] = (3, 5)
    max_index: int = 2_000_000
    pmax: int = 0
    j: int = 0
    K: Optional[int] = None
    verify: Optional[str] = None

    def __post_init__(self):
        if self.horizon is not None and self.horizon < MIN_HORIZON:
            raise ValueError(f"horizon must be at least {MIN_HORIZON}")
        if self.s < 1:
            raise ValueError("s must be a positive integer")
        if self.r < 1:
            raise ValueError("r must be a positive integer")
        if self.C < 1.0:
            raise ValueError("C must be at least 1")
        if self.fmt not in ("structured-text", "csv"):
            raise ValueError(f"unknown output format {self.fmt!r}")


def _thread_count() -> int:
    raw = os.environ.get("WEIGHTSEQ_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        n = 1
    return max(1, n)


def _map_ordered(fn: Callable, items: Sequence) -> list:
    n = _thread_count()
    if n <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


def _load_spec(spec: str, horizon: Optional[int]) -> WeightSequence:
    """Builtin family spec or interchange file path."""
    head = spec.split(":", 1)[0]
    if head == "gevrey":
        parts = spec.split(":")
        if len(parts) not in (2, 3):
            raise ValueError(f"family spec {spec!r}: want gevrey:s[:H]")
        s = float(parts[1])
        H = int(parts[2]) if len(parts) == 3 else (horizon or 64)
        return gevrey(s, H)
    if head == "power-tail":
        parts = spec.split(":")
        if len(parts) not in (3, 4):
            raise ValueError(
                f"family spec {spec!r}: want power-tail:c:s[:H]")
        c = float(parts[1])
        s = float(parts[2])
        H = int(parts[3]) if len(parts) == 4 else (horizon or 64)
        return power_quotient_family(c, s, H)
    with open(spec, "r", encoding="utf-8") as fh:
        return read_sequence(fh.read())


def _parse_t_grid(spec: Optional[str], W: WeightSequence) -> np.ndarray:
    if spec is None:
        return default_t_grid(W)
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"t-grid spec {spec!r}: want min:max:count")
    lo = float(parts[0])
    hi = float(parts[1])
    n = int(parts[2])
    if not (0.0 < lo < hi) or n < 2:
        raise ValueError("t-grid needs 0 < min < max and count >= 2")
    return np.exp(np.linspace(math.log(lo), math.log(hi), n))


def _emit(cfg: RunConfig, text: str, filename: Optional[str] = None) -> None:
    """Write to --out (a directory when filename given, else a file path),
    or to stdout."""
    if cfg.out is None:
        sys.stdout.write(text)
        return
    if filename:
        os.makedirs(cfg.out, exist_ok=True)
        path = os.path.join(cfg.out, filename)
    else:
        path = cfg.out
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _error_record(code: int, exc: BaseException,
                  extra: Sequence[str] = ()) -> int:
    lines = [f"error {code} {type(exc).__name__}",
             f"message {exc}"]
    lines.extend(extra)
    sys.stderr.write("\n".join(lines) + "\n")
    return code


# -- construct --------------------------------------------------------------

def _construction_header(what: str, W: WeightSequence) -> list:
    return ["weightseq-construction 1",
            f"what {what}",
            f"source {W.label}".rstrip(),
            f"horizon {W.horizon}"]


def cmd_construct(cfg: RunConfig) -> int:
    W = _load_spec(cfg.source, cfg.horizon)
    what = cfg.what
    if what == "descendant":
        res = descendant(W)
        seq = res.sequence
        side = _construction_header(what, W)
        side.append(f"tau1 {fmt(res.tau1.lo)} {fmt(res.tau1.hi)}")
        side.append(f"tau {len(res.tau)}")
        for p, iv in enumerate(res.tau, start=1):
            side.append(f"{p} {fmt(iv.lo)} {fmt(iv.hi)}")
        side.append(f"sigma_over_p2 {seq.horizon}")
        for p in range(1, seq.horizon + 1):
            val = math.exp(float(seq.log_quotients[p - 1]) - 2.0 * math.log(p))
            side.append(f"{p} {fmt(val)}")
        side.append("end")
    elif what == "modified-descendant":
        seq = modified_descendant(W)
        side = _construction_header(what, W)
        side.append(f"label {seq.label}")
        side.append("end")
    elif what == "optimal":
        res = optimal_sequence(W, cfg.s, cfg.C)
        seq = res.sequence
        side = _construction_header(what, W)
        side.append(f"s {res.s}")
        side.append(f"C {fmt(res.C)}")
        side.append(f"argmin {seq.horizon}")
        for p in range(1, seq.horizon + 1):
            side.append(f"{p} {int(res.argmin[p])}")
        side.append("end")
    elif what == "minorant":
        res = log_convex_minorant(W, cfg.pmax)
        quotients = np.diff(res.log_terms)
        if quotients.shape[0] < MIN_HORIZON:
            raise ValueError(
                f"minorant over {quotients.shape[0]} indices is below the "
                f"minimum horizon {MIN_HORIZON}")
        seq = _from_quotients_unchecked(quotients, Unknown,
                                        f"minorant({W.label})")
        side = _construction_header(what, W)
        side.append("vertices " + " ".join(str(v) for v in res.vertices))
        side.append("boundary " + " ".join(str(b) for b in res.boundary))
        side.append(f"log_terms {res.log_terms.shape[0]}")
        for p, val in enumerate(res.log_terms):
            side.append(f"{p} {fmt(float(val))}")
        side.append("end")
    elif what == "ramified-root":
        seq = ramified_root(W, float(cfg.r))
        side = _construction_header(what, W)
        side.append(f"r {cfg.r}")
        side.append("end")
    elif what == "ramified-optimal":
        seq = ramified_optimal(W, float(cfg.r), cfg.s)
        side = _construction_header(what, W)
        side.append(f"r {cfg.r}")
        side.append(f"s {cfg.s}")
        side.append("end")
    elif what == "ramified-descendant":
        seq = ramified_descendant(W, float(cfg.r))
        side = _construction_header(what, W)
        side.append(f"r {cfg.r}")
        side.append("end")
    else:
        raise ValueError(f"unknown construction {what!r}")
    _emit(cfg, write_sequence(seq), f"{what}.seq.txt")
    _emit(cfg, "\n".join(side) + "\n", f"{what}.report.txt")
    return EXIT_OK


# -- check ------------------------------------------------------------------

def _verdict_fields(report) -> tuple:
    v = report.verdict
    return (report.name, v.state.value, v.bound, v.witness, v.reason,
            report.witnesses, report.profile)


def cmd_check(cfg: RunConfig) -> int:
    cond = cfg.cond
    if cond in _PAIR_CONDITIONS:
        M = _load_spec(cfg.source, cfg.horizon)
        N = _load_spec(cfg.second, cfg.horizon)
    else:
        M = _load_spec(cfg.source, cfg.horizon)
        N = None

    if cond == "nq":
        verdict = is_nonquasianalytic(M)
        bound = verdict.bound if verdict.bound is not None \
            else Interval(0.0, math.inf)
        doc = write_condition_report("nq", verdict.state.value, bound,
                                     verdict.witness, verdict.reason, (), ())
        profile = ()
    elif cond == "lc":
        rep = check_LC(M)
        ok = rep.normalized and rep.log_convex_defect <= 1e-12
        doc = write_condition_report(
            "lc", "Holds" if ok else "Fails",
            Interval.point(rep.log_convex_defect), None,
            "largest drop between consecutive log quotients",
            (), (),
            extra=(f"normalized {1 if rep.normalized else 0}",
                   f"roots_increasing_to {fmt(rep.roots_increasing_to)}"))
        profile = ()
    elif cond == "gamma1":
        rep = check_gamma1(M)
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "mg":
        rep = check_mg(M)
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "sv":
        rep = check_SV(M, N, cfg.s)
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "mixed-gamma1":
        rep = check_mixed_gamma1(M, N)
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "sv-r":
        rep = check_SV_ramified(M, N, float(cfg.r), cfg.s)
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "gamma-r":
        rep = check_mixed_gamma_r(M, N, float(cfg.r))
        doc = write_condition_report(*_verdict_fields(rep))
        profile = rep.profile
    elif cond == "snq-weights":
        from .weights import check_snq
        grid = _parse_t_grid(cfg.t_grid, N)
        rep = check_snq(M, N, grid)
        if cfg.fmt == "csv":
            _emit(cfg, triples_csv(("t", "lo", "hi"),
                                   [(float(t), iv.lo, iv.hi)
                                    for t, iv in zip(rep.t_grid, rep.profile)]))
            return EXIT_OK
        lines = ["weightseq-report 1",
                 f"name {rep.name}",
                 f"state {rep.verdict.state.value}",
                 f"bound {fmt(rep.running_sup.lo)} {fmt(rep.running_sup.hi)}",
                 f"reason {rep.verdict.reason}".rstrip(),
                 f"samples {len(rep.profile)}"]
        for t, iv in zip(rep.t_grid, rep.profile):
            lines.append(f"{fmt(float(t))} {fmt(iv.lo)} {fmt(iv.hi)}")
        lines.append("end")
        _emit(cfg, "\n".join(lines) + "\n")
        return EXIT_OK
    elif cond == "preceq":
        res = preceq_defect(M, N)
        P = min(M.horizon, N.horizon)
        ps = np.arange(1, P + 1)
        gaps = (M.log_terms()[1:P + 1] - N.log_terms()[1:P + 1]) / ps
        profile = tuple((int(p), Interval.point(float(g)))
                        for p, g in zip(ps, gaps))
        doc = write_condition_report(
            "preceq", "Holds", Interval.point(res.defect), res.argmax,
            "smallest log C with M_p <= C^p N_p on the common range",
            (res.argmax,), profile)
    else:
        raise ValueError(f"unknown condition {cond!r}")

    if cfg.fmt == "csv":
        _emit(cfg, profile_csv(profile))
    else:
        _emit(cfg, doc)
    return EXIT_OK


# -- compare ----------------------------------------------------------------

def _trend(gaps: np.ndarray) -> str:
    half = gaps.shape[0] // 2
    first = float(np.max(gaps[:half])) if half else float(gaps[0])
    second = float(np.max(gaps[half:]))
    if second > first + 1e-9:
        return "rising"
    if second < first - 1e-9:
        return "falling"
    return "steady"


def cmd_compare(cfg: RunConfig) -> int:
    M = _load_spec(cfg.source, cfg.horizon)
    N = _load_spec(cfg.second, cfg.horizon)
    P = min(M.horizon, N.horizon)
    ps = np.arange(1, P + 1)
    gaps = (M.log_terms()[1:P + 1] - N.log_terms()[1:P + 1]) / ps

    if cfg.fmt == "csv":
        _emit(cfg, pairs_csv(("p", "log_root_diff"),
                             [(int(p), float(g)) for p, g in zip(ps, gaps)]))
        return EXIT_OK

    d_mn = preceq_defect(M, N)
    d_nm = preceq_defect(N, M)
    m_roots = [(M.log_terms()[p] - log_factorial(p)) / p for p in range(1, P + 1)]
    n_roots = [(N.log_terms()[p] - log_factorial(p)) / p for p in range(1, P + 1)]
    ai_m = almost_increasing_defect(m_roots)
    ai_n = almost_increasing_defect(n_roots)
    lines = ["weightseq-compare 1",
             f"first {M.label}".rstrip(),
             f"second {N.label}".rstrip(),
             f"common_horizon {P}",
             f"defect_first_over_second {fmt(d_mn.defect)} at {d_mn.argmax}",
             f"defect_second_over_first {fmt(d_nm.defect)} at {d_nm.argmax}",
             f"trend_first_over_second {_trend(gaps)}",
             f"trend_second_over_first {_trend(-gaps)}",
             f"almost_increasing_first {fmt(ai_m.defect)} "
             f"pair {ai_m.pair[0]} {ai_m.pair[1]}",
             f"almost_increasing_second {fmt(ai_n.defect)} "
             f"pair {ai_n.pair[0]} {ai_n.pair[1]}",
             "end"]
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


# -- counterexample ---------------------------------------------------------

def cmd_counterexample(cfg: RunConfig) -> int:
    if cfg.verify is not None:
        with open(cfg.verify, "r", encoding="utf-8") as fh:
            doc = read_blocks(fh.read())
        with open(cfg.source, "r", encoding="utf-8") as fh:
            seq = read_sequence(fh.read())
        try:
            report = verify_blocks(seq, doc.blocks)
        except VerificationFailed as exc:
            return _error_record(EXIT_VERIFICATION, exc,
                                 (f"block {exc.block}", f"which {exc.which}"))
        _emit(cfg, write_verify_report(report), "counterexample.verify.txt")
        return EXIT_OK

    try:
        result = build_counterexample(cfg.blocks, seed=cfg.seed,
                                      max_index=cfg.max_index)
    except OverflowHalt as exc:
        partial = exc.partial
        if partial is not None:
            _emit(cfg, write_sequence(partial.sequence),
                  "counterexample.seq.txt")
            _emit(cfg, write_blocks(partial), "counterexample.blocks.txt")
        return _error_record(EXIT_OVERFLOW, exc)
    _emit(cfg, write_sequence(result.sequence), "counterexample.seq.txt")
    _emit(cfg, write_blocks(result), "counterexample.blocks.txt")
    try:
        report = verify_blocks(result.sequence, result.blocks)
    except VerificationFailed as exc:
        return _error_record(EXIT_VERIFICATION, exc,
                             (f"block {exc.block}", f"which {exc.which}"))
    _emit(cfg, write_verify_report(report), "counterexample.verify.txt")
    return EXIT_OK


# -- report -----------------------------------------------------------------

def cmd_report(cfg: RunConfig) -> int:
    if cfg.source is not None and cfg.what is None:
        with open(cfg.source, "r", encoding="utf-8") as fh:
            doc = read_condition_report(fh.read())
        if cfg.fmt == "csv":
            _emit(cfg, profile_csv(doc.profile))
        else:
            _emit(cfg, write_condition_report(
                doc.name, doc.state, doc.bound, doc.witness, doc.reason,
                doc.witnesses, doc.profile))
        return EXIT_OK

    W = _load_spec(cfg.source, cfg.horizon)
    what = cfg.what
    if what == "omega":
        grid = _parse_t_grid(cfg.t_grid, W)
        values = _map_ordered(lambda t: omega(W, float(t)), list(grid))
        if cfg.fmt == "csv":
            _emit(cfg, pairs_csv(("t", "omega"),
                                 list(zip(map(float, grid), values))))
        else:
            lines = ["weightseq-samples 1", f"source {W.label}".rstrip(),
                     "kind omega", f"samples {len(values)}"]
            lines.extend(f"{fmt(float(t))} {fmt(v)}"
                         for t, v in zip(grid, values))
            lines.append("end")
            _emit(cfg, "\n".join(lines) + "\n")
        return EXIT_OK
    if what == "kappa":
        grid = _parse_t_grid(cfg.t_grid, W)
        enclosures = _map_ordered(lambda t: kappa(W, float(t)), list(grid))
        if cfg.fmt == "csv":
            _emit(cfg, triples_csv(("t", "lo", "hi"),
                                   [(float(t), iv.lo, iv.hi)
                                    for t, iv in zip(grid, enclosures)]))
        else:
            lines = ["weightseq-samples 1", f"source {W.label}".rstrip(),
                     "kind kappa", f"samples {len(grid)}"]
            lines.extend(f"{fmt(float(t))} {fmt(iv.lo)} {fmt(iv.hi)}"
                         for t, iv in zip(grid, enclosures))
            lines.append("end")
            _emit(cfg, "\n".join(lines) + "\n")
        return EXIT_OK
    if what == "jet":
        K = cfg.K if cfg.K is not None else cfg.j + 40
        enc = theta_jet(W, cfg.j, K)
        lines = ["weightseq-samples 1", f"source {W.label}".rstrip(),
                 "kind jet",
                 f"jet {cfg.j} {K} {fmt(enc.lo)} {fmt(enc.hi)}", "end"]
        _emit(cfg, "\n".join(lines) + "\n")
        return EXIT_OK
    raise ValueError(f"unknown report kind {what!r}")


# -- entry point ------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weightseq",
        description="Weight sequence constructions, condition checks, and "
                    "counterexample generation.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, out_default=None):
        p.add_argument("--out", default=out_default,
                       help="output file, or directory for multi-file "
                            "commands (default: stdout)")
        p.add_argument("--format", dest="fmt", default="structured-text",
                       choices=("structured-text", "csv"))
        p.add_argument("--horizon", type=int, default=None)

    p = sub.add_parser("construct", help="build derived sequences")
    p.add_argument("--family", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--what", required=True, choices=_CONSTRUCT_WHAT)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--C", type=float, default=1.0)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--pmax", type=int, default=0)
    add_common(p, out_default=".")

    p = sub.add_parser("check", help="run a condition check")
    p.add_argument("--cond", required=True, choices=_CONDITIONS)
    p.add_argument("--family", default=None)
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--M", dest="m_spec", default=None)
    p.add_argument("--N", dest="n_spec", default=None)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--t-grid", dest="t_grid", default=None)
    add_common(p)

    p = sub.add_parser("compare", help="directed defects between two sequences")
    p.add_argument("--M", dest="m_spec", required=True)
    p.add_argument("--N", dest="n_spec", required=True)
    add_common(p)

    p = sub.add_parser("counterexample",
                       help="generate or verify the block construction")
    p.add_argument("--blocks", type=int, default=2)
    p.add_argument("--seed", default="3,5",
                   help="p1,q1 with p1 > 2 and q1 >= 2 p1 - 1")
    p.add_argument("--max-index", dest="max_index", type=int,
                   default=2_000_000)
    p.add_argument("--verify", default=None,
                   help="blocks document to verify instead of generating")
    p.add_argument("--sequence", default=None,
                   help="interchange file accompanying --verify")
    add_common(p, out_default=".")

    p = sub.add_parser("report", help="render reports and weight-function data")
    p.add_argument("--in", dest="infile", default=None,
                   help="condition report document to render")
    p.add_argument("--family", default=None)
    p.add_argument("--what", default=None, choices=_REPORT_WHAT)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--K", type=int, default=None)
    p.add_argument("--t-grid", dest="t_grid", default=None)
    add_common(p)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    source = None
    second = None
    if command == "construct":
        source = args.family or args.infile
        if source is None:
            raise ValueError("construct needs --family or --in")
    elif command == "check":
        if args.cond in _PAIR_CONDITIONS:
            source = args.m_spec
            second = args.n_spec
            if source is None or second is None:
                raise ValueError(f"--cond {args.cond} needs --M and --N")
        else:
            source = args.family or args.infile or args.m_spec
            if source is None:
                raise ValueError("check needs --family or --in")
    elif command == "compare":
        source = args.m_spec
        second = args.n_spec
    elif command == "counterexample":
        if args.verify is not None:
            if args.sequence is None:
                raise ValueError("--verify needs --sequence")
            source = args.sequence
    elif command == "report":
        source = args.infile or args.family
        if source is None:
            raise ValueError("report needs --in or --family")
        if args.infile is None and args.what is None:
            raise ValueError("report on a family needs --what")

    seed = (3, 5)
    if command == "counterexample":
        parts = str(args.seed).split(",")
        if len(parts) != 2:
            raise ValueError("seed must be 'p1,q1'")
        seed = (int(parts[0]), int(parts[1]))

    return RunConfig(
        command=command,
        source=source,
        second=second,
        horizon=args.horizon,
        s=getattr(args, "s", 1),
        C=getattr(args, "C", 1.0),
        r=getattr(args, "r", 2),
        t_grid=getattr(args, "t_grid", None),
        out=args.out,
        fmt=args.fmt,
        what=getattr(args, "what", None),
        cond=getattr(args, "cond", None),
        blocks=getattr(args, "blocks", 2),
        seed=seed,
        max_index=getattr(args, "max_index", 2_000_000),
        pmax=getattr(args, "pmax", 0),
        j=getattr(args, "j", 0),
        K=getattr(args, "K", None),
        verify=getattr(args, "verify", None),
    )


_DISPATCH = {
    "construct": cmd_construct,
    "check": cmd_check,
    "compare": cmd_compare,
    "counterexample": cmd_counterexample,
    "report": cmd_report,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
    except _PRECONDITION_ERRORS as exc:
        return _error_record(EXIT_PRECONDITION, exc)
    try:
        return _DISPATCH[cfg.command](cfg)
    except FormatError as exc:
        return _error_record(EXIT_IO, exc)
    except OSError as exc:
        return _error_record(EXIT_IO, exc)
    except VerificationFailed as exc:
        return _error_record(EXIT_VERIFICATION, exc,
                             (f"block {exc.block}", f"which {exc.which}"))
    except OverflowHalt as exc:
        return _error_record(EXIT_OVERFLOW, exc)
    except _PRECONDITION_ERRORS as exc:
        return _error_record(EXIT_PRECONDITION, exc)


if __name__ == "__main__":
    sys.exit(main())
