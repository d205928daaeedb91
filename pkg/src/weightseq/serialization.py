"""Structured-text file formats.

Every document is line oriented, UTF-8, newline terminated, and written
with 17 significant digits so that a write/read cycle reproduces doubles
exactly and identical inputs produce byte-identical files.  Documents open
with a magic line carrying a format version and close with ``end``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from .counterexample import BlockRecord, BuildResult, VerifyReport
from .errors import FormatError
from .intervals import Interval
from .sequences import (
    PowerTail,
    RatioTail,
    TailModel,
    Unknown,
    WeightSequence,
    _from_quotients_unchecked,
)

SEQUENCE_MAGIC = "weightseq 1"
BLOCKS_MAGIC = "weightseq-blocks 1"
REPORT_MAGIC = "weightseq-report 1"

__all__ = [
    "fmt",
    "write_sequence",
    "read_sequence",
    "write_blocks",
    "read_blocks",
    "BlocksDocument",
    "write_condition_report",
    "read_condition_report",
    "ReportDocument",
    "write_verify_report",
    "profile_csv",
    "pairs_csv",
    "triples_csv",
]


def fmt(x: float) -> str:
    """Decimal form that round-trips doubles; inf spelled so float() reads it."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{float(x):.17g}"


def _parse_float(token: str, what: str) -> float:
    try:
        value = float(token)
    except ValueError:
        raise FormatError(f"bad {what}: {token!r}")
    if math.isnan(value):
        raise FormatError(f"{what} is NaN")
    return value


def _parse_int(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(f"bad {what}: {token!r}")


class _Lines:
    def __init__(self, text: str):
        self.lines = text.split("\n")
        self.pos = 0

    def next(self) -> str:
        if self.pos >= len(self.lines):
            raise FormatError("unexpected end of document")
        line = self.lines[self.pos]
        self.pos += 1
        return line

    def expect_field(self, name: str) -> str:
        line = self.next()
        if line != name and not line.startswith(name + " "):
            raise FormatError(f"expected field {name!r}, found {line!r}")
        return line[len(name):].lstrip(" ") if len(line) > len(name) else ""

    def expect_end(self) -> None:
        if self.next() != "end":
            raise FormatError("missing end line")


# -- sequence interchange ---------------------------------------------------

def _tail_line(tail: TailModel) -> str:
    if isinstance(tail, PowerTail):
        return f"tail power {fmt(tail.c)} {fmt(tail.s)} {tail.k0}"
    if isinstance(tail, RatioTail):
        return f"tail ratio {fmt(tail.q)} {tail.k0}"
    return "tail unknown"


def _parse_tail(rest: str) -> TailModel:
    parts = rest.split()
    if not parts:
        raise FormatError("empty tail field")
    kind = parts[0]
    if kind == "unknown":
        if len(parts) != 1:
            raise FormatError("tail unknown takes no parameters")
        return Unknown
    if kind == "power":
        if len(parts) != 4:
            raise FormatError("tail power needs c, s, k0")
        return PowerTail(_parse_float(parts[1], "tail c"),
                         _parse_float(parts[2], "tail s"),
                         _parse_int(parts[3], "tail k0"))
    if kind == "ratio":
        if len(parts) != 3:
            raise FormatError("tail ratio needs q, k0")
        return RatioTail(_parse_float(parts[1], "tail q"),
                         _parse_int(parts[2], "tail k0"))
    raise FormatError(f"unknown tail kind {kind!r}")


def write_sequence(W: WeightSequence) -> str:
    out = [SEQUENCE_MAGIC,
           f"label {W.label}".rstrip(),
           f"horizon {W.horizon}",
           _tail_line(W.tail),
           f"log_quotients {W.horizon}"]
    out.extend(fmt(v) for v in W.log_quotients)
    out.append("end")
    return "\n".join(out) + "\n"


def read_sequence(text: str) -> WeightSequence:
    """Parse an interchange document.

    Normalization is a property of the sequence, not of the file, so
    non-normalized sequences (optimal-sequence outputs) load fine; tail
    consistency and finiteness are still enforced.
    """
    doc = _Lines(text)
    if doc.next() != SEQUENCE_MAGIC:
        raise FormatError("not a sequence interchange document")
    label = doc.expect_field("label")
    horizon = _parse_int(doc.expect_field("horizon"), "horizon")
    if horizon < 1:
        raise FormatError("horizon must be positive")
    tail = _parse_tail(doc.expect_field("tail"))
    count = _parse_int(doc.expect_field("log_quotients"), "quotient count")
    if count != horizon:
        raise FormatError(f"quotient count {count} != horizon {horizon}")
    values = np.empty(count, dtype=np.float64)
    for i in range(count):
        values[i] = _parse_float(doc.next(), f"log quotient {i + 1}")
    doc.expect_end()
    try:
        return _from_quotients_unchecked(values, tail, label)
    except FormatError:
        raise
    except Exception as exc:
        raise FormatError(f"invalid sequence data: {exc}")


# -- counterexample blocks --------------------------------------------------

@dataclass(frozen=True)
class BlocksDocument:
    requested: int
    halted: bool
    halt_reason: str
    blocks: Tuple[BlockRecord, ...]


def write_blocks(result: Union[BuildResult, BlocksDocument]) -> str:
    out = [BLOCKS_MAGIC,
           f"requested {result.requested}",
           f"halted {1 if result.halted else 0}",
           f"halt_reason {result.halt_reason}".rstrip(),
           f"count {len(result.blocks)}"]
    for blk in result.blocks:
        out.append(f"block {blk.i}")
        out.append(f"p {blk.p}")
        out.append(f"q {blk.q}")
        out.append(f"a {fmt(blk.a)}")
        out.append(f"b {fmt(blk.b)}")
        out.append(f"log_C {fmt(blk.log_C)}")
        out.append(f"log_A {fmt(blk.log_A)}")
        out.append(f"log_nu_inner {fmt(blk.log_nu_inner)}")
        out.append(f"log_nu_outer {fmt(blk.log_nu_outer)}")
        out.append("p_next none" if blk.p_next is None else f"p_next {blk.p_next}")
    out.append("end")
    return "\n".join(out) + "\n"


def read_blocks(text: str) -> BlocksDocument:
    doc = _Lines(text)
    if doc.next() != BLOCKS_MAGIC:
        raise FormatError("not a blocks document")
    requested = _parse_int(doc.expect_field("requested"), "requested")
    halted = _parse_int(doc.expect_field("halted"), "halted flag") != 0
    halt_reason = doc.expect_field("halt_reason")
    count = _parse_int(doc.expect_field("count"), "block count")
    blocks = []
    for _ in range(count):
        i = _parse_int(doc.expect_field("block"), "block index")
        p = _parse_int(doc.expect_field("p"), "p")
        q = _parse_int(doc.expect_field("q"), "q")
        a = _parse_float(doc.expect_field("a"), "a")
        b = _parse_float(doc.expect_field("b"), "b")
        log_C = _parse_float(doc.expect_field("log_C"), "log_C")
        log_A = _parse_float(doc.expect_field("log_A"), "log_A")
        inner = _parse_float(doc.expect_field("log_nu_inner"), "log_nu_inner")
        outer = _parse_float(doc.expect_field("log_nu_outer"), "log_nu_outer")
        pn_txt = doc.expect_field("p_next")
        p_next = None if pn_txt == "none" else _parse_int(pn_txt, "p_next")
        A = math.exp(log_A) if log_A < 700.0 else math.inf
        blocks.append(BlockRecord(i, p, q, a, b, math.exp(log_C), A, log_A,
                                  log_C, inner, outer, p_next))
    doc.expect_end()
    return BlocksDocument(requested, halted, halt_reason, tuple(blocks))


# -- condition reports ------------------------------------------------------

@dataclass(frozen=True)
class ReportDocument:
    """Parsed condition report: enough to re-render or plot it."""

    name: str
    state: str
    bound: Optional[Interval]
    witness: Optional[int]
    reason: str
    witnesses: Tuple[int, ...]
    profile: Tuple[Tuple[int, Interval], ...]


def write_condition_report(name: str, state: str, bound: Optional[Interval],
                           witness: Optional[int], reason: str,
                           witnesses: Sequence[int],
                           profile: Sequence[Tuple[int, Interval]],
                           extra: Sequence[str] = ()) -> str:
    out = [REPORT_MAGIC,
           f"name {name}",
           f"state {state}",
           "bound none" if bound is None else f"bound {fmt(bound.lo)} {fmt(bound.hi)}",
           "witness none" if witness is None else f"witness {witness}",
           f"reason {reason}".rstrip(),
           "witnesses " + " ".join(str(w) for w in witnesses)
           if witnesses else "witnesses"]
    out.extend(extra)
    out.append(f"profile {len(profile)}")
    for p, iv in profile:
        out.append(f"{p} {fmt(iv.lo)} {fmt(iv.hi)}")
    out.append("end")
    return "\n".join(out) + "\n"


def read_condition_report(text: str) -> ReportDocument:
    doc = _Lines(text)
    if doc.next() != REPORT_MAGIC:
        raise FormatError("not a condition report document")
    name = doc.expect_field("name")
    state = doc.expect_field("state")
    if state not in ("Holds", "Fails", "Inconclusive"):
        raise FormatError(f"unknown verdict state {state!r}")
    bound_txt = doc.expect_field("bound")
    if bound_txt == "none":
        bound = None
    else:
        parts = bound_txt.split()
        if len(parts) != 2:
            raise FormatError("bound needs two endpoints")
        bound = Interval(_parse_float(parts[0], "bound lo"),
                         _parse_float(parts[1], "bound hi"))
    wit_txt = doc.expect_field("witness")
    witness = None if wit_txt == "none" else _parse_int(wit_txt, "witness")
    reason = doc.expect_field("reason")
    wlist = doc.expect_field("witnesses")
    witnesses = tuple(_parse_int(tok, "witness entry") for tok in wlist.split())
    # tolerate emitter-specific extra fields between header and profile
    line = doc.next()
    while not line.startswith("profile "):
        line = doc.next()
    count = _parse_int(line[len("profile "):], "profile count")
    profile = []
    for _ in range(count):
        parts = doc.next().split()
        if len(parts) != 3:
            raise FormatError("profile rows are 'p lo hi'")
        profile.append((_parse_int(parts[0], "profile index"),
                        Interval(_parse_float(parts[1], "profile lo"),
                                 _parse_float(parts[2], "profile hi"))))
    doc.expect_end()
    return ReportDocument(name, state, bound, witness, reason, witnesses,
                          tuple(profile))


# -- counterexample verification report (emitted only) ----------------------

def _opt(x: Optional[float]) -> str:
    return "none" if x is None else fmt(x)


def _opt_iv(iv: Optional[Interval]) -> str:
    return "none" if iv is None else f"{fmt(iv.lo)} {fmt(iv.hi)}"


def _flag(x: Optional[bool]) -> str:
    if x is None:
        return "none"
    return "ok" if x else "fail"


def write_verify_report(report: VerifyReport) -> str:
    out = ["weightseq-verify 1",
           f"blocks {len(report.blocks)}",
           f"continuation_rest {fmt(report.continuation_rest)}"]
    for chk in report.blocks:
        out.append(f"block {chk.i}")
        out.append(f"c_floor_log {fmt(chk.c_floor_log)}")
        out.append(f"profile_I {_opt_iv(chk.profile_I)}")
        out.append(f"profile_I_required {1 if chk.profile_I_required else 0}")
        out.append(f"profile_II {_opt(chk.profile_II)}")
        out.append(f"ansatz_rel_err {fmt(chk.ansatz_rel_err)}")
        out.append(f"junction {_flag(chk.junction_ok)}")
        out.append(f"alpha {fmt(chk.alpha)} {_flag(chk.alpha_target_ok)}")
        out.append(f"beta {_opt(chk.beta)} {_flag(chk.beta_target_ok)}")
        out.append(f"v_p {_opt_iv(chk.v_p)}")
        out.append(f"v_q {_opt_iv(chk.v_q)}")
        out.append(f"d_p {_opt_iv(chk.d_p)}")
        out.append(f"d_q {_opt_iv(chk.d_q)}")
        out.append(f"d_excess_lo {_opt(chk.d_excess_lo)}")
        out.append(f"drop_lo {_opt(chk.drop_lo)}")
        out.append(f"log_ratio {fmt(chk.log_ratio)}")
        out.append(f"A_at_least_one {1 if chk.A_at_least_one else 0}")
    out.append(f"defects {len(report.defect_through_block)}")
    for idx, iv in enumerate(report.defect_through_block, start=1):
        out.append(f"{idx} {_opt_iv(iv)}")
    out.append(f"notes {len(report.notes)}")
    out.extend(report.notes)
    out.append("end")
    return "\n".join(out) + "\n"


# -- CSV helpers ------------------------------------------------------------

def profile_csv(profile: Iterable[Tuple[int, Interval]]) -> str:
    rows = ["p,lo,hi"]
    for p, iv in profile:
        rows.append(f"{p},{fmt(iv.lo)},{fmt(iv.hi)}")
    return "\n".join(rows) + "\n"


def pairs_csv(header: Tuple[str, str],
              pairs: Iterable[Tuple[float, float]]) -> str:
    rows = [f"{header[0]},{header[1]}"]
    for x, y in pairs:
        rows.append(f"{fmt(x)},{fmt(y)}")
    return "\n".join(rows) + "\n"


def triples_csv(header: Tuple[str, str, str],
                triples: Iterable[Tuple[float, float, float]]) -> str:
    rows = [",".join(header)]
    for x, lo, hi in triples:
        rows.append(f"{fmt(x)},{fmt(lo)},{fmt(hi)}")
    return "\n".join(rows) + "\n"
