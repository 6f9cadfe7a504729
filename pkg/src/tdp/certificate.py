"""JSON certificates for the check / color / exact commands, and their verifier.

Every flag under ``checks`` is recomputed from the graph when the certificate
is assembled, and again from scratch by :func:`verify_certificate`.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from typing import Any

from . import __version__
from .coloring import Color, to_letters, two_coupon_color, verify_coupon, verify_total_dominating
from .graph import Graph, is_cubic, serialize_graph6
from .motif import LWitness, find_l_witness
from .oracle import BudgetExhausted, coupon_search, total_domatic_number
from .partition import Partition, f_partition, validate_partition

FORMAT = "tdp-cert/1"
TIME_FIELDS = ("time_ms",)

# exit codes shared with the CLI
OK, INPUT_ERROR, NEGATIVE, UNDECIDED = 0, 1, 2, 3


def input_descriptor(g: Graph) -> dict:
    g6 = serialize_graph6(g)
    return {
        "n": g.n,
        "m": g.m,
        "graph6": g6,
        "sha256": hashlib.sha256(g6.encode("ascii")).hexdigest(),
        "edges": [list(e) for e in g.edges()],
    }


def _skeleton(g: Graph, mode: str, seed: int | None) -> dict:
    return {
        "format": FORMAT,
        "tool_version": __version__,
        "mode": mode,
        "seed": seed,
        "input": input_descriptor(g),
        "derivation": None,
        "l_witness": None,
        "partition": None,
        "coloring": None,
        "checks": {"cubic": None, "l_free": None, "partition_valid": None, "coupon_valid": None},
        "oracle": None,
    }


@dataclass
class Outcome:
    certificate: dict
    exit_code: int
    message: str = ""


def _structure(g: Graph, cert: dict) -> LWitness | None:
    cubic = is_cubic(g)
    cert["checks"]["cubic"] = cubic
    if not cubic:
        return None
    w = find_l_witness(g)
    cert["checks"]["l_free"] = w is None
    if w is not None:
        cert["l_witness"] = w.to_json()
    return w


def check(g: Graph, seed: int | None = None) -> Outcome:
    cert = _skeleton(g, "check", seed)
    w = _structure(g, cert)
    if not cert["checks"]["cubic"]:
        return Outcome(cert, INPUT_ERROR, "graph is not cubic")
    if w is not None:
        return Outcome(cert, NEGATIVE, f"L found at vertex {w.center}")
    return Outcome(cert, OK, "cubic and L-free")


def _oracle_fields(query: str, d_t, at_least: int, proven: bool, nodes: int, elapsed: float, witness=None) -> dict:
    return {
        "query": query,
        "d_t": d_t,
        "d_t_at_least": at_least,
        "proven": proven,
        "nodes": nodes,
        "time_ms": round(elapsed * 1000, 3),
        "witness": witness,
    }


def color(g: Graph, seed: int | None = None, budget: int | None = None) -> Outcome:
    """Construct a 2-coupon colouring, falling back to exact search when the
    construction does not apply (non-cubic input or a copy of L)."""
    cert = _skeleton(g, "color", seed)
    w = _structure(g, cert)
    if cert["checks"]["cubic"] and w is None:
        part = f_partition(g)
        cols = two_coupon_color(g, part)
        cert["derivation"] = "construction"
        cert["partition"] = part.to_json()
        cert["coloring"] = to_letters(cols)
        cert["checks"]["partition_valid"] = bool(validate_partition(g, part))
        cert["checks"]["coupon_valid"] = verify_coupon(g, cols)
        ok = cert["checks"]["partition_valid"] and cert["checks"]["coupon_valid"]
        return Outcome(cert, OK if ok else NEGATIVE)
    cert["derivation"] = "oracle"
    try:
        res = coupon_search(g, 2, budget)
    except BudgetExhausted as exc:
        cert["oracle"] = _oracle_fields("two_colorable", None, 1, False, exc.nodes, 0.0)
        return Outcome(cert, UNDECIDED, "oracle budget exhausted")
    isolated = g.n == 0 or any(not row for row in g.adj)
    if res.found:
        cols = [Color.BLACK if c == 0 else Color.WHITE for c in res.witness]
        cert["coloring"] = to_letters(cols)
        cert["checks"]["coupon_valid"] = verify_coupon(g, cols)
        cert["oracle"] = _oracle_fields("two_colorable", None, 2, True, res.nodes, res.elapsed)
        return Outcome(cert, OK, "coloured by exact search")
    d_t = 0 if isolated else 1
    cert["oracle"] = _oracle_fields("two_colorable", d_t, d_t, True, res.nodes, res.elapsed)
    return Outcome(cert, NEGATIVE, f"no 2-coupon colouring exists (d_t = {d_t})")


def exact(g: Graph, seed: int | None = None, budget: int | None = None) -> Outcome:
    cert = _skeleton(g, "exact", seed)
    _structure(g, cert)
    kw = {} if budget is None else {"budget_per_k": budget}
    t0 = time.perf_counter()
    try:
        res = total_domatic_number(g, **kw)
    except BudgetExhausted as exc:
        cert["oracle"] = _oracle_fields("total_domatic_number", None, 1, False, exc.nodes, time.perf_counter() - t0)
        return Outcome(cert, UNDECIDED, "oracle budget exhausted")
    cert["oracle"] = _oracle_fields(
        "total_domatic_number", res.d_t, res.d_t, True, res.nodes, res.elapsed, res.witness
    )
    return Outcome(cert, OK, f"d_t = {res.d_t}")


def strip_times(cert: dict) -> dict:
    """Copy of ``cert`` with timing fields removed, for golden comparisons."""
    out = {k: v for k, v in cert.items()}
    if isinstance(out.get("oracle"), dict):
        out["oracle"] = {k: v for k, v in out["oracle"].items() if k not in TIME_FIELDS}
    return out


class MalformedCertificate(ValueError):
    pass


def verify_certificate(g: Graph, cert: Any, budget: int | None = None) -> tuple[int, list[str]]:
    """Re-derive every claim in ``cert`` against ``g``.

    Returns ``(exit_code, problems)``: 0 when everything re-verifies, 2 on a
    mismatch, 3 when re-running the oracle exceeds ``budget``. Raises
    :class:`MalformedCertificate` for structurally broken input.
    """
    try:
        if cert.get("format") != FORMAT:
            raise MalformedCertificate(f"unknown format {cert.get('format')!r}")
        inp, checks = cert["input"], cert["checks"]
        partition = Partition.from_json(cert["partition"]) if cert.get("partition") is not None else None
        coloring = cert.get("coloring")
        if coloring is not None:
            coloring = [Color(c) for c in coloring]
        witness = LWitness.from_json(cert["l_witness"]) if cert.get("l_witness") else None
        oracle = cert.get("oracle")
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise MalformedCertificate(str(exc)) from None

    problems = []
    desc = input_descriptor(g)
    for key in ("n", "m", "graph6", "sha256"):
        if inp.get(key) != desc[key]:
            problems.append(f"input.{key} does not match the graph")
    if problems:
        return NEGATIVE, problems

    cubic = is_cubic(g)
    if checks.get("cubic") is not None and checks["cubic"] != cubic:
        problems.append(f"checks.cubic claims {checks['cubic']}, actual {cubic}")
    if checks.get("l_free") is not None:
        if not cubic:
            problems.append("checks.l_free given for a non-cubic graph")
        elif checks["l_free"] != (find_l_witness(g) is None):
            problems.append(f"checks.l_free claims {checks['l_free']}")
    if witness is not None:
        if not witness.is_valid_in(g):
            problems.append("l_witness is not an embedding of L")
        if checks.get("l_free"):
            problems.append("l_witness present but checks.l_free is true")

    if partition is not None:
        try:
            report = validate_partition(g, partition)
        except (KeyError, ValueError) as exc:
            report = None
            problems.append(f"partition unreadable: {exc}")
        if report is not None and bool(report) != bool(checks.get("partition_valid")):
            problems.append(f"partition_valid claims {checks.get('partition_valid')}: {report.error}")
    elif checks.get("partition_valid"):
        problems.append("partition_valid claimed without a partition")

    if coloring is not None:
        if len(coloring) != g.n:
            problems.append("coloring has the wrong length")
        elif verify_coupon(g, coloring) != bool(checks.get("coupon_valid")):
            problems.append(f"coupon_valid claims {checks.get('coupon_valid')}, recomputed otherwise")
    elif checks.get("coupon_valid"):
        problems.append("coupon_valid claimed without a coloring")

    if oracle is not None:
        code = _verify_oracle(g, oracle, coloring, budget, problems)
        if code == UNDECIDED and not problems:
            return UNDECIDED, ["oracle claim could not be re-derived within budget"]
    return (NEGATIVE if problems else OK), problems


def _verify_oracle(g: Graph, oracle: dict, coloring, budget, problems: list[str]) -> int:
    query = oracle.get("query")
    classes = oracle.get("witness")
    if classes is not None:
        flat = sorted(v for cls in classes for v in cls)
        if flat != list(range(g.n)):
            problems.append("oracle witness is not a partition of V")
        elif not all(verify_total_dominating(g, cls) for cls in classes):
            problems.append("oracle witness class is not totally dominating")
        elif oracle.get("d_t_at_least") is not None and len(classes) < oracle["d_t_at_least"]:
            problems.append("oracle witness has fewer classes than claimed")
    if not oracle.get("proven") or oracle.get("d_t") is None:
        if query == "two_colorable" and oracle.get("d_t_at_least") == 2 and coloring is None:
            problems.append("two-colourability claimed without a colouring")
        return OK
    try:
        if query == "total_domatic_number":
            kw = {} if budget is None else {"budget_per_k": budget}
            actual = total_domatic_number(g, **kw).d_t
        elif query == "two_colorable":
            isolated = g.n == 0 or any(not row for row in g.adj)
            found = coupon_search(g, 2, budget).found
            actual = 2 if found else (0 if isolated else 1)
            if found:
                problems.append("certificate denies a 2-coupon colouring that exists")
                return OK
        else:
            problems.append(f"unknown oracle query {query!r}")
            return OK
    except BudgetExhausted:
        return UNDECIDED
    if actual != oracle["d_t"]:
        problems.append(f"oracle d_t claims {oracle['d_t']}, recomputed {actual}")
    return OK
