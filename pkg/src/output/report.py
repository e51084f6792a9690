"""
Human-Readable Reports and CSV Export
"""

import csv
import logging
from typing import IO, List, Optional

from src.core.batch import BatchRow
from src.core.funcgraph import FiniteFunction
from src.core.linrep import Certificate, LinearRepresentation, RowPolynomials
from src.core.oracle import SearchResult


logger = logging.getLogger(__name__)

CSV_HEADER = ['f', 'x', 'm', 'a', 'j', 'verified']


def format_representation(
    f: FiniteFunction,
    rep: LinearRepresentation,
    certificate: Certificate,
) -> List[str]:
    """Commuting-square summary: the table of j(f(i)) against a * j(i) mod m"""
    lines = [f"f = [{f.render()}]  (n = {f.n}, mode = {rep.mode.value})"]
    if rep.x is not None:
        lines.append(f"x = {rep.x}")
    lines.append(f"m = {rep.m}   a = {rep.a}")
    lines.append(f"j = ({', '.join(str(v) for v in rep.j)})")

    if certificate.entries:
        lines.append("")
        lines.append(f"{'i':>4} {'f(i)':>5} {'j(i)':>14} {'j(f(i))':>14} {'a*j(i) mod m':>14}")
        for e in certificate.entries:
            mark = "✅" if e.congruent else "❌"
            lines.append(
                f"{e.i:>4} {e.image:>5} {e.j_i:>14} {e.j_image:>14} {e.a_j_i_mod_m:>14}  {mark}"
            )
        lines.append("")

    if certificate.passed:
        lines.append(f"✅ j(f(i)) ≡ {rep.a}·j(i) (mod {rep.m}) for all i; j is injective")
    else:
        lines.append(f"❌ Verification failed: {certificate.first_failure()}")
    return lines


def format_polynomials(rp: RowPolynomials) -> List[str]:
    lines = [f"det(xI - A) = {rp.char_poly.pretty()}", "", "adj(xI - A):"]
    for row in rp.adjugate.rows:
        lines.append("   " + " | ".join(entry.pretty() for entry in row))
    lines.append("")
    lines.append("row polynomials p_i(x) = sum_k adj[i][k] * (k+1):")
    for i, p in enumerate(rp.p):
        lines.append(f"   p_{i} = {p.pretty()}")
    return lines


def format_search(result: SearchResult, constructive_m: Optional[int] = None) -> List[str]:
    if result.found:
        rep = result.representation
        lines = [
            f"✅ Minimal modulus m = {rep.m}",
            f"   a = {rep.a}",
            f"   j = ({', '.join(str(v) for v in rep.j)})",
        ]
    else:
        reason = "node budget exhausted" if result.exhausted else "no representation found"
        lines = [f"❌ {reason}; searched through m = {result.searched_through}"]
    if constructive_m is not None:
        lines.append(f"   constructive (tight) m = {constructive_m}")
    return lines


def write_batch_csv(rows: List[BatchRow], stream: IO[str], with_minimal: bool = False) -> int:
    """
    Write one CSV row per function; j values are joined by semicolons.

    Returns:
        Number of data rows written
    """
    header = CSV_HEADER + (['minimal_m'] if with_minimal else [])
    csv.writer(stream, lineterminator="\n").writerow(header)
    writer = csv.writer(stream, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")

    for row in rows:
        rep = row.representation
        record = [
            row.function.render(),
            rep.x,
            rep.m,
            rep.a,
            ';'.join(str(v) for v in rep.j),
            'true' if row.verified else 'false',
        ]
        if with_minimal:
            record.append(row.minimal_m if row.minimal_m is not None else '')
        writer.writerow(record)

    logger.debug(f"Wrote {len(rows)} CSV rows")
    return len(rows)
