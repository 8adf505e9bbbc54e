"""Raw randomness diagnostics for generated sequences.

Counts only, no significance thresholds: symbol frequencies, the longest
constant run, and the serial pair matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ValueOutOfAlphabet

__all__ = ["SequenceReport", "frequency_report", "format_report"]


@dataclass(frozen=True)
class SequenceReport:
    """Exact counting statistics of one sequence.

    ``pair_counts[a][b]`` counts adjacent occurrences of a followed by b;
    there are length - 1 such pairs.  ``bit_balance`` (ones minus zeros)
    is only set for a binary alphabet.
    """

    length: int
    counts: tuple[int, ...]
    longest_run: int
    pair_counts: tuple[tuple[int, ...], ...]
    bit_balance: int | None


def frequency_report(seq: Sequence[int], alphabet_size: int) -> SequenceReport:
    """Count symbols, the longest run, and adjacent pairs of seq."""
    if alphabet_size < 1:
        raise ValueOutOfAlphabet(f"alphabet size must be >= 1, got {alphabet_size}")
    counts = [0] * alphabet_size
    pairs = [[0] * alphabet_size for _ in range(alphabet_size)]
    longest = run = 0
    prev = None
    for i, v in enumerate(seq):
        if not 0 <= v < alphabet_size:
            raise ValueOutOfAlphabet(
                f"value {v!r} at index {i} is outside alphabet 0..{alphabet_size - 1}")
        counts[v] += 1
        if v == prev:
            run += 1
        else:
            run = 1
        longest = max(longest, run)
        if prev is not None:
            pairs[prev][v] += 1
        prev = v
    balance = counts[1] - counts[0] if alphabet_size == 2 else None
    return SequenceReport(length=len(seq), counts=tuple(counts),
                          longest_run=longest,
                          pair_counts=tuple(tuple(row) for row in pairs),
                          bit_balance=balance)


def format_report(report: SequenceReport) -> str:
    """Aligned plain-text rendering for the CLI."""
    lines = [f"length       {report.length}"]
    for symbol, count in enumerate(report.counts):
        lines.append(f"count[{symbol}]     {count}")
    if report.bit_balance is not None:
        lines.append(f"bit balance  {report.bit_balance:+d} (ones - zeros)")
    lines.append(f"longest run  {report.longest_run}")
    lines.append("pairs (row = first symbol):")
    width = max((len(str(c)) for row in report.pair_counts for c in row),
                default=1)
    for symbol, row in enumerate(report.pair_counts):
        cells = " ".join(f"{c:>{width}}" for c in row)
        lines.append(f"  {symbol}: {cells}")
    return "\n".join(lines)
