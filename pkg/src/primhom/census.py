"""Batch analysis of a directory of group files."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .chartab import DEFAULT_SEED
from .errors import InconsistencyDetected, PrimhomError
from .pipeline import analyze_text

SUMMARY_COLUMNS = ("order", "has_property_ii", "name", "file", "prime", "rank",
                   "nilpotency_class", "classes", "imprimitive_degrees")


@dataclass
class CensusEntry:
    file: str
    name: str = ""
    order: int = 0
    prime: int = 0
    rank: int = 0
    nilpotency_class: int = 0
    classes: int = 0
    has_property_ii: bool = False
    imprimitive_degrees: Tuple[int, ...] = ()
    report: str = ""
    error: Optional[str] = None
    status: int = 0

    def row(self) -> List[str]:
        return [str(self.order), "true" if self.has_property_ii else "false", self.name, self.file,
                str(self.prime), str(self.rank), str(self.nilpotency_class), str(self.classes),
                ",".join(map(str, self.imprimitive_degrees)) or "-"]


def _analyze_file(args) -> CensusEntry:
    path, seed, max_cosets = args
    text = Path(path).read_text()
    entry = CensusEntry(file=Path(path).name)
    try:
        a = analyze_text(text, name=Path(path).stem, seed=seed, max_cosets=max_cosets)
    except PrimhomError as exc:
        entry.error = f"{type(exc).__name__}: {exc}"
        entry.status = 2 if isinstance(exc, InconsistencyDetected) else 1
        return entry
    rep = a.report
    entry.name = a.name
    entry.order = rep.order
    entry.prime = rep.prime
    entry.rank = rep.rank
    entry.nilpotency_class = a.nilpotency_class
    entry.classes = rep.nclasses
    entry.has_property_ii = rep.has_property_ii
    entry.imprimitive_degrees = tuple(rep.degrees[r] for r in rep.imprimitive_irreps)
    entry.report = a.render(source=str(path))
    return entry


def group_files(directory) -> List[Path]:
    return sorted(p for p in Path(directory).iterdir() if p.suffix == ".grp")


def run_census(directory, jobs: int = 1, seed: int = DEFAULT_SEED,
               max_cosets: Optional[int] = None) -> List[CensusEntry]:
    files = group_files(directory)
    work = [(str(p), seed, max_cosets) for p in files]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_analyze_file, work))
    else:
        entries = [_analyze_file(w) for w in work]
    return sort_entries(entries)


def sort_entries(entries: List[CensusEntry]) -> List[CensusEntry]:
    return sorted(entries, key=lambda e: (e.error is not None, e.order, e.has_property_ii, e.name, e.file))


def summary_tsv(entries: List[CensusEntry]) -> str:
    lines = ["\t".join(SUMMARY_COLUMNS)]
    lines += ["\t".join(e.row()) for e in entries if e.error is None]
    for e in entries:
        if e.error is not None:
            lines.append(f"# error\t{e.file}\t{e.error}")
    return "\n".join(lines) + "\n"


def order_counts(entries: List[CensusEntry], min_rank: int = 3) -> Dict[int, Dict[int, int]]:
    """Property II groups of rank >= ``min_rank``: order -> nilpotency class -> count."""
    out: Dict[int, Dict[int, int]] = {}
    for e in entries:
        if e.error is None and e.has_property_ii and e.rank >= min_rank:
            out.setdefault(e.order, {})
            out[e.order][e.nilpotency_class] = out[e.order].get(e.nilpotency_class, 0) + 1
    return out


def counts_tsv(entries: List[CensusEntry], min_rank: int = 3) -> str:
    """Per-order counts laid out as Order / Total / k-step columns."""
    counts = order_counts(entries, min_rank)
    steps = sorted({k for row in counts.values() for k in row} | {3, 4})
    lines = ["\t".join(["order", "total"] + [f"{k}-step" for k in steps])]
    for order in sorted(counts):
        row = counts[order]
        lines.append("\t".join([str(order), str(sum(row.values()))] + [str(row.get(k, 0)) for k in steps]))
    return "\n".join(lines) + "\n"


def default_jobs() -> int:
    return max(1, min(4, os.cpu_count() or 1))
