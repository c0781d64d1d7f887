"""Command-line interface: analyze, chartab, check-table, verify-cover, census."""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional

from .census import counts_tsv, default_jobs, run_census, summary_tsv
from .chartab import DEFAULT_SEED, character_table, find_bijection
from .cover import build_cover, h1_character, verify_gaschutz
from .errors import InconsistencyDetected, InputError, PrimhomError
from .formats import emit_table_file, parse_group_file, parse_table_file, render_report
from .perm import conjugacy_classes, minimal_generating_set, rank
from .pipeline import analyze_text, check_table_text

log = logging.getLogger("primhom")

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


def _write(text: str, out: Optional[str]):
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    text = Path(args.file).read_text()
    a = analyze_text(text, name=Path(args.file).stem, seed=args.seed, max_cosets=args.max_cosets)
    _write(a.render(source=args.file, approx=args.approx), args.out)
    if args.out and not args.no_plot:
        from .plotting import plot_restriction_sums
        plot_restriction_sums(a.report, Path(args.out).with_suffix(".png"), title=a.name)
    return EXIT_OK


def cmd_chartab(args) -> int:
    text = Path(args.file).read_text()
    gf = parse_group_file(text)
    g = gf.build(args.max_cosets)
    t = character_table(g, conjugacy_classes(g), seed=args.seed)
    comment = f"character table of {gf.name or Path(args.file).stem} (order {g.order}), seed {args.seed}"
    _write(emit_table_file(t, approx=args.approx, comment=comment), args.out)
    return EXIT_OK


def bijection_lines(a, b) -> List[str]:
    """Certified column/row correspondence from table ``a`` to table ``b`` (1-based)."""
    found = find_bijection(a, b)
    if found is None:
        return ["[bijection]", "status: none"]
    cols, rows = found
    return [
        "[bijection]",
        "status: certified",
        "columns: " + " ".join(f"{c + 1}->{d + 1}" for c, d in enumerate(cols)),
        "rows: " + " ".join(f"X.{r + 1}->X.{s + 1}" for r, s in enumerate(rows)),
    ]


def cmd_check_table(args) -> int:
    text = Path(args.file).read_text()
    start = time.perf_counter()
    rep = check_table_text(text)
    report = render_report(rep, args.file, text, elapsed=time.perf_counter() - start, approx=args.approx)
    if args.compare:
        other = parse_table_file(Path(args.compare).read_text())
        lines = bijection_lines(parse_table_file(text), other)
        lines.insert(1, f"against: {args.compare}")
        report += "\n".join(lines) + "\n"
    _write(report, args.out)
    if args.out and not args.no_plot:
        from .plotting import plot_restriction_sums
        plot_restriction_sums(rep, Path(args.out).with_suffix(".png"), title=Path(args.file).stem)
    return EXIT_OK


def cmd_verify_cover(args) -> int:
    text = Path(args.file).read_text()
    gf = parse_group_file(text)
    g = gf.build(args.max_cosets)
    classes = conjugacy_classes(g)
    t = character_table(g, classes, seed=args.seed)
    gens = list(g.generator_indices)
    if g.order > 1 and len(set(gens)) != rank(g):
        gens = minimal_generating_set(g)
    cover = build_cover(g, gens)
    chi = h1_character(cover, classes)
    mults = verify_gaschutz(cover, classes, t)
    lines = [
        "[cover]",
        f"petals: {cover.n}",
        f"vertices: {cover.num_vertices}",
        f"edges: {cover.num_edges}",
        f"dim_h1: {chi[0]}",
        "h1_character: " + " ".join(str(v) for v in chi),
        "multiplicities: " + " ".join(map(str, mults)),
        "gaschutz: verified",
    ]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_census(args) -> int:
    entries = run_census(args.directory, jobs=args.jobs, seed=args.seed, max_cosets=args.max_cosets)
    summary = summary_tsv(entries)
    counts = counts_tsv(entries)
    if args.out:
        out = Path(args.out)
        (out / "reports").mkdir(parents=True, exist_ok=True)
        (out / "summary.tsv").write_text(summary)
        (out / "counts.tsv").write_text(counts)
        for e in entries:
            if e.error is None:
                (out / "reports" / (Path(e.file).stem + ".report")).write_text(e.report)
        if not args.no_plot:
            from .plotting import plot_census
            plot_census(entries, out / "census.png")
    else:
        sys.stdout.write(summary + "\n" + counts)
    for e in entries:
        if e.error:
            log.error("%s: %s", e.file, e.error)
    return max([e.status for e in entries], default=0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for eigenspace splitting")
    common.add_argument("--max-cosets", type=int, default=None, help="coset table cap for presentations")
    common.add_argument("--approx", action="store_true", help="add floating-point renderings")
    common.add_argument("--out", default=None, help="output file (directory for census)")
    common.add_argument("--no-plot", action="store_true", help="skip the figure written next to --out")

    parser = argparse.ArgumentParser(prog="primhom", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full Property II report for a group file")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("chartab", parents=[common], help="emit the character table file of a group")
    p.add_argument("file")
    p.set_defaults(func=cmd_chartab)

    p = sub.add_parser("check-table", parents=[common], help="decide Property II from a table file alone")
    p.add_argument("file")
    p.add_argument("--compare", metavar="TABLE", help="also certify a bijection onto another table file")
    p.set_defaults(func=cmd_check_table)

    p = sub.add_parser("verify-cover", parents=[common], help="check the H_1 decomposition of the rose cover")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_cover)

    p = sub.add_parser("census", parents=[common], help="analyze every .grp file in a directory")
    p.add_argument("directory")
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except InconsistencyDetected as exc:
        log.error("internal inconsistency: %s", exc)
        return EXIT_INCONSISTENT
    except (InputError, OSError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INPUT
    except PrimhomError as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
