"""Group files, character-table files and Property II reports.

All three are line-oriented ``key: value`` text.  Blank lines and lines
starting with ``#`` are ignored.  Class and irreducible indices in files are
1-based; permutation images are 0-based.

Group file, permutation flavour::

    format: permutation
    name: Q8
    prime: 2
    degree: 8
    generator: 1 3 5 6 7 0 4 2

Group file, presentation flavour::

    format: presentation
    name: Q8
    prime: 2
    generators: x, y
    max_cosets: 100000
    relation: x^4
    relation: x^2 = y^2

Table file::

    format: chartab
    order: 8
    prime: 2
    conductor: 4
    class 1: size=1 order=1 p2=1
    ...
    X.1: 1, 1, 1, 1, 1
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import __version__
from .chartab import CharacterTable, galois_defects, validate
from .coset import DEFAULT_MAX_COSETS, Presentation, enumerate_presentation
from .cyclotomic import Cyclotomic, parse_cyclotomic
from .decide import PropertyIIReport
from .errors import GrammarError, MalformedTable, SemanticError
from .perm import Group, Permutation, PowerMap, _factor, generate_group
from .words import parse_relation


@dataclass
class GroupFile:
    format: str
    prime: int
    name: str = ""
    degree: int = 0
    generators: List[Tuple[int, ...]] = field(default_factory=list)
    generator_names: List[str] = field(default_factory=list)
    relations: List[str] = field(default_factory=list)
    max_cosets: int = DEFAULT_MAX_COSETS

    def presentation(self) -> Presentation:
        return Presentation.from_strings(self.generator_names, self.relations)

    def build(self, max_cosets: Optional[int] = None) -> Group:
        if self.format == "permutation":
            perms = [Permutation(g) for g in self.generators]
            return generate_group(perms, self.prime, degree=self.degree)
        return enumerate_presentation(self.presentation(), self.prime, max_cosets or self.max_cosets)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise GrammarError("expected 'key: value'", lineno, 1)
        key, _, value = line.partition(":")
        col = raw.index(":") + 2 + (len(value) - len(value.lstrip()))
        yield lineno, key.strip(), value.strip(), col


def _int(value: str, lineno: int, col: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise GrammarError(f"expected an integer, got {value!r}", lineno, col) from None


def parse_group_file(text: str) -> GroupFile:
    gf: Optional[GroupFile] = None
    pending: List[Tuple[int, str, str, int]] = []
    for lineno, key, value, col in _lines(text):
        if key == "format":
            if value not in ("permutation", "presentation"):
                raise GrammarError(f"unknown format {value!r}", lineno, col)
            gf = GroupFile(format=value, prime=0)
        elif gf is None:
            raise GrammarError("file must start with 'format:'", lineno, 1)
        else:
            pending.append((lineno, key, value, col))
    if gf is None:
        raise GrammarError("missing 'format:' line", 1, 1)
    for lineno, key, value, col in pending:
        if key == "prime":
            gf.prime = _int(value, lineno, col)
        elif key == "name":
            gf.name = value
        elif key == "degree" and gf.format == "permutation":
            gf.degree = _int(value, lineno, col)
        elif key == "generator" and gf.format == "permutation":
            toks = value.split()
            gf.generators.append(tuple(_int(t, lineno, col) for t in toks))
        elif key == "generators" and gf.format == "presentation":
            names = [n.strip() for n in value.split(",") if n.strip()]
            for n in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", n):
                    raise GrammarError(f"bad generator name {n!r}", lineno, col)
            gf.generator_names = names
        elif key == "max_cosets" and gf.format == "presentation":
            gf.max_cosets = _int(value, lineno, col)
        elif key == "relation" and gf.format == "presentation":
            # syntax and generator names are checked here, with positions
            parse_relation(value, gf.generator_names, lineno, col)
            gf.relations.append(value)
        else:
            raise GrammarError(f"unexpected key {key!r} for {gf.format} file", lineno, 1)
    if gf.prime < 2 or len(_factor(gf.prime)) != 1 or _factor(gf.prime).get(gf.prime) != 1:
        raise SemanticError(f"prime must be a prime number, got {gf.prime}")
    if gf.format == "permutation":
        for g in gf.generators:
            if len(g) != gf.degree:
                raise SemanticError(f"generator {list(g)} does not have degree {gf.degree}")
            if sorted(g) != list(range(gf.degree)):
                raise SemanticError(f"generator {list(g)} is not a bijection")
    elif not gf.generator_names and gf.relations:
        raise SemanticError("relations given without generators")
    return gf


def emit_group_file(gf: GroupFile) -> str:
    out = [f"format: {gf.format}"]
    if gf.name:
        out.append(f"name: {gf.name}")
    out.append(f"prime: {gf.prime}")
    if gf.format == "permutation":
        out.append(f"degree: {gf.degree}")
        out += ["generator: " + " ".join(map(str, g)) for g in gf.generators]
    else:
        out.append("generators: " + ", ".join(gf.generator_names))
        out.append(f"max_cosets: {gf.max_cosets}")
        out += [f"relation: {r}" for r in gf.relations]
    return "\n".join(out) + "\n"


# --- table files -----------------------------------------------------------

_CLASS = re.compile(r"class\s+(\d+)")
_ROW = re.compile(r"X\.(\d+)")


def parse_table_file(text: str, check: bool = True) -> CharacterTable:
    header: Dict[str, int] = {}
    classes: Dict[int, Dict[str, int]] = {}
    rows: Dict[int, List[Cyclotomic]] = {}
    for lineno, key, value, col in _lines(text):
        if key == "format":
            if value != "chartab":
                raise GrammarError(f"not a chartab file: {value!r}", lineno, col)
            header["format"] = 1
        elif key in ("order", "prime", "conductor"):
            header[key] = _int(value, lineno, col)
        elif _CLASS.fullmatch(key):
            idx = int(_CLASS.fullmatch(key).group(1))
            rec = {}
            for item in value.split():
                k, eq, v = item.partition("=")
                if not eq:
                    raise GrammarError(f"expected name=value, got {item!r}", lineno, col)
                rec[k] = _int(v, lineno, col)
            classes[idx] = rec
        elif _ROW.fullmatch(key):
            idx = int(_ROW.fullmatch(key).group(1))
            try:
                rows[idx] = [parse_cyclotomic(v) for v in value.split(",")]
            except ValueError as exc:
                raise GrammarError(str(exc), lineno, col) from None
        else:
            raise GrammarError(f"unexpected key {key!r}", lineno, 1)
    for k in ("format", "order", "prime", "conductor"):
        if k not in header:
            raise GrammarError(f"missing '{k}:' line")
    r = len(classes)
    if sorted(classes) != list(range(1, r + 1)) or sorted(rows) != list(range(1, len(rows) + 1)):
        raise SemanticError("class and row indices must run 1..n without gaps")
    required = set(_factor(header["conductor"]))
    stored = {int(k[1:]) for rec in classes.values() for k in rec if re.fullmatch(r"p\d+", k)}
    pm: Dict[int, Tuple[int, ...]] = {}
    for q in sorted(required | stored):
        try:
            pm[q] = tuple(classes[i][f"p{q}"] - 1 for i in range(1, r + 1))
        except KeyError:
            raise SemanticError(f"missing power map p{q}") from None
        if any(not 0 <= x < r for x in pm[q]):
            raise SemanticError(f"power map p{q} points outside the class list")
    for i in range(1, r + 1):
        if "size" not in classes[i] or "order" not in classes[i]:
            raise SemanticError(f"class {i} lacks size or order")
    t = CharacterTable(
        order=header["order"],
        prime=header["prime"],
        conductor=header["conductor"],
        class_sizes=tuple(classes[i]["size"] for i in range(1, r + 1)),
        element_orders=tuple(classes[i]["order"] for i in range(1, r + 1)),
        power_map=PowerMap(pm, tuple(classes[i]["order"] for i in range(1, r + 1))),
        values=[rows[i] for i in range(1, len(rows) + 1)],
    )
    if check:
        try:
            validate(t)
        except MalformedTable as exc:
            raise MalformedTable(f"table file rejected: {exc}") from None
        bad = galois_defects(t)
        if bad:
            raise MalformedTable(f"table file rejected: power map inconsistent at {bad[0]}")
    return t


def emit_table_file(t: CharacterTable, approx: bool = False, comment: str = "") -> str:
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out += ["format: chartab", f"order: {t.order}", f"prime: {t.prime}", f"conductor: {t.conductor}"]
    for c in range(t.nclasses):
        pm = " ".join(f"p{q}={t.power_map.table[q][c] + 1}" for q in sorted(t.power_map.table))
        out.append(f"class {c + 1}: size={t.class_sizes[c]} order={t.element_orders[c]} {pm}".rstrip())
    for i, row in enumerate(t.values):
        out.append(f"X.{i + 1}: " + ", ".join(str(v) for v in row))
        if approx:
            out.append(f"# ~X.{i + 1}: " + ", ".join(_approx(v) for v in row))
    return "\n".join(out) + "\n"


def _approx(v: Cyclotomic) -> str:
    re_, im = v.to_complex()
    re_ = 0.0 if abs(re_) < 1e-12 else re_
    im = 0.0 if abs(im) < 1e-12 else im
    return f"{re_:.6g}{im:+.6g}i"


# --- reports ------------------------------------------------------------------

def input_hash(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def decision_lines(rep: PropertyIIReport, approx: bool = False) -> List[str]:
    prim = rep.primitive_classes
    out = [
        "[decision]",
        f"order: {rep.order}",
        f"prime: {rep.prime}",
        f"rank: {rep.rank}",
        f"classes: {rep.nclasses}",
        "degrees: " + " ".join(map(str, rep.degrees)),
        "primitive_classes: " + " ".join(str(c + 1) for c in prim),
        "imprimitive_irreps: " + " ".join(f"X.{r + 1}" for r in rep.imprimitive_irreps),
        "imprimitive_degrees: " + " ".join(str(rep.degrees[r]) for r in rep.imprimitive_irreps),
        f"has_property_ii: {'true' if rep.has_property_ii else 'false'}",
    ]
    if not rep.in_scope:
        out.append("note: rank 1, property defined for rank >= 2 only")
    for r, row in enumerate(rep.restriction_sums):
        out.append(f"restriction_sums X.{r + 1}: " + " ".join(str(v) for v in row))
    if approx:
        for r, row in enumerate(rep.restriction_sums):
            out.append(f"restriction_sums_approx X.{r + 1}: " + " ".join(_approx(v) for v in row))
    return out


def render_report(rep: PropertyIIReport, source: str = "", text: str = "",
                  group_info: Optional[Dict[str, str]] = None, elapsed: Optional[float] = None,
                  approx: bool = False) -> str:
    out = [
        "[input]",
        f"toolkit_version: {__version__}",
        f"provenance: {rep.provenance}",
        f"source: {source}",
        f"input_sha256: {input_hash(text)}",
    ]
    out += decision_lines(rep, approx)
    if group_info:
        out.append("[group]")
        out += [f"{k}: {v}" for k, v in group_info.items()]
    if elapsed is not None:
        out += ["[timing]", f"elapsed_seconds: {elapsed:.3f}"]
    return "\n".join(out) + "\n"


def parse_report(text: str) -> Dict[str, Dict[str, str]]:
    """Sections of a rendered report as nested dicts (values left as strings)."""
    out: Dict[str, Dict[str, str]] = {}
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            out[section] = {}
            continue
        if section is None or ":" not in line:
            raise GrammarError("malformed report line", lineno, 1)
        k, _, v = line.partition(":")
        out[section][k.strip()] = v.strip()
    return out


def decision_section(text: str) -> str:
    """The ``[decision]`` block of a rendered report, verbatim."""
    lines = text.splitlines()
    start = lines.index("[decision]")
    end = next((i for i in range(start + 1, len(lines)) if lines[i].startswith("[")), len(lines))
    return "\n".join(lines[start:end])
