"""Plain-text formats for algebras, self-maps, fuzzy sets, subsets and homomorphisms.

A file is a sequence of blocks, each opened by a header line::

    n 5             algebra; n rows of n entries follow (row x lists x*y)
    names 0 a b     optional, right after the header; rows may then use names
    map 5           self-map; 5 images follow
    fuzzy 5         fuzzy set; 5 grades follow (``p/q`` or integers)
    subset 5        subset; any number of member indices follow
    hom 5 3         homomorphism values; 5 target indices follow

``[label]`` on its own line names the next block.  ``#`` starts a comment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .algebra import FiniteAlgebra, Subset
from .derivations import SelfMap
from .errors import KUError, ParseError
from .fuzzy import FuzzySet, grade

HEADERS = ("n", "map", "fuzzy", "subset", "hom")


@dataclass(frozen=True)
class Item:
    kind: str
    label: str
    value: Any
    line: int


@dataclass
class Bundle:
    items: list[Item] = field(default_factory=list)

    def of_kind(self, kind: str) -> list[Item]:
        return [i for i in self.items if i.kind == kind]

    def algebras(self) -> list[FiniteAlgebra]:
        return [i.value for i in self.of_kind("algebra")]

    def maps(self) -> list[SelfMap]:
        return [i.value for i in self.of_kind("map")]

    def fuzzy_sets(self) -> list[FuzzySet]:
        return [i.value for i in self.of_kind("fuzzy")]

    def subsets(self) -> list[Subset]:
        return [i.value for i in self.of_kind("subset")]

    def get(self, label: str, kind: str | None = None):
        for i in self.items:
            if i.label == label and (kind is None or i.kind == kind):
                return i.value
        return None

    def extend(self, other: Bundle) -> None:
        self.items.extend(other.items)


def _tokens(line: str) -> list[tuple[str, int]]:
    """Whitespace tokens with their 1-based columns, comments stripped."""
    text = line.split("#", 1)[0]
    out, col = [], 0
    for tok in text.split():
        col = text.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok: str, lineno: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", lineno, col) from None


def _size(toks, lineno, count=1) -> list[int]:
    if len(toks) != count + 1:
        raise ParseError(f"header {toks[0][0]!r} needs {count} size(s)", lineno, toks[0][1])
    sizes = [_int(t, lineno, c, "size") for t, c in toks[1:]]
    for (t, c), v in zip(toks[1:], sizes):
        if v < 1:
            raise ParseError(f"size {v} must be positive", lineno, c)
    return sizes


def _algebra(header, body) -> FiniteAlgebra:
    lineno, toks = header
    (n,) = _size(toks, lineno)
    names = None
    if body and body[0][1] and body[0][1][0][0] == "names":
        nl, ntoks = body[0]
        names = tuple(t for t, _ in ntoks[1:])
        if len(names) != n or len(set(names)) != n:
            raise ParseError(f"names line needs {n} distinct names", nl, ntoks[0][1])
        body = body[1:]
    lookup = {name: i for i, name in enumerate(names)} if names else {}
    rows = [(ln, tk) for ln, tk in body if tk]
    if len(rows) != n:
        where = rows[n][0] if len(rows) > n else lineno
        raise ParseError(f"expected {n} rows, found {len(rows)}", where)
    table = []
    for ln, tk in rows:
        if len(tk) != n:
            raise ParseError(f"row has {len(tk)} entries, expected {n}", ln, tk[0][1])
        row = []
        for tok, col in tk:
            v = lookup[tok] if tok in lookup else _int(tok, ln, col, "entry")
            if not 0 <= v < n:
                raise ParseError(f"entry {v} is outside 0..{n - 1}", ln, col)
            row.append(v)
        table.append(tuple(row))
    return FiniteAlgebra(tuple(table), names)


def _flat(body) -> list[tuple[str, int, int]]:
    return [(tok, ln, col) for ln, tk in body for tok, col in tk]


def _indices(header, body, count, bound, what):
    lineno = header[0]
    vals = _flat(body)
    if count is not None and len(vals) != count:
        raise ParseError(f"{what} needs {count} values, found {len(vals)}", lineno)
    out = []
    for tok, ln, col in vals:
        v = _int(tok, ln, col, what)
        if not 0 <= v < bound:
            raise ParseError(f"{what} value {v} is outside 0..{bound - 1}", ln, col)
        out.append(v)
    return out


def _block(kind, header, body):
    lineno, toks = header
    if kind == "n":
        return "algebra", _algebra(header, body)
    if kind == "map":
        (n,) = _size(toks, lineno)
        return "map", SelfMap(tuple(_indices(header, body, n, n, "map")))
    if kind == "subset":
        (n,) = _size(toks, lineno)
        return "subset", Subset.of(n, _indices(header, body, None, n, "subset"))
    if kind == "hom":
        n_src, n_dst = _size(toks, lineno, 2)
        return "hom", (n_src, n_dst, tuple(_indices(header, body, n_src, n_dst, "hom")))
    (n,) = _size(toks, lineno)
    vals = _flat(body)
    if len(vals) != n:
        raise ParseError(f"fuzzy set needs {n} grades, found {len(vals)}", lineno)
    grades = []
    for tok, ln, col in vals:
        try:
            grades.append(grade(tok))
        except KUError as exc:
            raise ParseError(str(exc), ln, col) from None
    return "fuzzy", FuzzySet(tuple(grades))


def parse_bundle(text: str) -> Bundle:
    bundle = Bundle()
    label = None
    header, body = None, []
    counts: dict[str, int] = {}

    def close():
        if header is None:
            return
        kind, value = _block(header[1][0][0], header, body)
        name = label or f"{kind}{counts.get(kind, 0)}"
        counts[kind] = counts.get(kind, 0) + 1
        bundle.items.append(Item(kind, name, value, header[0]))

    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            close()
            header, body = None, []
            label = stripped[1:-1].strip()
            continue
        toks = _tokens(raw)
        if toks and toks[0][0] in HEADERS:
            close()
            if header is not None:
                label = None
            header, body = (lineno, toks), []
            continue
        if not toks:
            continue
        if header is None:
            raise ParseError(f"expected a block header ({', '.join(HEADERS)})", lineno, toks[0][1])
        body.append((lineno, toks))
    close()
    return bundle


def parse_algebra_file(text: str) -> FiniteAlgebra:
    """The single algebra in ``text``."""
    bundle = parse_bundle(text)
    algebras = bundle.algebras()
    if len(algebras) != 1:
        raise ParseError(f"expected one algebra, found {len(algebras)}", 1)
    return algebras[0]


def format_algebra(a: FiniteAlgebra, comment: str | None = None) -> str:
    lines = [f"# {c}" for c in comment.splitlines()] if comment else []
    lines.append(f"n {a.n}")
    lines.extend(" ".join(str(v) for v in row) for row in a.table)
    return "\n".join(lines) + "\n"


def format_map(d: SelfMap) -> str:
    return f"map {d.n}\n" + " ".join(map(str, d.image)) + "\n"


def format_fuzzy(m: FuzzySet) -> str:
    return f"fuzzy {m.n}\n" + " ".join(str(g) for g in m.grades) + "\n"


def format_subset(s: Subset) -> str:
    return f"subset {s.n}\n" + " ".join(map(str, s.members)) + "\n"


def format_product(pa) -> str:
    nl, nr = pa.left.n, pa.right.n
    comment = f"product of factors with n={nl} and n={nr}; pair (i,j) is element i*{nr}+j"
    return format_algebra(pa.algebra, comment)


def format_catalog(entries, n: int) -> str:
    blocks = []
    for e in entries:
        derivs = " ".join(str(d) for d in e.derivations)
        blocks.append(format_algebra(e.algebra, f"A{n}.{e.index}\nderivations: {derivs}"))
    return "\n".join(blocks)
