"""Finitely presented multi-product algebras: file format, validation,
generation certificate, scalar reduction to prime fields.

File format (line oriented, ``#`` comments and blank lines ignored)::

    ring Q            | ring Fp 3
    products -1 0 1
    grading none | vertex | table
    basis x 1                     # name [degree]; degree required unless grading none
    basis y 2
    generators x y
    fixed 1*x + 2*y               # optional, repeatable
    mul 0 x x = 1*y               # omitted products are zero
    dtable 1 0 1 = 2              # only with grading table

``grading vertex`` fixes the product-degree function d(a, m, b) = a + b - m - 1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import linalg
from .errors import (BadPrime, DuplicateBasis, GradingViolation, NotGenerating,
                     PresentationSyntaxError, UnknownName)
from .freealg import FreeElement, eta_element, eta_evaluate, structure_product
from .rings import QQ, GF, Ring, parse_ring, reduce_mod_p
from .words import (DEFAULT_WORD_CAP, Universe, enumerate_words,
                    table_degree_rule, vertex_degree_rule)

_TERM_SPLIT = re.compile(r"\s*\+\s*")


@dataclass
class Presentation:
    ring: Ring
    basis: list[str]
    degrees: list[int] | None
    labels: list[int]
    gens: list[int]                      # 0-based basis indices spanning F
    mul: dict[tuple[int, int, int], tuple]   # (label, i, j) -> coordinate vector
    grading: str = "none"                # none | vertex | table
    dtable: dict[tuple[int, int, int], int] = field(default_factory=dict)
    fixed: list[tuple] = field(default_factory=list)

    def __post_init__(self):
        self._universe = None
        self._closure = None
        self.eta_cache: dict = {}
        self.validate()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    @property
    def universe(self) -> Universe:
        if self._universe is None:
            self._universe = Universe(self.num_gens, self.labels)
        return self._universe

    @property
    def gen_degrees(self) -> list[int]:
        return [self.degrees[i] for i in self.gens]

    def degree_rule(self):
        if self.grading == "vertex":
            return vertex_degree_rule
        if self.grading == "table":
            return table_degree_rule(self.dtable)
        return None

    def validate(self) -> None:
        if len(set(self.basis)) != len(self.basis):
            raise DuplicateBasis("basis names are not unique")
        if not self.gens:
            raise UnknownName("generator set is empty")
        if not self.labels or len(set(self.labels)) != len(self.labels):
            raise PresentationSyntaxError(0, "product labels must be nonempty and duplicate-free")
        if self.grading != "none" and self.degrees is None:
            raise PresentationSyntaxError(0, "graded presentation requires basis degrees")
        for (m, i, j), vec in self.mul.items():
            if m not in self.labels:
                raise UnknownName(f"product label {m} not declared")
            if len(vec) != self.dim:
                raise PresentationSyntaxError(0, "structure constant vector has wrong length")
        d = self.degree_rule()
        if d is not None:
            for (m, i, j), vec in self.mul.items():
                lam = d(self.degrees[i], m, self.degrees[j])
                for k, c in enumerate(vec):
                    if c and self.degrees[k] != lam:
                        raise GradingViolation(
                            f"product <{m}> of {self.basis[i]} and {self.basis[j]} "
                            f"hits {self.basis[k]} of degree {self.degrees[k]}, expected {lam}")

    # -- derived data -------------------------------------------------------

    def generation_closure(self, cap: int = DEFAULT_WORD_CAP) -> "SectionData":
        if self._closure is None:
            self._closure = generation_closure(self, cap)
        return self._closure

    def base_change(self, p: int) -> "Presentation":
        return base_change(self, p)


@dataclass
class SectionData:
    """For each basis element, a free-algebra preimage under evaluation."""

    elements: list[FreeElement]
    pivot_words: list
    max_length: int


def generation_closure(pres: Presentation, cap: int = DEFAULT_WORD_CAP) -> SectionData:
    """Certify that the generators span a generating submodule and produce a
    section of the evaluation map.

    The span of the generators is closed under all products round by round
    (stable in at most dim rounds).  If it reaches the whole algebra, words
    over the generators are scanned in canonical order, shortest first, and
    greedy Gaussian pivoting picks one preimage word combination per basis
    element.
    """
    ring, dim = pres.ring, pres.dim

    # round-based span closure; on failure this is the NotGenerating witness
    rows: list[list] = []
    for i in pres.gens:
        v = [ring.zero] * dim
        v[i] = ring.one
        rows.append(v)
    rows, _ = linalg.rref(ring, rows)
    rows = [r for r in rows if any(r)]
    rounds = 1
    while len(rows) < dim:
        new_rows = list(rows)
        for u in rows:
            for v in rows:
                for m in pres.labels:
                    w = list(structure_product(pres, tuple(u), tuple(v), m))
                    if any(w):
                        new_rows.append(w)
        new_rows, _ = linalg.rref(ring, new_rows)
        new_rows = [r for r in new_rows if any(r)]
        if len(new_rows) == len(rows):
            raise NotGenerating([tuple(r) for r in rows])
        rows = new_rows
        rounds += 1

    # shortest-word pivots: closure in r rounds means length 2^(r-1) suffices
    max_needed = 1 << (rounds - 1)
    pivot_words: list = []
    pivot_images: list[tuple] = []
    reduced: list[list] = []
    length = 0
    while len(pivot_words) < dim:
        length += 1
        if length > max_needed:
            raise AssertionError("section search exceeded its length bound")
        table = enumerate_words(pres.universe, length, cap)
        for w in table.by_length[length - 1]:
            img = eta_evaluate(w, pres)
            resid = list(img)
            for row in reduced:
                c = next((i for i, x in enumerate(row) if x), None)
                if resid[c]:
                    f = resid[c]
                    resid = [ring.sub(x, ring.mul(f, y)) for x, y in zip(resid, row)]
            if any(resid):
                inv = ring.invert(next(x for x in resid if x))
                norm = [ring.mul(inv, x) for x in resid]
                for row in reduced:
                    c = next(i for i, x in enumerate(norm) if x)
                    if row[c]:
                        f = row[c]
                        row[:] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(row, norm)]
                reduced.append(norm)
                pivot_words.append(w)
                pivot_images.append(img)
                if len(pivot_words) == dim:
                    break

    # solve V c = e_i with V the pivot-image column matrix
    vmat = [[pivot_images[j][i] for j in range(dim)] for i in range(dim)]
    vinv = linalg.inverse(ring, vmat)
    elements = []
    for i in range(dim):
        e = FreeElement(ring)
        for j in range(dim):
            e.add_term(pivot_words[j], vinv[j][i])
        elements.append(e)
    section = SectionData(elements, pivot_words,
                          max(w.length for w in pivot_words))
    for i, e in enumerate(section.elements):
        img = eta_element(e, pres)
        expect = tuple(ring.one if k == i else ring.zero for k in range(dim))
        assert img == expect, "section failed to invert the evaluation map"
    return section


def base_change(pres: Presentation, p: int) -> Presentation:
    """Scalar reduction of a rational presentation to F_p."""
    if pres.ring != QQ:
        raise BadPrime("base change starts from a rational presentation")
    fp = GF(p)

    def red_vec(vec):
        return tuple(reduce_mod_p(c, p) for c in vec)

    return Presentation(
        ring=fp,
        basis=list(pres.basis),
        degrees=None if pres.degrees is None else list(pres.degrees),
        labels=list(pres.labels),
        gens=list(pres.gens),
        mul={k: red_vec(v) for k, v in pres.mul.items()},
        grading=pres.grading,
        dtable=dict(pres.dtable),
        fixed=[red_vec(v) for v in pres.fixed],
    )


# -- parsing -------------------------------------------------------------------


def _parse_combo(text: str, names: dict[str, int], ring: Ring, dim: int,
                 lineno: int) -> tuple:
    vec = [ring.zero] * dim
    for term in _TERM_SPLIT.split(text.strip()):
        if "*" not in term:
            raise PresentationSyntaxError(lineno, f"expected coeff*name, got {term!r}")
        cstr, _, name = term.partition("*")
        name = name.strip()
        if name not in names:
            raise UnknownName(f"line {lineno}: unknown basis name {name!r}")
        try:
            c = ring.parse(cstr)
        except ValueError:
            raise PresentationSyntaxError(lineno, f"bad coefficient {cstr!r}") from None
        k = names[name]
        vec[k] = ring.add(vec[k], c)
    return tuple(vec)


def parse(text: str) -> Presentation:
    ring = None
    labels: list[int] | None = None
    grading = "none"
    basis: list[str] = []
    degrees: list[int | None] = []
    gens: list[str] | None = None
    fixed_raw: list[tuple[int, str]] = []
    mul_raw: list[tuple[int, str]] = []
    dtable: dict[tuple[int, int, int], int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "ring":
            try:
                ring = parse_ring(rest)
            except ValueError:
                raise PresentationSyntaxError(lineno, f"bad ring {rest!r}") from None
        elif keyword == "products":
            try:
                labels = [int(tok) for tok in rest.split()]
            except ValueError:
                raise PresentationSyntaxError(lineno, f"bad product labels {rest!r}") from None
        elif keyword == "grading":
            if rest not in ("none", "vertex", "table"):
                raise PresentationSyntaxError(lineno, f"bad grading {rest!r}")
            grading = rest
        elif keyword == "basis":
            parts = rest.split()
            if not parts or len(parts) > 2:
                raise PresentationSyntaxError(lineno, f"bad basis line {rest!r}")
            if parts[0] in basis:
                raise DuplicateBasis(f"line {lineno}: duplicate basis name {parts[0]!r}")
            basis.append(parts[0])
            try:
                degrees.append(int(parts[1]) if len(parts) == 2 else None)
            except ValueError:
                raise PresentationSyntaxError(lineno, f"bad degree {parts[1]!r}") from None
        elif keyword == "generators":
            gens = rest.split()
        elif keyword == "fixed":
            fixed_raw.append((lineno, rest))
        elif keyword == "mul":
            mul_raw.append((lineno, rest))
        elif keyword == "dtable":
            m = re.match(r"^(-?\d+)\s+(-?\d+)\s+(-?\d+)\s*=\s*(-?\d+)$", rest)
            if not m:
                raise PresentationSyntaxError(lineno, f"bad dtable line {rest!r}")
            a, lab, b, lam = (int(m.group(k)) for k in range(1, 5))
            dtable[(a, lab, b)] = lam
        else:
            raise PresentationSyntaxError(lineno, f"unknown keyword {keyword!r}")

    if ring is None:
        raise PresentationSyntaxError(0, "missing ring line")
    if labels is None:
        raise PresentationSyntaxError(0, "missing products line")
    if not basis:
        raise PresentationSyntaxError(0, "missing basis lines")
    if gens is None:
        raise PresentationSyntaxError(0, "missing generators line")

    names = {name: i for i, name in enumerate(basis)}
    gen_idx = []
    for g in gens:
        if g not in names:
            raise UnknownName(f"unknown generator name {g!r}")
        gen_idx.append(names[g])

    if grading == "none":
        deg_list = None
    else:
        missing = [basis[i] for i, d in enumerate(degrees) if d is None]
        if missing:
            raise PresentationSyntaxError(
                0, f"graded presentation but no degree for {missing[0]!r}")
        deg_list = [int(d) for d in degrees]

    dim = len(basis)
    mul: dict[tuple[int, int, int], tuple] = {}
    for lineno, rest in mul_raw:
        m = re.match(r"^(-?\d+)\s+(\S+)\s+(\S+)\s*=\s*(.+)$", rest)
        if not m:
            raise PresentationSyntaxError(lineno, f"bad mul line {rest!r}")
        label = int(m.group(1))
        for name in (m.group(2), m.group(3)):
            if name not in names:
                raise UnknownName(f"line {lineno}: unknown basis name {name!r}")
        vec = _parse_combo(m.group(4), names, ring, dim, lineno)
        key = (label, names[m.group(2)], names[m.group(3)])
        if any(vec):
            mul[key] = vec

    fixed = [_parse_combo(rest, names, ring, dim, lineno)
             for lineno, rest in fixed_raw]

    return Presentation(ring=ring, basis=basis, degrees=deg_list, labels=labels,
                        gens=gen_idx, mul=mul, grading=grading, dtable=dtable,
                        fixed=fixed)


def parse_file(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# -- canonical printing ----------------------------------------------------


def _format_combo(vec: tuple, basis: list[str], ring: Ring) -> str:
    parts = [f"{ring.format(c)}*{basis[i]}" for i, c in enumerate(vec) if c]
    return " + ".join(parts) if parts else f"0*{basis[0]}"


def format_presentation(pres: Presentation) -> str:
    lines = [f"ring {pres.ring}",
             "products " + " ".join(str(m) for m in pres.labels),
             f"grading {pres.grading}"]
    for i, name in enumerate(pres.basis):
        if pres.degrees is None:
            lines.append(f"basis {name}")
        else:
            lines.append(f"basis {name} {pres.degrees[i]}")
    lines.append("generators " + " ".join(pres.basis[i] for i in pres.gens))
    for vec in pres.fixed:
        lines.append("fixed " + _format_combo(vec, pres.basis, pres.ring))
    label_pos = {m: k for k, m in enumerate(pres.labels)}
    for (m, i, j) in sorted(pres.mul, key=lambda k: (label_pos[k[0]], k[1], k[2])):
        combo = _format_combo(pres.mul[(m, i, j)], pres.basis, pres.ring)
        lines.append(f"mul {m} {pres.basis[i]} {pres.basis[j]} = {combo}")
    for key in sorted(pres.dtable):
        a, m, b = key
        lines.append(f"dtable {a} {m} {b} = {pres.dtable[key]}")
    return "\n".join(lines) + "\n"
