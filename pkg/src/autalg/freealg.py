"""The free algebra on the generator set: finitely supported combinations of
words, bilinear m-products, and the evaluation map into a presented algebra."""

from __future__ import annotations

from dataclasses import dataclass, field

from .rings import Ring
from .words import Universe, Word, WordTable


@dataclass
class FreeElement:
    """Finite map word -> nonzero scalar; zero coefficients are never stored."""

    ring: Ring
    terms: dict[Word, object] = field(default_factory=dict)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, FreeElement) and self.ring == other.ring
                and self.terms == other.terms)

    def copy(self) -> "FreeElement":
        return FreeElement(self.ring, dict(self.terms))

    def add_term(self, w: Word, c) -> None:
        cur = self.terms.get(w)
        if cur is None:
            if c:
                self.terms[w] = c
            return
        s = self.ring.add(cur, c)
        if s:
            self.terms[w] = s
        else:
            del self.terms[w]

    def add(self, other: "FreeElement") -> "FreeElement":
        out = self.copy()
        for w, c in other.terms.items():
            out.add_term(w, c)
        return out

    def scale(self, c) -> "FreeElement":
        if not c:
            return FreeElement(self.ring)
        return FreeElement(self.ring, {w: self.ring.mul(c, x) for w, x in self.terms.items()})

    def neg(self) -> "FreeElement":
        return FreeElement(self.ring, {w: self.ring.neg(x) for w, x in self.terms.items()})


def word_element(ring: Ring, w: Word) -> FreeElement:
    return FreeElement(ring, {w: ring.one})


def m_product(a: FreeElement, b: FreeElement, m: int, universe: Universe) -> FreeElement:
    """Bilinear extension of the magma product to free elements."""
    ring = a.ring
    out = FreeElement(ring)
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            out.add_term(universe.node(wa, m, wb), ring.mul(ca, cb))
    return out


def format_element(e: FreeElement, table: WordTable, names: list[str]) -> str:
    """Deterministic text form, terms in canonical word order."""
    from .words import format_word

    if not e.terms:
        return "0"
    items = sorted(e.terms.items(), key=lambda kv: table.index[kv[0]])
    return " + ".join(f"{e.ring.format(c)}*{format_word(w, names)}" for w, c in items)


def structure_product(pres, u: tuple, v: tuple, m: int) -> tuple:
    """m-product of two coordinate vectors of the presented algebra."""
    ring = pres.ring
    out = [ring.zero] * pres.dim
    mul = pres.mul
    for i, ci in enumerate(u):
        if not ci:
            continue
        for j, cj in enumerate(v):
            if not cj:
                continue
            vec = mul.get((m, i, j))
            if vec is None:
                continue
            f = ring.mul(ci, cj)
            for k, sk in enumerate(vec):
                if sk:
                    out[k] = ring.add(out[k], ring.mul(f, sk))
    return tuple(out)


def eta_evaluate(w: Word, pres, memo: dict | None = None) -> tuple:
    """Image of a word under the evaluation homomorphism into the presented algebra.

    Leaves go to the presentation's generators; nodes recurse through the
    structure constants. Memoized on interned words (shared subtrees dominate
    at larger lengths), held in the presentation unless a memo is supplied.
    """
    if memo is None:
        memo = pres.eta_cache
    got = memo.get(w)
    if got is not None:
        return got
    if w.is_leaf:
        ring = pres.ring
        vec = [ring.zero] * pres.dim
        vec[pres.gens[w.gen - 1]] = ring.one
        out = tuple(vec)
    else:
        out = structure_product(pres,
                                eta_evaluate(w.left, pres, memo),
                                eta_evaluate(w.right, pres, memo),
                                w.label)
    memo[w] = out
    return out


def eta_element(e: FreeElement, pres) -> tuple:
    ring = pres.ring
    out = [ring.zero] * pres.dim
    for w, c in e.terms.items():
        for k, x in enumerate(eta_evaluate(w, pres)):
            if x:
                out[k] = ring.add(out[k], ring.mul(c, x))
    return tuple(out)


def eta_matrix(pres, max_length: int, cap: int | None = None) -> tuple[list[list], WordTable]:
    """Dense matrix of the evaluation map on the truncated word basis.

    Rows are indexed by the presentation basis, columns by words of length
    <= max_length in canonical order.
    """
    from .words import DEFAULT_WORD_CAP, enumerate_words

    table = enumerate_words(pres.universe, max_length,
                            cap if cap is not None else DEFAULT_WORD_CAP)
    cols = [eta_evaluate(w, pres) for w in table.words]
    rows = [[col[i] for col in cols] for i in range(pres.dim)]
    return rows, table
