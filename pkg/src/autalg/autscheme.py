"""Defining equations of the automorphism group scheme inside GL_N.

The generic matrix acts on words through coefficient polynomials (one
monomial per same-shape word); the truncated kernel of the evaluation map
then yields the polynomial conditions cutting the automorphism locus out of
GL_N, optionally restricted to graded automorphisms or to automorphisms
fixing distinguished vectors.  Inverse conditions are phrased through the
auxiliary variable t via theta^{-1} = t * adj(theta), t * det(theta) = 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .errors import BudgetExceeded, GradingViolation, TruncationTooShort
from .freealg import FreeElement, eta_evaluate, eta_matrix, m_product
from .poly import Polynomial, adjugate, generic_matrix
from .poly import determinant as poly_determinant
from .presentation import Presentation
from .rings import Ring
from .words import DEFAULT_WORD_CAP, Universe, Word, WordTable


@dataclass
class GenericImage:
    """Image of a word under the generic matrix action: same-length word ->
    coefficient polynomial (a single monomial of degree = word length)."""

    word: Word
    coeffs: dict[Word, Polynomial]


def generic_image(w: Word, universe: Universe, ring: Ring,
                  cache: dict | None = None) -> GenericImage:
    """Coefficient polynomials of the generic-matrix image of a word.

    A leaf expands into all leaves with matrix-entry coefficients; a node's
    coefficients are products of its children's, landing on the node with
    the same label.  Memoized over interned subwords.
    """
    if cache is not None:
        got = cache.get(w)
        if got is not None:
            return got
    n = universe.num_gens
    coeffs: dict[Word, Polynomial] = {}
    if w.is_leaf:
        for i in range(1, n + 1):
            coeffs[universe.leaf(i)] = Polynomial.variable(ring, n, i, w.gen)
    else:
        gl = generic_image(w.left, universe, ring, cache)
        gr = generic_image(w.right, universe, ring, cache)
        m = w.label
        node = universe.node
        for b, qb in gl.coeffs.items():
            for c, qc in gr.coeffs.items():
                coeffs[node(b, m, c)] = qb.mul(qc)
    out = GenericImage(w, coeffs)
    if cache is not None:
        cache[w] = out
    return out


def theta_tilde_word(theta: list[list], w: Word, universe: Universe,
                     ring: Ring, memo: dict | None = None) -> FreeElement:
    """Image of a word under the lifted automorphism of a concrete matrix,
    computed by direct recursive substitution (independent of generic_image)."""
    if memo is None:
        memo = {}
    got = memo.get(w)
    if got is not None:
        return got
    if w.is_leaf:
        j = w.gen
        e = FreeElement(ring)
        for i in range(1, universe.num_gens + 1):
            e.add_term(universe.leaf(i), theta[i - 1][j - 1])
    else:
        e = m_product(theta_tilde_word(theta, w.left, universe, ring, memo),
                      theta_tilde_word(theta, w.right, universe, ring, memo),
                      w.label, universe)
    memo[w] = e
    return e


@dataclass
class KernelBasis:
    """Reduced-echelon basis of the truncated kernel of the evaluation map."""

    max_length: int
    vectors: list[FreeElement]
    table: WordTable


def kernel_basis(pres: Presentation, max_length: int,
                 cap: int = DEFAULT_WORD_CAP) -> KernelBasis:
    """Truncated kernel of the evaluation map, reduced echelon in canonical
    column order; over the rationals, vectors are rescaled to primitive
    integer form."""
    section = pres.generation_closure(cap)
    if section.max_length > max_length:
        raise TruncationTooShort(
            f"generation needs words of length {section.max_length}, "
            f"truncation is {max_length}")
    ring = pres.ring
    rows, table = eta_matrix(pres, max_length, cap)
    red, pivots = linalg.rref(ring, rows)
    pivot_set = set(pivots)
    words = table.words
    vectors = []
    for c in range(len(words)):
        if c in pivot_set:
            continue
        entries = [(c, ring.one)]
        entries.extend((pc, ring.neg(red[r][c]))
                       for r, pc in enumerate(pivots) if red[r][c])
        entries.sort()
        if ring.p is None:
            scaled = linalg.primitive_integer([x for _, x in entries])
            entries = [(i, x) for (i, _), x in zip(entries, scaled)]
        e = FreeElement(ring)
        for i, x in entries:
            e.terms[words[i]] = x
        vectors.append(e)
    return KernelBasis(max_length, vectors, table)


@dataclass
class IdealSystem:
    """Ordered polynomial generators cutting the automorphism locus out of GL_N."""

    n: int
    ring: Ring
    max_length: int
    graded: bool
    fixed: bool
    inverse: bool
    generators: list[Polynomial]
    _checkers: list = field(default=None, repr=False, compare=False)

    def meta_line(self) -> str:
        opts = " ".join(f"{name}={'on' if val else 'off'}"
                        for name, val in (("graded", self.graded),
                                          ("fixed", self.fixed),
                                          ("inverse", self.inverse)))
        return f"# meta N={self.n} ring={self.ring} L={self.max_length} {opts}"


def _coordinate_polys(element: FreeElement, pres: Presentation,
                      gcache: dict) -> list[Polynomial]:
    """Coordinates in the presented algebra of the evaluated generic image of
    a free element: one polynomial per basis element."""
    ring, n = pres.ring, pres.num_gens
    add, mul = ring.add, ring.mul
    acc: list[dict] = [{} for _ in range(pres.dim)]
    for w, alpha in element.terms.items():
        gi = generic_image(w, pres.universe, ring, gcache)
        for b, q in gi.coeffs.items():
            img = eta_evaluate(b, pres)
            for ell, x in enumerate(img):
                if not x:
                    continue
                f = mul(alpha, x)
                terms = acc[ell]
                for mono, c in q.terms.items():
                    cur = terms.get(mono)
                    s = mul(f, c) if cur is None else add(cur, mul(f, c))
                    if s:
                        terms[mono] = s
                    elif cur is not None:
                        del terms[mono]
    return [Polynomial(ring, n, terms) for terms in acc]


def ideal_generators(pres: Presentation, max_length: int, *,
                     graded: bool = False, fixed: bool = False,
                     inverse: bool = True,
                     cap: int = DEFAULT_WORD_CAP) -> IdealSystem:
    """Assemble the defining equations of the automorphism locus.

    Block order: kernel-preservation conditions (kernel vectors in canonical
    order, coordinates in basis order), then graded entry conditions, then
    fixed-vector conditions, then the kernel conditions composed with
    t * adj(theta) followed by t * det(theta) - 1.  Exact zeros and
    duplicates are dropped; nothing else is minimized.
    """
    ring, n = pres.ring, pres.num_gens
    kb = kernel_basis(pres, max_length, cap)
    gcache: dict = {}

    forward: list[Polynomial] = []
    for vec in kb.vectors:
        forward.extend(_coordinate_polys(vec, pres, gcache))

    gens: list[Polynomial] = list(forward)

    if graded:
        if pres.degrees is None:
            raise GradingViolation("graded option requires a graded presentation")
        gd = pres.gen_degrees
        for i in range(n):
            for j in range(n):
                if gd[i] != gd[j]:
                    gens.append(Polynomial.variable(ring, n, i + 1, j + 1))

    if fixed:
        section = pres.generation_closure(cap)
        if section.max_length > max_length:
            raise TruncationTooShort(
                f"section needs words of length {section.max_length}, "
                f"truncation is {max_length}")
        for v in pres.fixed:
            sigma = FreeElement(ring)
            for i, c in enumerate(v):
                if c:
                    sigma = sigma.add(section.elements[i].scale(c))
            coords = _coordinate_polys(sigma, pres, gcache)
            for ell, c in enumerate(v):
                gens.append(coords[ell].sub(Polynomial.constant(ring, n, c)))

    if inverse:
        gm = generic_matrix(ring, n)
        adj = adjugate(gm)
        t = Polynomial.t_var(ring, n)
        entries = [t.mul(adj[i][j]) for i in range(n) for j in range(n)]
        composed: dict = {}
        for g in forward:
            key = g.key()
            if key not in composed:
                composed[key] = g.substitute(entries)
            gens.append(composed[key])
        det = poly_determinant(gm)
        gens.append(t.mul(det).sub(Polynomial.constant(ring, n, ring.one)))

    seen = set()
    unique = []
    for g in gens:
        if not g:
            continue
        key = g.key()
        if key in seen:
            continue
        seen.add(key)
        unique.append(g)
    return IdealSystem(n, ring, max_length, graded, fixed, inverse, unique)


# -- point membership ----------------------------------------------------------


def _det_flat(flat: tuple, n: int, p: int) -> int:
    if n == 1:
        return flat[0] % p
    if n == 2:
        return (flat[0] * flat[3] - flat[1] * flat[2]) % p
    if n == 3:
        a, b, c, d, e, f, g, h, i = flat
        return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p
    from .rings import GF
    ring = GF(p)
    rows = [[flat[r * n + col] for col in range(n)] for r in range(n)]
    return linalg.det(ring, rows)


def _poly_expr(g: Polynomial) -> str:
    parts = []
    for mono, c in g.terms.items():
        factors = [str(c)]
        for idx, e in enumerate(mono[:-1]):
            factors.append(f"f[{idx}]" if e == 1 else f"f[{idx}]**{e}")
        if mono[-1]:
            factors.append("tv" if mono[-1] == 1 else f"tv**{mono[-1]}")
        parts.append("*".join(factors))
    return " + ".join(parts) if parts else "0"


def _compiled_checkers(system: IdealSystem) -> list:
    """Generated vanishing tests over a prime field, ~80 generators each."""
    funcs = []
    lines = []

    def flush():
        if not lines:
            return
        src = "def _chk(f, tv, p):\n" + "\n".join(lines) + "\n    return True\n"
        ns: dict = {}
        exec(src, ns)  # noqa: S102 - generated from our own polynomials
        funcs.append(ns["_chk"])
        lines.clear()

    for g in system.generators:
        lines.append(f"    if ({_poly_expr(g)}) % p: return False")
        if len(lines) >= 80:
            flush()
    flush()
    return funcs


def check_point(system: IdealSystem, theta: list[list]) -> bool:
    """True iff theta is invertible and every generator vanishes at theta
    (with t bound to 1/det(theta))."""
    ring, n = system.ring, system.n
    d = linalg.det(ring, theta)
    if not d:
        return False
    tv = ring.invert(d)
    return all(not g.evaluate(theta, tv) for g in system.generators)


def locus_points(system: IdealSystem, budget: int = 10**8) -> list[tuple]:
    """All invertible matrices over the prime field at which every generator
    vanishes, in lexicographic (row-major) order."""
    p = system.ring.p
    if p is None:
        raise ValueError("locus enumeration requires a prime field")
    n = system.n
    if p ** (n * n) > budget:
        raise BudgetExceeded(f"{p}^{n * n} points exceeds budget {budget}")
    if system._checkers is None:
        system._checkers = _compiled_checkers(system)
    checkers = system._checkers
    points = []
    pm2 = p - 2
    for flat in itertools.product(range(p), repeat=n * n):
        d = _det_flat(flat, n, p)
        if not d:
            continue
        tv = pow(d, pm2, p)
        if all(fn(flat, tv, p) for fn in checkers):
            points.append(tuple(tuple(flat[i * n + j] for j in range(n))
                                for i in range(n)))
    return points
