import random

import pytest

from autalg.autscheme import (check_point, generic_image, ideal_generators,
                              kernel_basis, locus_points, theta_tilde_word)
from autalg.errors import GradingViolation, TruncationTooShort
from autalg.freealg import FreeElement, eta_element
from autalg.poly import Polynomial, format_poly, parse_poly
from autalg.presentation import base_change, parse
from autalg.rings import GF, QQ
from autalg.words import Universe, enumerate_words

F3 = GF(3)


def poly_set(system):
    return {format_poly(g) for g in system.generators}


def test_generic_image_leaf():
    u = Universe(2, [0])
    gi = generic_image(u.leaf(2), u, QQ)
    assert gi.coeffs == {
        u.leaf(1): Polynomial.variable(QQ, 2, 1, 2),
        u.leaf(2): Polynomial.variable(QQ, 2, 2, 2),
    }


def test_generic_image_square():
    u = Universe(2, [0])
    x1, x2 = u.leaf(1), u.leaf(2)
    gi = generic_image(u.node(x1, 0, x1), u, QQ)
    X = lambda i, j: Polynomial.variable(QQ, 2, i, j)
    assert gi.coeffs == {
        u.node(x1, 0, x1): X(1, 1).mul(X(1, 1)),
        u.node(x1, 0, x2): X(1, 1).mul(X(2, 1)),
        u.node(x2, 0, x1): X(2, 1).mul(X(1, 1)),
        u.node(x2, 0, x2): X(2, 1).mul(X(2, 1)),
    }


def test_generic_image_at_identity_is_indicator():
    u = Universe(2, [0, 1])
    table = enumerate_words(u, 3)
    ident = [[QQ.one, QQ.zero], [QQ.zero, QQ.one]]
    for w in table.words:
        gi = generic_image(w, u, QQ, cache={})
        for b, q in gi.coeffs.items():
            assert b.length == w.length
            assert q.evaluate(ident, QQ.one) == (1 if b is w else 0)


def test_generic_image_homogeneous():
    u = Universe(2, [0, 1])
    table = enumerate_words(u, 4)
    cache = {}
    for w in table.words:
        gi = generic_image(w, u, GF(5), cache)
        for q in gi.coeffs.values():
            for mono in q.terms:
                assert sum(mono[:-1]) == w.length and mono[-1] == 0


def test_two_path_agreement():
    # generic-image evaluation must equal direct recursive substitution
    u = Universe(2, [0, 1])
    table = enumerate_words(u, 4)
    f5 = GF(5)
    rng = random.Random(5)
    for _ in range(10):
        theta = [[rng.randrange(5) for _ in range(2)] for _ in range(2)]
        memo = {}
        cache = {}
        for w in table.words:
            direct = theta_tilde_word(theta, w, u, f5, memo)
            gi = generic_image(w, u, f5, cache)
            summed = FreeElement(f5)
            for b, q in gi.coeffs.items():
                summed.add_term(b, q.evaluate(theta, f5.one))
            assert summed == direct


def test_kernel_basis_p0(p0):
    kb = kernel_basis(p0, 2)
    words = kb.table.words
    assert [set(v.terms) for v in kb.vectors] == [{w} for w in words[2:]]


def test_kernel_basis_p2(p2):
    kb = kernel_basis(p2, 2)
    u = p2.universe
    x, y = u.leaf(1), u.leaf(2)
    supports = [dict(v.terms) for v in kb.vectors]
    assert supports == [
        {u.node(x, 0, x): 1, y: 2},   # x0x - y over F_3
        {u.node(x, 0, y): 1},
        {u.node(y, 0, x): 1},
        {u.node(y, 0, y): 1},
    ]


def test_kernel_basis_pv(pv3):
    kb = kernel_basis(pv3, 2)
    u = pv3.universe
    vac = u.leaf(1)
    assert [dict(v.terms) for v in kb.vectors] == \
        [{u.node(vac, -1, vac): 1, vac: 2}]


def test_kernel_vectors_evaluate_to_zero():
    for name in ("p0_f2.malg", "p2_f3.malg", "pv_f3.malg", "p1_q.malg"):
        from conftest import load
        pres = load(name)
        kb = kernel_basis(pres, 3)
        zero = tuple(pres.ring.zero for _ in range(pres.dim))
        assert kb.table.words
        expected = len(kb.table.words) - pres.dim
        assert len(kb.vectors) == expected
        for v in kb.vectors:
            assert eta_element(v, pres) == zero


def test_kernel_primitive_integer_over_q(p1):
    kb = kernel_basis(p1, 3)
    for v in kb.vectors:
        coeffs = list(v.terms.values())
        assert all(c.denominator == 1 for c in coeffs)
        from math import gcd
        g = 0
        for c in coeffs:
            g = gcd(g, int(c))
        assert g == 1


def test_truncation_too_short():
    pres = parse("ring Q\nproducts 0\nbasis x\nbasis y\nbasis z\ngenerators x\n"
                 "mul 0 x x = 1*y\nmul 0 y y = 1*z\n")
    with pytest.raises(TruncationTooShort):
        kernel_basis(pres, 3)


def test_ideal_p0_trivial(p0):
    system = ideal_generators(p0, 2, inverse=False)
    assert system.generators == []
    with_inv = ideal_generators(p0, 2)
    assert [format_poly(g) for g in with_inv.generators] == \
        ["1 * X_1_1 * X_2_2 * t + 1 * X_1_2 * X_2_1 * t + 1"]


def test_ideal_p2_generators(p2):
    system = ideal_generators(p2, 2, inverse=False)
    gens = poly_set(system)
    assert "2 * X_1_2" in gens                      # -X_12 over F_3
    assert "1 * X_1_1^2 + 2 * X_2_2" in gens        # X_11^2 - X_22
    assert "1 * X_1_1 * X_1_2" in gens


def test_ideal_pv_generators(pv3):
    system = ideal_generators(pv3, 2, fixed=True)
    gens = poly_set(system)
    assert "1 * X_1_1^2 + 2 * X_1_1" in gens        # X_11^2 - X_11
    assert "1 * X_1_1 + 2" in gens                  # X_11 - 1


def test_ideal_identity_vanishes():
    from conftest import CORPUS, load
    for path in CORPUS:
        pres = load(path.name)
        fixed = bool(pres.fixed)
        system = ideal_generators(pres, 3, fixed=fixed)
        n = system.n
        ident = [[pres.ring.one if i == j else pres.ring.zero
                  for j in range(n)] for i in range(n)]
        for g in system.generators:
            assert g.evaluate(ident, pres.ring.one) == pres.ring.zero
        assert check_point(system, ident)


def test_ideal_degree_bound(p2):
    system = ideal_generators(p2, 3, inverse=False)
    # forward conditions from a length-k kernel vector have total degree <= k
    for g in system.generators:
        assert g.total_degree() <= 3


def test_check_point_examples(p2):
    system = ideal_generators(p2, 2)
    assert check_point(system, [[2, 0], [1, 1]])
    assert not check_point(system, [[1, 1], [0, 1]])
    assert not check_point(system, [[1, 0], [0, 0]])  # singular


def test_locus_group_law(p2):
    system = ideal_generators(p2, 2)
    pts = locus_points(system)
    assert len(pts) == 6
    mats = set(pts)
    f3 = GF(3)

    def matmul(a, b):
        return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) % 3
                           for j in range(2)) for i in range(2))

    ident = ((1, 0), (0, 1))
    assert ident in mats
    for a in mats:
        for b in mats:
            assert matmul(a, b) in mats
        from autalg import linalg
        inv = linalg.inverse(f3, [list(r) for r in a])
        assert tuple(tuple(r) for r in inv) in mats


def test_graded_soundness(p2graded):
    plain = ideal_generators(p2graded, 2)
    graded = ideal_generators(p2graded, 2, graded=True)
    pts_plain = set(locus_points(plain))
    pts_graded = set(locus_points(graded))
    block = {pt for pt in pts_plain if pt[0][1] == 0 and pt[1][0] == 0}
    assert pts_graded == block
    assert pts_graded == {((1, 0), (0, 1)), ((2, 0), (0, 1))}


def test_truncation_monotonicity(p2):
    s2 = ideal_generators(p2, 2)
    s3 = ideal_generators(p2, 3)
    pts2 = set(locus_points(s2))
    pts3 = set(locus_points(s3))
    assert pts3 <= pts2
    assert pts3 == pts2  # stabilized already at L = 2


def test_base_change_naturality(p2q):
    p = 3
    sq = ideal_generators(p2q, 2)
    native = ideal_generators(base_change(p2q, p), 2)
    f3 = GF(3)
    from autalg.rings import reduce_mod_p
    from autalg.autscheme import IdealSystem
    reduced = IdealSystem(sq.n, f3, sq.max_length, sq.graded, sq.fixed,
                          sq.inverse,
                          [Polynomial(f3, sq.n,
                                      {m: r for m, c in g.terms.items()
                                       if (r := reduce_mod_p(c, p))})
                           for g in sq.generators])
    assert set(locus_points(reduced)) == set(locus_points(native))


def test_graded_option_requires_grading(p2):
    with pytest.raises(GradingViolation):
        ideal_generators(p2, 2, graded=True)


def test_meta_line(p2):
    system = ideal_generators(p2, 2, fixed=False)
    assert system.meta_line() == \
        "# meta N=2 ring=Fp 3 L=2 graded=off fixed=off inverse=on"


def test_forward_vs_inverse_loci_agree(p2, pv3):
    # open question probe: over the worked examples the forward conditions
    # alone already cut the same set of points
    for pres in (p2, pv3):
        fwd = ideal_generators(pres, 2, inverse=False)
        both = ideal_generators(pres, 2, inverse=True)
        assert set(locus_points(fwd)) == set(locus_points(both))
