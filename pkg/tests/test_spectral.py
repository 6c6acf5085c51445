from fractions import Fraction

import pytest
from mpmath import mp, mpf, sqrt

from convexcount.exact import HTMatrix, IntPolynomial, charpoly_determinant
from convexcount.production import (
    build_connected_matrix,
    build_geometric_matrix,
    build_k_angulation_matrix,
    build_partition_matrix,
    build_relation_matrix,
    connected_totals,
)
from convexcount.spectral import (
    charpoly_closed_connected,
    charpoly_closed_geometric,
    charpoly_closed_kangulation,
    charpoly_closed_partition,
    charpoly_recurrence,
    dominant_eigenvalue,
    eigenvector_from_charpoly,
    precision_bits,
    real_roots,
)

GOLD_GEOMETRIC = {
    1: (2, -1),
    2: (-4, -4, 1),
    3: (8, 4, 6, -1),
    4: (-16, 0, 0, -8, 1),
    5: (32, -16, -16, -8, 10, -1),
    6: (-64, 64, 48, 32, 20, -12, 1),
}
GOLD_CONNECTED = {
    1: (3, -1),
    2: (2, -6, 1),
    3: (0, -13, 9, -1),
    4: (0, -12, 33, -12, 1),
    5: (0, -4, 63, -62, 15, -1),
    6: (0, 0, 66, -180, 100, -18, 1),
}
GOLD_PARTITION = {
    1: (0, -1),
    2: (-1, 0, 1),
    3: (2, 2, 0, -1),
    4: (-3, -4, -3, 0, 1),
    5: (4, 5, 6, 4, 0, -1),
    6: (-5, -4, -6, -8, -5, 0, 1),
}


def test_recurrence_golden_tables():
    gs = charpoly_recurrence(build_geometric_matrix(6))
    cs = charpoly_recurrence(build_connected_matrix(6))
    bs = charpoly_recurrence(build_partition_matrix(6))
    for n in range(1, 7):
        assert gs[n].coeffs == GOLD_GEOMETRIC[n]
        assert cs[n].coeffs == GOLD_CONNECTED[n]
        assert bs[n].coeffs == GOLD_PARTITION[n]
    assert gs[0] == IntPolynomial.one()


def test_recurrence_structure_invariants():
    for seq in (
        charpoly_recurrence(build_geometric_matrix(10)),
        charpoly_recurrence(build_k_angulation_matrix(4, 10)),
        charpoly_recurrence(build_relation_matrix(10, connected_totals(10))),
    ):
        for i, poly in enumerate(seq.polys):
            assert poly.degree == i
            assert poly.leading == (-1) ** i if i else poly == IntPolynomial.one()


def test_recurrence_rejects_non_toeplitz():
    m = HTMatrix(3, 1, (1, 1, 1), row0=(9, 9, 9))
    with pytest.raises(ValueError):
        charpoly_recurrence(m)


def test_closed_forms_match_golden_tables():
    for n in range(1, 7):
        assert charpoly_closed_geometric(n).coeffs == GOLD_GEOMETRIC[n]
        assert charpoly_closed_connected(n).coeffs == GOLD_CONNECTED[n]
        assert charpoly_closed_partition(n).coeffs == GOLD_PARTITION[n]


def test_closed_form_initial_conditions():
    assert charpoly_closed_kangulation(3, 0) == IntPolynomial.one()
    assert charpoly_closed_geometric(0) == IntPolynomial.one()
    assert charpoly_closed_connected(0) == IntPolynomial.one()
    assert charpoly_closed_partition(0) == IntPolynomial.one()


def test_closed_kangulation_small():
    assert charpoly_closed_kangulation(3, 2).coeffs == (0, -2, 1)
    assert charpoly_closed_kangulation(4, 1).coeffs == (2, -1)
    assert charpoly_determinant(build_k_angulation_matrix(3, 2)).coeffs == (0, -2, 1)


def test_triple_agreement_to_8():
    builders = [
        lambda n: build_k_angulation_matrix(3, n),
        lambda n: build_k_angulation_matrix(4, n),
        build_geometric_matrix,
        build_connected_matrix,
        build_partition_matrix,
        lambda n: build_relation_matrix(n, connected_totals(max(2, n))),
    ]
    for build in builders:
        seq = charpoly_recurrence(build(8))
        for n in range(1, 9):
            assert charpoly_determinant(build(n)) == seq[n]


def test_closed_equals_recurrence_to_20():
    gs = charpoly_recurrence(build_geometric_matrix(20))
    cs = charpoly_recurrence(build_connected_matrix(20))
    bs = charpoly_recurrence(build_partition_matrix(20))
    for n in range(21):
        assert charpoly_closed_geometric(n) == gs[n]
        assert charpoly_closed_connected(n) == cs[n]
        assert charpoly_closed_partition(n) == bs[n]
    for k in (3, 4, 5, 6):
        ks = charpoly_recurrence(build_k_angulation_matrix(k, 20))
        for r in range(21):
            assert charpoly_closed_kangulation(k, r) == ks[r]


def test_real_roots_known_polynomials():
    # x^2 - 4x - 4 has roots 2 +- 2*sqrt(2)
    roots = real_roots(IntPolynomial((-4, -4, 1)), Fraction(1, 10**30))
    assert len(roots) == 2
    with mp.workprec(200):
        lo, hi = (mpf(r.numerator) / r.denominator for r in roots)
        assert abs(lo - (2 - 2 * sqrt(2))) < mpf(10) ** -29
        assert abs(hi - (2 + 2 * sqrt(2))) < mpf(10) ** -29


def test_real_roots_exact_and_multiplicity():
    # x^2 (x - 2) has distinct roots {0, 2}, found exactly
    p = IntPolynomial((0, 0, -2, 1))
    assert real_roots(p) == [Fraction(0), Fraction(2)]
    assert real_roots(IntPolynomial((0, -1))) == [Fraction(0)]
    with pytest.raises(ValueError):
        real_roots(IntPolynomial.zero())


def test_real_roots_no_real():
    assert real_roots(IntPolynomial((1, 0, 1))) == []


def test_eigenvector_g2():
    g2 = build_geometric_matrix(2)
    with mp.workprec(precision_bits()):
        lam = 2 + 2 * sqrt(2)
    pair = eigenvector_from_charpoly(g2, lam)
    with mp.workprec(precision_bits()):
        assert abs(pair.vector[0] - sqrt(2)) < mpf(10) ** -70
        assert pair.vector[1] == 1
        assert pair.residual < mpf(10) ** -12


def test_eigenvector_non_eigenvalue_large_residual():
    g2 = build_geometric_matrix(2)
    pair = eigenvector_from_charpoly(g2, mpf(3))
    assert pair.residual > mpf("0.1")


def test_eigenvector_k3_largest_root():
    k3 = build_k_angulation_matrix(3, 3)
    lam = dominant_eigenvalue(k3, Fraction(1, 10**30))
    pair = eigenvector_from_charpoly(k3, lam)
    assert pair.residual < mpf(10) ** -10


def test_eigenvector_sign_patterns():
    # subdiagonal 1 gives x_i = (-1)^i d_i(lam); subdiagonal 2 gives (-1/2)^i g_i(lam)
    c4 = build_connected_matrix(4)
    lam = dominant_eigenvalue(c4, Fraction(1, 10**35))
    seq = charpoly_recurrence(c4)
    pair = eigenvector_from_charpoly(c4, lam)
    with mp.workprec(precision_bits()):
        for i in range(4):
            expect = (-1) ** i * seq[i](pair.lam)
            assert abs(pair.vector[3 - i] - expect) < mpf(10) ** -40
    g4 = build_geometric_matrix(4)
    lam = dominant_eigenvalue(g4, Fraction(1, 10**35))
    seq = charpoly_recurrence(g4)
    pair = eigenvector_from_charpoly(g4, lam)
    with mp.workprec(precision_bits()):
        for i in range(4):
            expect = (mpf(-1) / 2) ** i * seq[i](pair.lam)
            assert abs(pair.vector[3 - i] - expect) < mpf(10) ** -40


def test_eigenvector_requires_nonzero_subdiagonal():
    m = HTMatrix(2, 0, (1, 1))
    with pytest.raises(ValueError):
        eigenvector_from_charpoly(m, mpf(1))


def test_dominant_eigenvalue_examples():
    assert dominant_eigenvalue(build_geometric_matrix(1)) == 2
    d4 = dominant_eigenvalue(build_geometric_matrix(4), Fraction(1, 10**40))
    assert 8 < d4 < 9
    p = IntPolynomial((-16, 0, 0, -8, 1))
    with mp.workprec(precision_bits()):
        assert abs(p(d4)) < mpf(10) ** -30


def test_dominant_eigenvalue_kangulation_monotone():
    prev = mpf(0)
    for r in range(1, 11):
        d = dominant_eigenvalue(build_k_angulation_matrix(3, r), Fraction(1, 10**35))
        assert prev < d < 4
        prev = d


def test_dominant_eigenvalue_geometric_monotone_tracks_growth():
    values = [
        dominant_eigenvalue(build_geometric_matrix(n), Fraction(1, 10**35))
        for n in range(1, 8)
    ]
    assert all(a < b for a, b in zip(values, values[1:]))
    # count growth ratios climb alongside the eigenvalues (trend only)
    from convexcount.production import count_sequence, geometric_class

    totals = [row.total for row in count_sequence(geometric_class(), 10)]
    ratios = [Fraction(b, a) for a, b in zip(totals, totals[1:])]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert float(ratios[-1]) < float(values[-1])


def test_precision_env(monkeypatch):
    monkeypatch.setenv("CONVEX_COUNT_PRECISION", "128")
    assert precision_bits() == 128
    monkeypatch.setenv("CONVEX_COUNT_PRECISION", "12")
    with pytest.raises(ValueError):
        precision_bits()
    monkeypatch.setenv("CONVEX_COUNT_PRECISION", "abc")
    with pytest.raises(ValueError):
        precision_bits()
    monkeypatch.delenv("CONVEX_COUNT_PRECISION")
    assert precision_bits() == 256
