import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import bareiss_det, ffge_rank, matmul, minor_gcd_invariants
from zipchow.errors import MatrixCapExceeded
from zipchow.zlinalg import (
    AbelianGroup,
    GradedAbelianGroup,
    SmithForm,
    cokernel,
    matrix_cap,
    normalize_torsion,
    rational_rank,
    smith_normal_form,
)


@st.composite
def int_matrices(draw, max_dim=5, bound=9):
    nr = draw(st.integers(0, max_dim))
    nc = draw(st.integers(0, max_dim))
    return [
        [draw(st.integers(-bound, bound)) for _ in range(nc)] for _ in range(nr)
    ]


def diagonal_from(invariants, nr, nc):
    d = [[0] * nc for _ in range(nr)]
    for i, val in enumerate(invariants):
        d[i][i] = val
    return d


class TestSmithExamples:
    def test_identity(self):
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert smith_normal_form(eye).invariants == (1, 1, 1)

    def test_diag_2_3(self):
        m = [[2, 0], [0, 3]]
        assert smith_normal_form(m).invariants == (1, 6)
        assert minor_gcd_invariants(m) == (1, 6)

    def test_relation_lattice(self):
        m = [[2, 2, 0], [0, 2, 2], [0, 8, 0]]
        assert smith_normal_form(m).invariants == (2, 2, 8)
        assert minor_gcd_invariants(m) == (2, 2, 8)

    def test_empty(self):
        assert smith_normal_form([]).invariants == ()

    def test_zero_matrix(self):
        assert smith_normal_form([[0, 0], [0, 0]]).invariants == ()

    def test_ragged_rejected(self):
        with pytest.raises(ValueError):
            smith_normal_form([[1, 2], [3]])


class TestSmithProperties:
    @given(int_matrices())
    @settings(max_examples=120, deadline=None)
    def test_certificates_and_chain(self, m):
        nr, nc = len(m), len(m[0]) if m else 0
        form = smith_normal_form(m, with_certificates=True)
        # divisibility chain (validated on construction as well)
        for a, b in zip(form.invariants, form.invariants[1:]):
            assert b % a == 0
        # U * A * V equals the diagonal form
        u = [list(r) for r in form.left]
        v = [list(r) for r in form.right]
        if nr and nc:
            assert matmul(matmul(u, m), v) == diagonal_from(form.invariants, nr, nc)
        # transformations are unimodular (empty determinant is 1)
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1

    @given(int_matrices(max_dim=4, bound=7))
    @settings(max_examples=80, deadline=None)
    def test_matches_minor_gcd_oracle(self, m):
        assert smith_normal_form(m).invariants == minor_gcd_invariants(m)


class TestCokernel:
    def test_picard_shape(self):
        # the (p-1, p-1) relation at p = 3 in ambient rank 2
        assert cokernel([(2, 2)], 2) == AbelianGroup(1, (2,))

    def test_zero_ideal(self):
        assert cokernel([], 3) == AbelianGroup(3, ())

    def test_full_torsion(self):
        m = [[2, 2, 0], [0, 2, 2], [0, 8, 0]]
        assert cokernel(m, 3) == AbelianGroup(0, (2, 2, 8))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="ambient"):
            cokernel([[1, 2, 3]], 2)

    @given(int_matrices(max_dim=4, bound=6), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_lattice_invariance(self, m, rng):
        if not m:
            return
        ambient = len(m[0])
        base = cokernel(m, ambient)
        # row permutation
        shuffled = list(m)
        rng.shuffle(shuffled)
        assert cokernel(shuffled, ambient) == base
        # row negation
        i = rng.randrange(len(m))
        negated = [([-x for x in row] if k == i else row) for k, row in enumerate(m)]
        assert cokernel(negated, ambient) == base
        # adding one row to another
        if len(m) >= 2:
            i, j = rng.sample(range(len(m)), 2)
            added = [list(row) for row in m]
            added[i] = [a + b for a, b in zip(added[i], added[j])]
            assert cokernel(added, ambient) == base


class TestRationalRank:
    def test_examples(self):
        assert rational_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
        assert rational_rank([[0] * 5, [0] * 5]) == 0
        assert rational_rank([[2, 2, 0], [0, 2, 2], [0, 8, 0]]) == 3

    @given(int_matrices())
    @settings(max_examples=100, deadline=None)
    def test_matches_fraction_free_elimination(self, m):
        assert rational_rank(m) == ffge_rank(m)


class TestMatrixCap:
    def test_default(self, monkeypatch):
        monkeypatch.delenv("ZIPCHOW_MATRIX_CAP", raising=False)
        assert matrix_cap() == 2000

    def test_override_blocks_large_input(self, monkeypatch):
        monkeypatch.setenv("ZIPCHOW_MATRIX_CAP", "4")
        m = [[1] * 5 for _ in range(5)]
        with pytest.raises(MatrixCapExceeded):
            smith_normal_form(m)

    def test_bad_env_value(self, monkeypatch):
        monkeypatch.setenv("ZIPCHOW_MATRIX_CAP", "many")
        with pytest.raises(ValueError):
            matrix_cap()
        monkeypatch.setenv("ZIPCHOW_MATRIX_CAP", "0")
        with pytest.raises(ValueError):
            matrix_cap()


class TestGroupTypes:
    def test_abelian_group_validation(self):
        with pytest.raises(ValueError):
            AbelianGroup(-1, ())
        with pytest.raises(ValueError):
            AbelianGroup(0, (1,))
        with pytest.raises(ValueError):
            AbelianGroup(0, (4, 2))

    def test_abelian_group_text(self):
        assert str(AbelianGroup(1, (2,))) == "Z + Z/2"
        assert str(AbelianGroup(0, (2, 2, 8))) == "Z/2 + Z/2 + Z/8"
        assert str(AbelianGroup(0, ())) == "0"

    def test_smith_form_validation(self):
        with pytest.raises(ValueError):
            SmithForm(invariants=(2, 3))
        with pytest.raises(ValueError):
            SmithForm(invariants=(0,))

    def test_graded_group(self):
        g = GradedAbelianGroup((AbelianGroup(1, ()), AbelianGroup(0, (3,))))
        assert g.max_degree == 1
        assert g.degree(1) == AbelianGroup(0, (3,))
        assert g.free_ranks() == [1, 0]
        with pytest.raises(IndexError):
            g.degree(2)

    def test_normalize_torsion(self):
        assert normalize_torsion([6, 4]) == (2, 12)
        assert normalize_torsion([2, 3]) == (6,)
        assert normalize_torsion([1, 1]) == ()
        assert normalize_torsion([2, 4, 8]) == (2, 4, 8)


def test_seeded_bulk_certificates():
    # dense deterministic sweep, independent of the hypothesis run
    rng = random.Random(20240817)
    for _ in range(100):
        nr = rng.randrange(1, 6)
        nc = rng.randrange(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(nc)] for _ in range(nr)]
        form = smith_normal_form(m, with_certificates=True)
        u = [list(r) for r in form.left]
        v = [list(r) for r in form.right]
        assert matmul(matmul(u, m), v) == diagonal_from(form.invariants, nr, nc)
        assert abs(bareiss_det(u)) == 1
        assert abs(bareiss_det(v)) == 1
