#include <widthk/linalg.hpp>
#include <widthk/rng.hpp>
#include <widthk/systems.hpp>

#include <gtest/gtest.h>

using namespace widthk;

TEST(Rational, ParseAndCanonicalize) {
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("5"), Rational(5));
    EXPECT_EQ(parse_rational("0"), Rational(0));
    EXPECT_EQ(to_string(parse_rational("-10/15")), "-2/3");
    EXPECT_EQ(to_string(Rational(7)), "7");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Rank, ZeroIdentityAndSegre) {
    EXPECT_EQ(rank(Matrix(4, 4)), 0u);
    EXPECT_EQ(rank(Matrix::identity(5)), 5u);
    EXPECT_EQ(rank(make_segre_fourfold().matrices[0].to_matrix()), 2u);
}

TEST(Rank, MatchesEchelonRank) {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t rows = 1 + rng.uniform(0, 5), cols = 1 + rng.uniform(0, 5);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = make_rational(static_cast<long>(rng.uniform(-4, 4)),
                                        static_cast<long>(rng.uniform(1, 5)));
        // plant zero columns to exercise the pivot-skip path
        for (std::size_t j = 0; j < cols; ++j)
            if (rng.uniform(0, 3) == 0)
                for (std::size_t i = 0; i < rows; ++i) m(i, j) = 0;
        EXPECT_EQ(rank(m), reduced_row_echelon(m).pivot_cols.size());
    }
}

TEST(Kernel, CoordinateCases) {
    EXPECT_EQ(kernel_basis(Matrix::identity(3)).dim(), 0u);

    SubspaceBasis full = kernel_basis(Matrix(3, 3));
    ASSERT_EQ(full.dim(), 3u);
    EXPECT_EQ(full.vectors[0], (Vector{1, 0, 0}));
    EXPECT_EQ(full.vectors[1], (Vector{0, 1, 0}));
    EXPECT_EQ(full.vectors[2], (Vector{0, 0, 1}));

    Matrix d(5, 5);
    d(0, 0) = 1;
    d(1, 1) = 1;
    SubspaceBasis k = kernel_basis(d);
    ASSERT_EQ(k.dim(), 3u);
    EXPECT_EQ(k.vectors[0], (Vector{0, 0, 1, 0, 0}));
    EXPECT_EQ(k.vectors[1], (Vector{0, 0, 0, 1, 0}));
    EXPECT_EQ(k.vectors[2], (Vector{0, 0, 0, 0, 1}));
}

TEST(Kernel, RankNullity) {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng.uniform(0, 4);
        const std::size_t r = 1 + rng.uniform(0, 3);
        std::vector<SymMatrix> ms;
        for (std::size_t i = 0; i < r; ++i) ms.push_back(random_symmetric(rng, n, 2));
        Matrix stacked(r * n, n);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) stacked(a * n + i, j) = ms[a](i, j);
        EXPECT_EQ(common_kernel(ms).dim() + rank(stacked), n);
    }
}

TEST(CommonKernel, Fixtures) {
    EXPECT_EQ(common_kernel(make_segre_fourfold().matrices).dim(), 0u);
    EXPECT_EQ(common_kernel(make_width3_triple(5, 7).matrices).dim(), 3u);
    std::vector<SymMatrix> with_id{SymMatrix::unit(4, 0, 0), SymMatrix::identity(4)};
    EXPECT_EQ(common_kernel(with_id).dim(), 0u);
    std::vector<SymMatrix> mismatched{SymMatrix::identity(3), SymMatrix::identity(4)};
    EXPECT_THROW(common_kernel(mismatched), std::invalid_argument);
}

TEST(Congruence, IdentityScalingPermutation) {
    Rng rng(3);
    SymMatrix h = random_symmetric(rng, 4, 3);
    EXPECT_EQ(congruence(Matrix::identity(4), h), h);

    Matrix d = Matrix::identity(3);
    d(0, 0) = 2;
    SymMatrix e11 = SymMatrix::unit(3, 0, 0);
    SymMatrix scaled = congruence(d, e11);
    EXPECT_EQ(scaled(0, 0), Rational(4));
    EXPECT_EQ(scaled, Rational(4) * e11);

    // permutation swapping rows 0 and 1 relabels the form
    Matrix p(3, 3);
    p(0, 1) = 1;
    p(1, 0) = 1;
    p(2, 2) = 1;
    SymMatrix g(3);
    g(0, 0) = 1;
    g(0, 1) = 2;
    g(1, 2) = 3;
    SymMatrix perm = congruence(p, g);
    EXPECT_EQ(perm(1, 1), Rational(1));
    EXPECT_EQ(perm(0, 1), Rational(2));
    EXPECT_EQ(perm(0, 2), Rational(3));

    EXPECT_THROW(congruence(Matrix::identity(3), SymMatrix::identity(4)), std::invalid_argument);
}

TEST(Congruence, RankInvarianceAndComposition) {
    Rng rng(5);
    std::vector<SymMatrix> fixtures{make_segre_fourfold().matrices[0], SymMatrix::identity(4),
                                    random_symmetric(rng, 4, 3)};
    for (const auto& h : fixtures) {
        const std::size_t base = rank(h.to_matrix());
        for (int t = 0; t < 100; ++t) {
            Matrix a = random_invertible(rng, 4, 3);
            EXPECT_EQ(rank(congruence(a, h).to_matrix()), base);
        }
    }
    for (int t = 0; t < 20; ++t) {
        Matrix a = random_matrix(rng, 4, 4, 3);
        Matrix b = random_matrix(rng, 4, 4, 3);
        SymMatrix h = random_symmetric(rng, 4, 3);
        EXPECT_EQ(congruence(a, congruence(b, h)), congruence(a * b, h));
    }
}

TEST(SpanRank, Fixtures) {
    EXPECT_EQ(span_rank(make_segre_fourfold().matrices), 4u);

    Rng rng(9);
    SymMatrix h = random_symmetric(rng, 4, 3);
    std::vector<SymMatrix> proportional{h, Rational(2) * h, Rational(3) * h};
    EXPECT_EQ(span_rank(proportional), 1u);

    EXPECT_EQ(span_rank(make_lower_bound_system(6, 4).matrices), 4u);
}

TEST(Subspace, CanonicalEquality) {
    // two generating sets of the same plane
    std::vector<Vector> g1{Vector{1, 1, 0}, Vector{0, 1, 1}};
    std::vector<Vector> g2{Vector{1, 2, 1}, Vector{2, 3, 1}};
    EXPECT_EQ(make_subspace(3, g1), make_subspace(3, g2));
    std::vector<Vector> g3{Vector{1, 0, 0}, Vector{0, 1, 1}};
    EXPECT_NE(make_subspace(3, g1), make_subspace(3, g3));

    SubspaceBasis plane = make_subspace(3, g1);
    EXPECT_TRUE(subspace_contains(plane, Vector{1, 2, 1}));
    EXPECT_FALSE(subspace_contains(plane, Vector{1, 0, 0}));
}

TEST(Restrict, CoordinateCases) {
    std::vector<SymMatrix> id{SymMatrix::identity(3)};
    std::vector<Vector> e12{Vector{1, 0, 0}, Vector{0, 1, 0}};
    auto restricted = restrict_to_hyperplane(id, e12);
    EXPECT_EQ(restricted[0], SymMatrix::identity(2));

    std::vector<SymMatrix> e11{SymMatrix::unit(3, 0, 0)};
    std::vector<Vector> e23{Vector{0, 1, 0}, Vector{0, 0, 1}};
    EXPECT_TRUE(restrict_to_hyperplane(e11, e23)[0].is_zero());

    std::vector<Vector> dependent{Vector{1, 1, 0}, Vector{2, 2, 0}};
    EXPECT_THROW(restrict_to_hyperplane(id, dependent), std::invalid_argument);
}

// Restriction to a generic hyperplane commutes with kernels: the kernel of
// the restricted form, mapped back into the ambient space, is ker(H) cap V'.
TEST(Restrict, KernelOfRestrictionIsIntersectedKernel) {
    Rng rng(21);
    const SymMatrix h = make_segre_fourfold().matrices[0]; // rank 2
    int checked = 0;
    while (checked < 25) {
        std::vector<Vector> basis;
        for (int i = 0; i < 3; ++i) basis.push_back(random_vector(rng, 4, 5));
        Matrix b(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) b(i, j) = basis[i][j];
        if (rank(b) != 3) continue;

        std::vector<SymMatrix> family{h};
        SymMatrix restricted = restrict_to_hyperplane(family, basis)[0];
        EXPECT_EQ(rank(restricted.to_matrix()), 2u); // generic slice keeps the rank

        // push the restricted kernel back to ambient coordinates
        SubspaceBasis small = kernel_basis(restricted.to_matrix());
        std::vector<Vector> ambient;
        for (const auto& coeffs : small.vectors) {
            Vector v(4);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 4; ++j) v[j] += coeffs[i] * basis[i][j];
            ambient.push_back(std::move(v));
        }
        SubspaceBasis lifted = make_subspace(4, ambient);

        SubspaceBasis expected = subspace_intersection(kernel_basis(h.to_matrix()),
                                                       make_subspace(4, basis));
        EXPECT_EQ(lifted, expected);
        ++checked;
    }
}

TEST(SymMatrix, FromMatrixValidatesSymmetry) {
    Matrix bad(2, 2);
    bad(0, 1) = 1;
    EXPECT_THROW(SymMatrix::from_matrix(bad), std::invalid_argument);
    bad(1, 0) = 1;
    EXPECT_EQ(SymMatrix::from_matrix(bad), SymMatrix::unit(2, 0, 1));
}
