#include <widthk/chern.hpp>

#include <gtest/gtest.h>

using namespace widthk;

namespace {

// builds a polynomial in chern_vars(m) from (L exponent, c exponents...) data
MultiPoly build(std::size_t m, std::initializer_list<std::pair<Exponents, Rational>> terms) {
    MultiPoly p(chern_vars(m));
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

} // namespace

TEST(Segre, LowDegreeClasses) {
    const auto s = segre_from_chern(4);
    EXPECT_EQ(s[0], build(4, {{{0, 0, 0, 0, 0}, 1}}));
    EXPECT_EQ(s[1], build(4, {{{0, 1, 0, 0, 0}, -1}}));                       // -c1
    EXPECT_EQ(s[2], build(4, {{{0, 2, 0, 0, 0}, 1}, {{0, 0, 1, 0, 0}, -1}})); // c1^2 - c2
    EXPECT_EQ(s[3], build(4, {{{0, 3, 0, 0, 0}, -1},
                              {{0, 1, 1, 0, 0}, 2},
                              {{0, 0, 0, 1, 0}, -1}})); // -(c1^3 - 2 c1 c2 + c3)
}

// the defining relation: s(E) c(E) = 1 up to the truncation order
TEST(Segre, InverseOfTotalChernClass) {
    for (std::size_t m : {1u, 2u, 3u, 4u, 5u, 6u}) {
        const auto vars = chern_vars(m);
        const auto s = segre_from_chern(m);
        MultiPoly total_c = MultiPoly::constant(vars, 1);
        for (std::size_t i = 1; i <= m; ++i) total_c += MultiPoly::variable(vars, i);
        MultiPoly total_s(vars);
        for (const auto& si : s) total_s += si;

        MultiPoly product = total_c * total_s;
        // grade by weighted degree (c_i has weight i): all pieces up to m vanish
        for (const auto& [e, coef] : product.terms()) {
            std::size_t weight = e[0];
            for (std::size_t i = 1; i < e.size(); ++i) weight += i * e[i];
            if (weight <= m && weight > 0) {
                ADD_FAILURE() << "nonzero graded piece of weight " << weight << " for m=" << m;
            }
        }
        auto unit = product.terms().find(Exponents(m + 1, 0));
        ASSERT_NE(unit, product.terms().end());
        EXPECT_EQ(unit->second, Rational(1));
    }
}

TEST(SigmaUniversal, MatchesClosedFormsForSmallK) {
    for (std::size_t n = 2; n <= 10; ++n) {
        // (n+1) L - c1
        MultiPoly s1 = build(1, {{{1, 0}, Rational(static_cast<long>(n + 1))}, {{0, 1}, -1}});
        EXPECT_EQ(sigma_universal(n, 1), s1);

        // (n+2)(n+1)/2 L^2 - (n+2) L c1 + c1^2 - c2
        MultiPoly s2 = build(2, {{{2, 0, 0}, Rational(static_cast<long>((n + 2) * (n + 1))) / 2},
                                 {{1, 1, 0}, -Rational(static_cast<long>(n + 2))},
                                 {{0, 2, 0}, 1},
                                 {{0, 0, 1}, -1}});
        EXPECT_EQ(sigma_universal(n, 2), s2);

        // binom(n+3,3) L^3 - binom(n+3,2) L^2 c1 + (n+3) L (c1^2 - c2)
        //   - (c1^3 - 2 c1 c2 + c3)
        MultiPoly s3 = build(3, {{{3, 0, 0, 0}, binomial(n + 3, 3)},
                                 {{2, 1, 0, 0}, -binomial(n + 3, 2)},
                                 {{1, 2, 0, 0}, Rational(static_cast<long>(n + 3))},
                                 {{1, 0, 1, 0}, -Rational(static_cast<long>(n + 3))},
                                 {{0, 3, 0, 0}, -1},
                                 {{0, 1, 1, 0}, 2},
                                 {{0, 0, 0, 1}, -1}});
        EXPECT_EQ(sigma_universal(n, 3), s3);
    }
}

TEST(SigmaUniversal, PrintedFormAtN4K2) {
    EXPECT_EQ(sigma_universal(4, 2).to_string(), "15*L^2 - 6*L*c1 + c1^2 - c2");
}

// weighted-homogeneous of degree k (deg L = 1, deg c_i = i), with integer
// coefficients throughout
TEST(SigmaUniversal, WeightedHomogeneityAndIntegrality) {
    for (std::size_t n : {3u, 6u, 9u})
        for (std::size_t k = 1; k <= 5; ++k) {
            const MultiPoly sigma = sigma_universal(n, k);
            EXPECT_FALSE(sigma.is_zero());
            for (const auto& [e, coef] : sigma.terms()) {
                std::size_t weight = e[0];
                for (std::size_t i = 1; i < e.size(); ++i) weight += i * e[i];
                EXPECT_EQ(weight, k);
                EXPECT_EQ(coef.get_den(), 1);
            }
        }
}

TEST(Geometry, HypersurfaceChernClasses) {
    // plane P^2 in P^3 (degree 1): c = (1+h)^3
    GeometryData plane = chern_of_geometry(Hypersurface{2, 1});
    MultiPoly expected(plane.ring->names());
    expected.add_term({0}, 1);
    expected.add_term({1}, 3);
    expected.add_term({2}, 3);
    EXPECT_EQ(plane.total_chern.poly(), expected);

    // quintic threefold: c1 = 0
    GeometryData quintic = chern_of_geometry(Hypersurface{3, 5});
    EXPECT_TRUE(graded_piece(quintic, quintic.total_chern, 1).is_zero());

    // product P^2 x P^2: c1 = 3 h1 + 3 h2
    GeometryData prod = chern_of_geometry(ProductProj{2, 2});
    MultiPoly c1(prod.ring->names());
    c1.add_term({1, 0}, 3);
    c1.add_term({0, 1}, 3);
    EXPECT_EQ(graded_piece(prod, prod.total_chern, 1).poly(), c1);
}

// c(X) s(X) = 1 inside every geometry ring
TEST(Geometry, SegreInverseInsideRings) {
    std::vector<GeometryDescriptor> gs{Hypersurface{3, 2}, Hypersurface{5, 4},
                                       CompleteIntersection{4, {2, 3}}, ProductProj{2, 2},
                                       ProductProj{1, 3}};
    for (const auto& d : gs) {
        GeometryData g = chern_of_geometry(d);
        const auto s_polys = segre_from_chern(g.dim);
        RingClass total_s(g.ring, g.ring->zero());
        for (const auto& sp : s_polys) {
            // substitute c_i(X) for c_i in each Segre polynomial
            RingClass acc(g.ring, g.ring->zero());
            for (const auto& [e, coef] : sp.terms()) {
                RingClass term(g.ring, MultiPoly::constant(g.ring->names(), coef));
                for (std::size_t i = 1; i < e.size(); ++i) {
                    RingClass ci = graded_piece(g, g.total_chern, i);
                    for (std::uint32_t p = 0; p < e[i]; ++p) term = term * ci;
                }
                acc = acc + term;
            }
            total_s = total_s + acc;
        }
        RingClass one(g.ring, g.ring->one());
        EXPECT_EQ(g.total_chern * total_s, one);
    }
}

TEST(SigmaClass, VanishingFixtures) {
    EXPECT_TRUE(sigma_class(chern_of_geometry(Hypersurface{2, 3}), 2).is_zero());
    EXPECT_TRUE(sigma_class(chern_of_geometry(CompleteIntersection{3, {2, 2}}), 3).is_zero());
    EXPECT_TRUE(sigma_class(chern_of_geometry(ProductProj{2, 2}), 4).is_zero());
    EXPECT_THROW(sigma_class(chern_of_geometry(Hypersurface{2, 3}), 3), std::invalid_argument);
}

TEST(SigmaClass, QuadricSurfaceOfCodimensionTwoIsNotAHypersurfacePair) {
    // the (2,2) complete intersections keep a nonzero sigma_2
    for (std::size_t n = 2; n <= 5; ++n)
        EXPECT_FALSE(sigma_class(chern_of_geometry(CompleteIntersection{n, {2, 2}}), 2).is_zero());
}

TEST(SigmaPairing, QuadricThreefoldDegreeCheck) {
    // n=3 quadric in P^4: sigma_1 = 4L - c1 = h, so the pairing is the degree
    GeometryData g = chern_of_geometry(Hypersurface{3, 2});
    EXPECT_EQ(sigma_pairing(g, 1), Rational(2));
}

TEST(SigmaPairing, ProductPositivity) {
    GeometryData g = chern_of_geometry(ProductProj{2, 2});
    EXPECT_GT(sigma_pairing(g, 1), Rational(0));
    EXPECT_EQ(sigma_pairing(g, 1), Rational(12)); // 2L . L^3 with L^4 = 6 points
}

// the quadric surface is both the degree-2 hypersurface in P^3 and
// P^1 x P^1; the two ring models must produce identical pairings
TEST(SigmaPairing, QuadricSurfaceAgreesAcrossRingModels) {
    GeometryData as_hypersurface = chern_of_geometry(Hypersurface{2, 2});
    GeometryData as_product = chern_of_geometry(ProductProj{1, 1});
    for (std::size_t k = 1; k <= 2; ++k)
        EXPECT_EQ(sigma_pairing(as_hypersurface, k), sigma_pairing(as_product, k));
    EXPECT_EQ(sigma_pairing(as_hypersurface, 1), Rational(2));
    EXPECT_TRUE(sigma_class(as_product, 2).is_zero());
}

// quotient bundle rank 3 on codimension-3 complete intersections forces
// sigma_4 to vanish, independently of the product geometry
TEST(SigmaClass, CodimensionThreeKillsSigmaFour) {
    for (std::size_t n : {4u, 5u})
        for (unsigned d = 1; d <= 3; ++d) {
            GeometryData g = chern_of_geometry(CompleteIntersection{n, {d, d, 2}});
            EXPECT_TRUE(sigma_class(g, 4).is_zero()) << "n=" << n << " d=" << d;
        }
}

TEST(SigmaPairing, NonnegativeAcrossGeometryGrid) {
    for (std::size_t n = 2; n <= 5; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            GeometryData g = chern_of_geometry(Hypersurface{n, d});
            for (std::size_t k = 1; k <= n; ++k)
                EXPECT_GE(sigma_pairing(g, k), Rational(0)) << "hypersurface n=" << n << " d=" << d;
        }
    for (std::size_t n = 3; n <= 5; ++n)
        for (unsigned d1 = 1; d1 <= 3; ++d1)
            for (unsigned d2 = d1; d2 <= 3; ++d2) {
                GeometryData g = chern_of_geometry(CompleteIntersection{n, {d1, d2}});
                for (std::size_t k = 1; k <= n; ++k)
                    EXPECT_GE(sigma_pairing(g, k), Rational(0));
            }
    for (std::size_t a = 1; a <= 3; ++a)
        for (std::size_t b = a; b <= 3; ++b) {
            GeometryData g = chern_of_geometry(ProductProj{a, b});
            for (std::size_t k = 1; k <= a + b; ++k)
                EXPECT_GE(sigma_pairing(g, k), Rational(0));
        }
}

// The constant term of sigma_4 from the inversion recurrence differs from a
// transcription that circulates with the display: the recurrence gives
//   s4 = c1^4 - 3 c1^2 c2 + c2^2 + 2 c1 c3 - c4
// and only that version annihilates the product geometry P^2 x P^2.
TEST(SigmaFour, RecurrenceTermBeatsAlternateTranscription) {
    const auto vars = chern_vars(4);
    const MultiPoly derived_s4 = segre_from_chern(4)[4];
    MultiPoly expected_s4 = build(4, {{{0, 4, 0, 0, 0}, 1},
                                      {{0, 2, 1, 0, 0}, -3},
                                      {{0, 0, 2, 0, 0}, 1},
                                      {{0, 1, 0, 1, 0}, 2},
                                      {{0, 0, 0, 0, 1}, -1}});
    EXPECT_EQ(derived_s4, expected_s4);

    // alternate constant term: c1^4 - 2 c1^2 c2 + c1 c3 - c2^2 + c4
    MultiPoly alternate = build(4, {{{0, 4, 0, 0, 0}, 1},
                                    {{0, 2, 1, 0, 0}, -2},
                                    {{0, 1, 0, 1, 0}, 1},
                                    {{0, 0, 2, 0, 0}, -1},
                                    {{0, 0, 0, 0, 1}, 1}});
    EXPECT_NE(derived_s4, alternate);

    GeometryData g = chern_of_geometry(ProductProj{2, 2});
    MultiPoly sigma4_derived = sigma_universal(4, 4);
    MultiPoly sigma4_alternate = sigma4_derived - derived_s4 + alternate;

    auto evaluate_in_ring = [&](const MultiPoly& universal) {
        RingClass acc(g.ring, g.ring->zero());
        for (const auto& [e, coef] : universal.terms()) {
            RingClass term(g.ring, MultiPoly::constant(g.ring->names(), coef));
            for (std::uint32_t p = 0; p < e[0]; ++p) term = term * g.big_l;
            for (std::size_t i = 1; i < e.size(); ++i) {
                RingClass ci = graded_piece(g, g.total_chern, i);
                for (std::uint32_t p = 0; p < e[i]; ++p) term = term * ci;
            }
            acc = acc + term;
        }
        return acc;
    };

    EXPECT_TRUE(evaluate_in_ring(sigma4_derived).is_zero());
    EXPECT_FALSE(evaluate_in_ring(sigma4_alternate).is_zero());
}
