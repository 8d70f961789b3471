#pragma once

// Universal sigma_k polynomials and their evaluation in concrete truncated
// cohomology rings.
//
// The Segre classes s_i are the graded pieces of the formal inverse of the
// total Chern class, s(E) c(E) = 1, so they satisfy s_0 = 1 and
// s_i = -(c_1 s_{i-1} + c_2 s_{i-2} + ... + c_i). The universal class is
//
//   sigma_k(n) = sum_{i=0}^{k} binomial(n+k, k-i) L^{k-i} s_i
//
// as a polynomial in L, c_1, ..., c_k. Built-in geometries supply the ring,
// the total Chern class of the tangent bundle, and the hyperplane class L:
//
//   hypersurface of degree d in P^{n+1}:   Q[h]/(h^{n+1}),
//       c = (1+h)^{n+2} (1+dh)^{-1},  L = h,  integral of h^n is d
//   complete intersection (d_1..d_c) in P^{n+c}:
//       c = (1+h)^{n+c+1} prod (1+d_j h)^{-1},  integral of h^n is prod d_j
//   product P^a x P^b:  Q[h1,h2]/(h1^{a+1}, h2^{b+1}),
//       c = (1+h1)^{a+1} (1+h2)^{b+1},  L = h1 + h2,  integral of h1^a h2^b is 1
//
// Inverse total Chern classes are truncated geometric series; everything is
// exact.

#include <widthk/ring.hpp>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace widthk {

inline std::vector<std::string> chern_vars(std::size_t m) {
    std::vector<std::string> v{"L"};
    for (std::size_t i = 1; i <= m; ++i) v.push_back("c" + std::to_string(i));
    return v;
}

/// s_0..s_m as polynomials in c_1..c_m (over the variable set L, c_1..c_m so
/// they compose directly with the universal class).
inline std::vector<MultiPoly> segre_from_chern(std::size_t m) {
    const auto vars = chern_vars(m);
    std::vector<MultiPoly> c(m + 1, MultiPoly(vars)); // c[0] unused
    for (std::size_t i = 1; i <= m; ++i) c[i] = MultiPoly::variable(vars, i);

    std::vector<MultiPoly> s;
    s.push_back(MultiPoly::constant(vars, 1));
    for (std::size_t i = 1; i <= m; ++i) {
        MultiPoly acc(vars);
        for (std::size_t j = 1; j <= i; ++j) acc += c[j] * s[i - j];
        s.push_back(-acc);
    }
    return s;
}

inline Rational binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

/// The universal class sigma_k for ambient dimension parameter n, in
/// variables L, c1..ck.
inline MultiPoly sigma_universal(std::size_t n, std::size_t k) {
    if (k == 0) throw std::invalid_argument("sigma: k must be positive");
    const auto vars = chern_vars(k);
    const auto s = segre_from_chern(k);
    const MultiPoly big_l = MultiPoly::variable(vars, 0);

    MultiPoly acc(vars);
    for (std::size_t i = 0; i <= k; ++i)
        acc += binomial(n + k, k - i) * (big_l.pow(k - i) * s[i]);
    return acc;
}

// ---------------------------------------------------------------------------
// Geometries
// ---------------------------------------------------------------------------

struct Hypersurface {
    std::size_t n = 0; // dimension of X
    unsigned d = 1;    // degree in P^{n+1}
};

struct CompleteIntersection {
    std::size_t n = 0;
    std::vector<unsigned> degrees; // one per defining hypersurface in P^{n+c}
};

struct ProductProj {
    std::size_t a = 0, b = 0; // P^a x P^b with L = h1 + h2
};

struct CustomGeometry {
    RingPtr ring;
    MultiPoly total_chern;
    MultiPoly big_l;
    std::size_t dim = 0;
};

using GeometryDescriptor = std::variant<Hypersurface, CompleteIntersection, ProductProj, CustomGeometry>;

struct GeometryData {
    RingPtr ring;
    RingClass total_chern; // c(TX), reduced
    RingClass big_l;       // the hyperplane class L
    std::size_t dim = 0;   // complex dimension n
};

namespace detail {

/// (1 + d g)^{-1} truncated: alternating geometric series.
inline RingClass inverse_one_plus(const RingClass& x, std::size_t order) {
    RingClass acc(x.ring(), x.ring()->one());
    RingClass power(x.ring(), x.ring()->one());
    Rational sign = -1;
    for (std::size_t i = 1; i <= order; ++i) {
        power = power * x;
        acc = acc + sign * power;
        sign = -sign;
    }
    return acc;
}

} // namespace detail

inline GeometryData chern_of_geometry(const GeometryDescriptor& g) {
    if (const auto* hs = std::get_if<Hypersurface>(&g)) {
        if (hs->n == 0 || hs->d == 0) throw std::invalid_argument("hypersurface: bad parameters");
        auto ring = std::make_shared<const TruncatedRing>(
            std::vector<RingGenerator>{{"h", 1, static_cast<unsigned>(hs->n + 1)}},
            Exponents{static_cast<std::uint32_t>(hs->n)}, Rational(static_cast<long>(hs->d)));
        RingClass h(ring, ring->gen(0));
        RingClass one(ring, ring->one());
        RingClass c = (one + h).pow(hs->n + 2) *
                      detail::inverse_one_plus(Rational(static_cast<long>(hs->d)) * h, hs->n);
        return GeometryData{ring, c, h, hs->n};
    }
    if (const auto* ci = std::get_if<CompleteIntersection>(&g)) {
        if (ci->n == 0 || ci->degrees.empty())
            throw std::invalid_argument("complete intersection: bad parameters");
        for (unsigned d : ci->degrees)
            if (d == 0) throw std::invalid_argument("complete intersection: zero degree");
        const std::size_t c_dim = ci->degrees.size();
        Rational top = 1;
        for (unsigned d : ci->degrees) top *= static_cast<long>(d);
        auto ring = std::make_shared<const TruncatedRing>(
            std::vector<RingGenerator>{{"h", 1, static_cast<unsigned>(ci->n + 1)}},
            Exponents{static_cast<std::uint32_t>(ci->n)}, top);
        RingClass h(ring, ring->gen(0));
        RingClass one(ring, ring->one());
        RingClass c = (one + h).pow(ci->n + c_dim + 1);
        for (unsigned d : ci->degrees)
            c = c * detail::inverse_one_plus(Rational(static_cast<long>(d)) * h, ci->n);
        return GeometryData{ring, c, h, ci->n};
    }
    if (const auto* pr = std::get_if<ProductProj>(&g)) {
        if (pr->a == 0 || pr->b == 0) throw std::invalid_argument("product: bad parameters");
        auto ring = std::make_shared<const TruncatedRing>(
            std::vector<RingGenerator>{{"h1", 1, static_cast<unsigned>(pr->a + 1)},
                                       {"h2", 1, static_cast<unsigned>(pr->b + 1)}},
            Exponents{static_cast<std::uint32_t>(pr->a), static_cast<std::uint32_t>(pr->b)},
            Rational(1));
        RingClass h1(ring, ring->gen(0));
        RingClass h2(ring, ring->gen(1));
        RingClass one(ring, ring->one());
        RingClass c = (one + h1).pow(pr->a + 1) * (one + h2).pow(pr->b + 1);
        return GeometryData{ring, c, h1 + h2, pr->a + pr->b};
    }
    const auto& cu = std::get<CustomGeometry>(g);
    return GeometryData{cu.ring, RingClass(cu.ring, cu.total_chern), RingClass(cu.ring, cu.big_l),
                        cu.dim};
}

/// Degree-i component of a ring class.
inline RingClass graded_piece(const GeometryData& g, const RingClass& c, std::size_t degree) {
    MultiPoly out(g.ring->names());
    const auto& gens = g.ring->generators();
    for (const auto& [e, coef] : c.poly().terms()) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens[i].degree;
        if (d == degree) out.add_term(e, coef);
    }
    return RingClass(g.ring, out);
}

/// sigma_k evaluated in the geometry's ring: substitute c_i(X) and L into
/// the universal polynomial.
inline RingClass sigma_class(const GeometryData& g, std::size_t k) {
    if (k > g.dim) throw std::invalid_argument("sigma_class: k exceeds the dimension");
    const MultiPoly universal = sigma_universal(g.dim, k);
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
}

/// The pairing  integral of sigma_k . L^{n-k}  over X.
inline Rational sigma_pairing(const GeometryData& g, std::size_t k) {
    RingClass c = sigma_class(g, k);
    for (std::size_t i = 0; i < g.dim - k; ++i) c = c * g.big_l;
    return integrate_top(c);
}

} // namespace widthk
