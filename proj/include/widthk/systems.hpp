#pragma once

// The (n,k)-system domain: families of symmetric matrices, the fixture
// generators used across the test corpus, and the classifier that aggregates
// span rank, non-degeneracy, width verdicts and the rank-2 special
// structure of width-4 systems.

#include <widthk/rng.hpp>
#include <widthk/width.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace widthk {

struct SymMatrixSystem {
    std::size_t n = 0;
    std::vector<SymMatrix> matrices;
    std::string label;

    std::size_t size() const { return matrices.size(); }
};

inline SymMatrixSystem make_system(std::vector<SymMatrix> ms, std::string label = "") {
    if (ms.empty()) throw std::invalid_argument("system: needs at least one matrix");
    const std::size_t n = ms.front().dim();
    for (const auto& m : ms)
        if (m.dim() != n) throw std::invalid_argument("system: mixed dimensions");
    return SymMatrixSystem{n, std::move(ms), std::move(label)};
}

/// Width-k plus non-degeneracy (zero common kernel).
inline bool is_nk_system(const SymMatrixSystem& s, std::size_t k) {
    if (s.size() < k) throw std::invalid_argument("is_nk_system: fewer than k matrices");
    if (s.n < k) throw std::invalid_argument("is_nk_system: dimension below k");
    if (!check_width_symbolic(s.matrices, k).holds) return false;
    return common_kernel(s.matrices).dim() == 0;
}

/// Replaces the family by another basis of its span: H'_i = sum_j b_ij H_j.
inline SymMatrixSystem scramble(const SymMatrixSystem& s, const Matrix& b) {
    const std::size_t r = s.size();
    if (b.rows() != r || b.cols() != r) throw std::invalid_argument("scramble: shape mismatch");
    if (rank(b) != r) throw std::invalid_argument("scramble: singular matrix");
    std::vector<SymMatrix> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        SymMatrix acc(s.n);
        for (std::size_t j = 0; j < r; ++j) {
            if (b(i, j) == 0) continue;
            acc = acc + b(i, j) * s.matrices[j];
        }
        out.push_back(std::move(acc));
    }
    return SymMatrixSystem{s.n, std::move(out), s.label};
}

/// Simultaneous congruence of every matrix by one invertible A.
inline SymMatrixSystem congruence_system(const SymMatrixSystem& s, const Matrix& a) {
    std::vector<SymMatrix> out;
    out.reserve(s.size());
    for (const auto& h : s.matrices) out.push_back(congruence(a, h));
    return SymMatrixSystem{s.n, std::move(out), s.label};
}

/// c with h2 = c h1, or nothing if the pair is not proportional.
inline std::optional<Rational> proportionality_constant(const SymMatrix& h1, const SymMatrix& h2) {
    if (h1.is_zero()) throw std::invalid_argument("proportionality: first matrix is zero");
    if (h1.dim() != h2.dim()) throw std::invalid_argument("proportionality: dimension mismatch");
    const std::size_t n = h1.dim();
    Rational c = 0;
    for (std::size_t i = 0; i < n && c == 0; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (h1(i, j) != 0) {
                c = h2(i, j) / h1(i, j);
                break;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (h2(i, j) != c * h1(i, j)) return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------
// Fixture generators
// ---------------------------------------------------------------------------

/// The rank lower-bound family: a basis of all symmetric (k-2)x(k-2)
/// matrices padded by zeros, plus one nonsingular matrix. Gives
/// (k-1)(k-2)/2 + 1 independent matrices forming an (n,k)-system.
inline SymMatrixSystem make_lower_bound_system(std::size_t n, std::size_t k) {
    if (k < 4) throw std::invalid_argument("lower_bound: k must be at least 4");
    if (n < k) throw std::invalid_argument("lower_bound: n must be at least k");
    std::vector<SymMatrix> ms;
    for (std::size_t i = 0; i < k - 2; ++i)
        for (std::size_t j = i; j < k - 2; ++j) ms.push_back(SymMatrix::unit(n, i, j));
    ms.push_back(SymMatrix::identity(n));
    return make_system(std::move(ms),
                       "lower_bound_n" + std::to_string(n) + "_k" + std::to_string(k));
}

/// Second fundamental form of P^2 x P^2 in P^8: four 4x4 matrices, each a
/// single symmetric pair of ones. An (n,4)-system of span rank 4.
inline SymMatrixSystem make_segre_fourfold() {
    std::vector<SymMatrix> ms{
        SymMatrix::unit(4, 0, 2),
        SymMatrix::unit(4, 0, 3),
        SymMatrix::unit(4, 1, 2),
        SymMatrix::unit(4, 1, 3),
    };
    return make_system(std::move(ms), "segre_fourfold");
}

/// Planted width-3 triple: the three 2x2 symmetric units padded to n,
/// conjugated by a seeded random invertible matrix. Width-3 holds (all
/// columns live in a 2-dimensional image) and the common kernel has
/// dimension n-2.
inline SymMatrixSystem make_width3_triple(std::size_t n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("width3_triple: n must be at least 3");
    Rng rng(seed);
    Matrix a = random_invertible(rng, n, 3);
    std::vector<SymMatrix> ms{
        congruence(a, SymMatrix::unit(n, 0, 0)),
        congruence(a, SymMatrix::unit(n, 1, 1)),
        congruence(a, SymMatrix::unit(n, 0, 1)),
    };
    return make_system(std::move(ms),
                       "width3_triple_n" + std::to_string(n) + "_s" + std::to_string(seed));
}

// Rank-2 coefficient hyperplane of a width-4 system: basis of the
// hyperplane N' in coefficient space, the common kernel F of the rank-<=2
// combinations, and a congruence A moving every such combination into the
// top-left 2x2 block.
struct SpecialStructure {
    std::vector<Vector> nprime_basis; // canonical basis of N' in Q^r
    SubspaceBasis f_basis;            // F inside Q^n, dim n-2
    Matrix congruence_a;              // rows: complement of F, then F basis
};

struct PlantedSpecial {
    SymMatrixSystem system;
    SpecialStructure planted;
};

namespace detail {

/// Rows: the lexicographically first standard basis vectors completing F,
/// followed by the F basis itself.
inline Matrix complement_congruence(const SubspaceBasis& f, std::size_t n) {
    std::vector<Vector> chosen;
    Matrix probe(f.dim(), n);
    for (std::size_t i = 0; i < f.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) probe(i, j) = f.vectors[i][j];
    std::size_t current_rank = f.dim();
    for (std::size_t e = 0; e < n && chosen.size() + f.dim() < n; ++e) {
        Matrix trial(current_rank + 1, n);
        for (std::size_t i = 0; i < current_rank; ++i)
            for (std::size_t j = 0; j < n; ++j) trial(i, j) = probe(i, j);
        trial(current_rank, e) = 1;
        if (rank(trial) == current_rank + 1) {
            Vector v(n);
            v[e] = 1;
            chosen.push_back(std::move(v));
            probe = trial;
            ++current_rank;
        }
    }
    Matrix a(n, n);
    std::size_t row = 0;
    for (const auto& v : chosen) {
        for (std::size_t j = 0; j < n; ++j) a(row, j) = v[j];
        ++row;
    }
    for (const auto& v : f.vectors) {
        for (std::size_t j = 0; j < n; ++j) a(row, j) = v[j];
        ++row;
    }
    return a;
}

} // namespace detail

/// Planted special (n,4)-system with its hidden data kept alongside for
/// oracles: three matrices confined to a common 2-dimensional image plus a
/// nonsingular one, scrambled in coefficient space and conjugated.
inline PlantedSpecial make_special_system(std::size_t n, std::uint64_t seed) {
    if (n < 5) throw std::invalid_argument("special: n must be at least 5");
    Rng rng(seed);

    std::array<SymMatrix, 4> s{SymMatrix::unit(n, 0, 0), SymMatrix::unit(n, 1, 1),
                               SymMatrix::unit(n, 0, 1), SymMatrix(n)};
    // Fourth matrix: nonsingular with nonsingular bottom-right block, so the
    // rank-<=2 locus is exactly the planted hyperplane.
    for (;;) {
        SymMatrix cand = random_symmetric(rng, n, 2);
        Matrix full = cand.to_matrix();
        Matrix bottom(n - 2, n - 2);
        for (std::size_t i = 2; i < n; ++i)
            for (std::size_t j = 2; j < n; ++j) bottom(i - 2, j - 2) = full(i, j);
        if (rank(full) == n && rank(bottom) == n - 2) {
            s[3] = cand;
            break;
        }
    }

    Matrix b = random_invertible(rng, 4, 2);
    Matrix a = random_invertible(rng, n, 2);

    std::vector<SymMatrix> ms;
    for (std::size_t i = 0; i < 4; ++i) {
        SymMatrix mix(n);
        for (std::size_t j = 0; j < 4; ++j)
            if (b(i, j) != 0) mix = mix + b(i, j) * s[j];
        ms.push_back(congruence(a, mix));
    }
    SymMatrixSystem sys =
        make_system(std::move(ms), "special_n" + std::to_string(n) + "_s" + std::to_string(seed));

    // N' = kernel of the linear form given by the last column of B: for
    // w in that kernel, sum_i w_i H^i is a conjugated 2x2-block matrix.
    Matrix ell(1, 4);
    for (std::size_t i = 0; i < 4; ++i) ell(0, i) = b(i, 3);
    SubspaceBasis nprime = kernel_basis(ell);

    std::vector<SymMatrix> on_nprime;
    for (const auto& w : nprime.vectors) {
        SymMatrix mix(n);
        for (std::size_t i = 0; i < 4; ++i)
            if (w[i] != 0) mix = mix + w[i] * sys.matrices[i];
        on_nprime.push_back(std::move(mix));
    }
    SubspaceBasis f = common_kernel(on_nprime);

    SpecialStructure planted{nprime.vectors, f, detail::complement_congruence(f, n)};
    return PlantedSpecial{std::move(sys), std::move(planted)};
}

/// The two quadruples of 4x4 matrices that close the rank-one case analysis
/// of width-4 systems, exactly as displayed there.
inline SymMatrixSystem make_normal_form(int variant) {
    if (variant != 1 && variant != 2) throw std::invalid_argument("normal_form: variant is 1 or 2");
    std::vector<SymMatrix> ms{SymMatrix::unit(4, 0, 0), SymMatrix::unit(4, 1, 1), SymMatrix(4),
                              SymMatrix(4)};
    if (variant == 1) {
        ms[2] = SymMatrix::unit(4, 0, 1) + SymMatrix::unit(4, 1, 2);
        ms[3] = SymMatrix::unit(4, 0, 3) + SymMatrix::unit(4, 1, 2);
    } else {
        ms[2] = SymMatrix::unit(4, 0, 1) + SymMatrix::unit(4, 2, 2);
        ms[3] = SymMatrix::unit(4, 0, 3) + SymMatrix::unit(4, 2, 2);
    }
    return make_system(std::move(ms), "normal_form_" + std::to_string(variant));
}

// ---------------------------------------------------------------------------
// Low-rank locus and special-structure detection
// ---------------------------------------------------------------------------

inline std::vector<std::string> w_vars(std::size_t r) {
    std::vector<std::string> v;
    v.reserve(r);
    for (std::size_t i = 1; i <= r; ++i) v.push_back("w" + std::to_string(i));
    return v;
}

/// The symbolic combination sum_i w_i H^i as an n x n matrix of linear forms.
inline std::vector<std::vector<MultiPoly>> symbolic_combination(const SymMatrixSystem& s) {
    const auto vars = w_vars(s.size());
    std::vector<std::vector<MultiPoly>> m(s.n, std::vector<MultiPoly>(s.n, MultiPoly(vars)));
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j) {
            MultiPoly f(vars);
            for (std::size_t a = 0; a < s.size(); ++a) {
                if (s.matrices[a](i, j) == 0) continue;
                Exponents e(s.size(), 0);
                e[a] = 1;
                f.add_term(e, s.matrices[a](i, j));
            }
            m[i][j] = std::move(f);
        }
    return m;
}

/// Every 3x3 minor of sum_i w_i H^i: the cubics cutting out the locus of
/// coefficient vectors whose combination has rank at most 2.
inline std::vector<MultiPoly> low_rank_locus_minors(const SymMatrixSystem& s) {
    std::vector<MultiPoly> minors;
    if (s.n < 3) return minors;
    const auto m = symbolic_combination(s);
    const auto vars = w_vars(s.size());

    std::vector<std::size_t> rows{0, 1, 2};
    do {
        std::vector<std::size_t> cols{0, 1, 2};
        do {
            std::vector<std::vector<MultiPoly>> sub(3, std::vector<MultiPoly>(3, MultiPoly(vars)));
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) sub[i][j] = m[rows[i]][cols[j]];
            minors.push_back(det_linear_forms(sub));
        } while (detail::next_combination(cols, s.n));
    } while (detail::next_combination(rows, s.n));
    return minors;
}

enum class SpecialStatus { not_attempted, special, not_special, undetermined_over_rationals };

struct SpecialDetection {
    SpecialStatus status = SpecialStatus::undetermined_over_rationals;
    std::optional<SpecialStructure> structure;
};

namespace detail {

struct SmallFactorization {
    std::vector<std::pair<Integer, unsigned>> primes;
    bool complete = true;
};

inline SmallFactorization factor_by_trial(Integer x) {
    SmallFactorization f;
    if (x < 0) x = -x;
    if (x <= 1) return f;
    for (long p = 2; p <= 100000 && x > 1; p = (p == 2 ? 3 : p + 2)) {
        if (x % p == 0) {
            unsigned e = 0;
            while (x % p == 0) {
                x /= p;
                ++e;
            }
            f.primes.emplace_back(Integer(p), e);
        }
        if (Integer(p) * Integer(p) > x) break;
    }
    if (x > 1) {
        // leftover cofactor: keep it as a factor, but only a (probable)
        // prime leaves the divisor set complete
        f.primes.emplace_back(x, 1);
        if (mpz_probab_prime_p(x.get_mpz_t(), 40) == 0) f.complete = false;
    }
    return f;
}

inline std::vector<Integer> all_divisors(const SmallFactorization& f, std::size_t cap,
                                         bool* overflow) {
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t d = 0; d < base; ++d) {
                divs.push_back(divs[d] * pk);
                if (divs.size() > cap) {
                    *overflow = true;
                    return divs;
                }
            }
        }
    }
    return divs;
}

struct ProjectiveRoots {
    std::vector<std::pair<Integer, Integer>> roots; // primitive (alpha, beta)
    bool complete = true;                           // all rational roots were found
};

/// Rational projective roots [alpha : beta] of a nonzero binary cubic
/// c3 s^3 + c2 s^2 t + c1 s t^2 + c0 t^3 with integer coefficients.
inline ProjectiveRoots binary_cubic_rational_roots(std::array<Integer, 4> c) {
    ProjectiveRoots out;
    if (c[3] == 0) out.roots.emplace_back(1, 0); // t = 0 line

    // roots with beta != 0: x = s/t zeros of p(x) = c3 x^3 + c2 x^2 + c1 x + c0
    std::array<Integer, 4> p{c[0], c[1], c[2], c[3]}; // p[i] = coeff of x^i
    int low = 0;
    while (low < 4 && p[low] == 0) ++low;
    if (low == 4) return out; // handled by caller: cubic must be nonzero
    if (low > 0) out.roots.emplace_back(0, 1);
    int high = 3;
    while (high >= 0 && p[high] == 0) --high;
    if (high <= low) {
        // monomial a x^low: only the zero roots already recorded
        return out;
    }

    SmallFactorization f0 = factor_by_trial(p[low]);
    SmallFactorization fl = factor_by_trial(p[high]);
    if (!f0.complete || !fl.complete) out.complete = false;
    bool overflow = false;
    std::vector<Integer> nums = all_divisors(f0, 4096, &overflow);
    std::vector<Integer> dens = all_divisors(fl, 4096, &overflow);
    if (overflow) out.complete = false;

    for (const auto& a : nums)
        for (const auto& b : dens) {
            Integer g = gcd(a, b);
            Integer num = a / g, den = b / g;
            for (int sign = 0; sign < 2; ++sign) {
                Integer alpha = sign ? -num : num;
                // evaluate p at alpha/den exactly: sum p[i] alpha^i den^(3-i)
                Integer acc = 0;
                for (int i = 0; i <= 3; ++i) {
                    Integer term = p[i];
                    for (int q = 0; q < i; ++q) term *= alpha;
                    for (int q = i; q < 3; ++q) term *= den;
                    acc += term;
                }
                if (acc == 0) {
                    bool seen = false;
                    for (const auto& r : out.roots)
                        if (r.first == alpha && r.second == den) seen = true;
                    if (!seen) out.roots.emplace_back(alpha, den);
                }
            }
        }
    return out;
}

/// Integer-primitive representative of a rational vector, first nonzero
/// entry positive.
inline Vector canonical_direction(const Vector& v) {
    Integer l = 1;
    for (std::size_t i = 0; i < v.dim(); ++i) l = ::lcm(l, Integer(v[i].get_den()));
    Integer g = 0;
    std::vector<Integer> scaled(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        Rational s = v[i] * Rational(l);
        scaled[i] = s.get_num();
        g = gcd(g, scaled[i]);
    }
    if (g == 0) return v;
    int sign = 0;
    for (const auto& x : scaled)
        if (x != 0) {
            sign = (x > 0) ? 1 : -1;
            break;
        }
    Vector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(sign < 0 ? -scaled[i] : scaled[i]) / Rational(g < 0 ? -g : g);
    return out;
}

} // namespace detail

/// Checks one hyperplane candidate: every 3x3 minor must vanish on ker(ell)
/// and the common kernel of the basis combinations must have dimension n-2.
inline std::optional<SpecialStructure> try_special_hyperplane(const SymMatrixSystem& s,
                                                              const Vector& ell) {
    const std::size_t r = s.size();
    Matrix ell_row(1, r);
    for (std::size_t i = 0; i < r; ++i) ell_row(0, i) = ell[i];
    SubspaceBasis nprime = kernel_basis(ell_row);
    if (nprime.dim() != r - 1) return std::nullopt;

    std::vector<SymMatrix> combos;
    for (const auto& w : nprime.vectors) {
        SymMatrix mix(s.n);
        for (std::size_t i = 0; i < r; ++i)
            if (w[i] != 0) mix = mix + w[i] * s.matrices[i];
        combos.push_back(std::move(mix));
    }

    // all 3x3 minors of the parametrized combination over N' must vanish
    SymMatrixSystem restricted{s.n, combos, ""};
    for (const auto& minor : low_rank_locus_minors(restricted))
        if (!minor.is_zero()) return std::nullopt;

    SubspaceBasis f = common_kernel(combos);
    if (f.dim() != s.n - 2) return std::nullopt;
    return SpecialStructure{nprime.vectors, f, detail::complement_congruence(f, s.n)};
}

/// Searches for a rational hyperplane in coefficient space on which every
/// 3x3 minor of sum w_i H^i vanishes. Candidates come from rational roots of
/// the first nonzero minor restricted to seeded random 2-planes; each
/// candidate is verified exactly, so "special" results are proofs. A
/// "not_special" verdict is only returned when every plane factorization was
/// complete, since a qualifying hyperplane always leaves a rational root
/// trace on every plane not contained in it.
inline SpecialDetection detect_special(const SymMatrixSystem& s) {
    if (s.n < 3) throw std::invalid_argument("detect_special: n must be at least 3");
    const std::size_t r = s.size();

    if (r < 3) return {SpecialStatus::not_special, std::nullopt};
    if (r == 3) {
        // W itself is the only 3-dimensional coefficient subspace.
        SubspaceBasis f = common_kernel(s.matrices);
        if (f.dim() != s.n - 2) return {SpecialStatus::not_special, std::nullopt};
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < 3; ++i) {
            Vector e(3);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return {SpecialStatus::special,
                SpecialStructure{std::move(basis), f, detail::complement_congruence(f, s.n)}};
    }

    const auto minors = low_rank_locus_minors(s);
    const MultiPoly* first_nonzero = nullptr;
    for (const auto& m : minors)
        if (!m.is_zero()) {
            first_nonzero = &m;
            break;
        }

    if (first_nonzero == nullptr) {
        // Every combination already has rank <= 2; any hyperplane vanishes
        // the minors, so only the kernel dimension is at stake.
        for (std::size_t i = r; i-- > 0;) {
            Vector ell(r);
            ell[i] = 1;
            if (auto st = try_special_hyperplane(s, ell))
                return {SpecialStatus::special, std::move(st)};
        }
        Rng rng(1);
        for (int t = 0; t < 16; ++t) {
            Vector ell = random_nonzero_vector(rng, r, 9);
            if (auto st = try_special_hyperplane(s, ell))
                return {SpecialStatus::special, std::move(st)};
        }
        return {SpecialStatus::undetermined_over_rationals, std::nullopt};
    }

    const std::vector<std::string> st_vars{"s", "t"};
    Rng rng(0x5851f42d4c957f2dULL);

    for (int round = 0; round < 6; ++round) {
        // r-1 planes, each contributing the trace point of any qualifying
        // hyperplane among its cubic's rational roots.
        std::vector<std::vector<Vector>> plane_points;
        bool round_complete = true;
        for (std::size_t pl = 0; pl < r - 1; ++pl) {
            for (int attempt = 0;; ++attempt) {
                if (attempt >= 64) return {SpecialStatus::undetermined_over_rationals, std::nullopt};
                Vector p = random_nonzero_vector(rng, r, 9);
                Vector q = random_nonzero_vector(rng, r, 9);
                Matrix pq(2, r);
                for (std::size_t j = 0; j < r; ++j) {
                    pq(0, j) = p[j];
                    pq(1, j) = q[j];
                }
                if (rank(pq) != 2) continue;

                std::vector<MultiPoly> images;
                for (std::size_t j = 0; j < r; ++j) {
                    MultiPoly im(st_vars);
                    im.add_term(Exponents{1, 0}, p[j]);
                    im.add_term(Exponents{0, 1}, q[j]);
                    images.push_back(std::move(im));
                }
                MultiPoly cubic = first_nonzero->substitute(images);
                if (cubic.is_zero()) continue; // plane lies inside the minor's zero set

                // integer coefficients c[i] of s^i t^(3-i)
                std::array<Integer, 4> c{0, 0, 0, 0};
                Integer den_lcm = 1;
                for (const auto& [e, coef] : cubic.terms())
                    den_lcm = ::lcm(den_lcm, Integer(coef.get_den()));
                for (const auto& [e, coef] : cubic.terms()) {
                    Rational scaled = coef * Rational(den_lcm);
                    c[e[0]] = scaled.get_num();
                }
                Integer content = 0;
                for (const auto& x : c) content = gcd(content, x);
                if (content > 1)
                    for (auto& x : c) x /= content;

                detail::ProjectiveRoots roots = detail::binary_cubic_rational_roots(c);
                if (!roots.complete) round_complete = false;

                std::vector<Vector> points;
                for (const auto& [alpha, beta] : roots.roots) {
                    Vector w(r);
                    for (std::size_t j = 0; j < r; ++j)
                        w[j] = Rational(alpha) * p[j] + Rational(beta) * q[j];
                    points.push_back(detail::canonical_direction(w));
                }
                plane_points.push_back(std::move(points));
                break;
            }
        }

        bool degenerate_combination = false;
        std::vector<Vector> candidates;
        std::vector<std::size_t> pick(r - 1, 0);
        bool any_empty = false;
        for (const auto& pts : plane_points)
            if (pts.empty()) any_empty = true;
        if (!any_empty) {
            for (;;) {
                Matrix stacked(r - 1, r);
                for (std::size_t i = 0; i < r - 1; ++i)
                    for (std::size_t j = 0; j < r; ++j) stacked(i, j) = plane_points[i][pick[i]][j];
                if (rank(stacked) == r - 1) {
                    SubspaceBasis ann = kernel_basis(stacked);
                    Vector ell = detail::canonical_direction(ann.vectors.front());
                    bool seen = false;
                    for (const auto& c : candidates)
                        if (c == ell) seen = true;
                    if (!seen) candidates.push_back(std::move(ell));
                } else {
                    degenerate_combination = true;
                }
                std::size_t pos = r - 1;
                bool done = true;
                while (pos-- > 0) {
                    if (++pick[pos] < plane_points[pos].size()) {
                        for (std::size_t q2 = pos + 1; q2 < r - 1; ++q2) pick[q2] = 0;
                        done = false;
                        break;
                    }
                    pick[pos] = 0;
                }
                if (done) break;
            }
        }

        for (const auto& ell : candidates)
            if (auto st = try_special_hyperplane(s, ell))
                return {SpecialStatus::special, std::move(st)};

        // Conclusive negative: complete factorizations and no degenerate
        // lift, so a qualifying hyperplane would have been found.
        if (round_complete && !degenerate_combination)
            return {SpecialStatus::not_special, std::nullopt};
    }
    return {SpecialStatus::undetermined_over_rationals, std::nullopt};
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

struct ClassifyReport {
    std::size_t n = 0;
    std::size_t r = 0;
    std::size_t span_rank = 0;
    std::size_t common_kernel_dim = 0;
    bool nondegenerate = false;
    std::map<std::size_t, bool> width_holds; // k in 2..min(r,n)
    std::map<std::size_t, bool> is_nk;       // width && nondegenerate
    SpecialStatus special_status = SpecialStatus::not_attempted;
    std::optional<SpecialStructure> special;
};

inline ClassifyReport classify(const SymMatrixSystem& s) {
    ClassifyReport rep;
    rep.n = s.n;
    rep.r = s.size();
    rep.span_rank = span_rank(s.matrices);
    rep.common_kernel_dim = common_kernel(s.matrices).dim();
    rep.nondegenerate = rep.common_kernel_dim == 0;

    const std::size_t kmax = std::min(rep.r, rep.n);
    for (std::size_t k = 2; k <= kmax; ++k) {
        const bool holds = check_width_symbolic(s.matrices, k).holds;
        rep.width_holds[k] = holds;
        rep.is_nk[k] = holds && rep.nondegenerate;
    }

    if (rep.r >= 4 && kmax >= 4 && rep.width_holds.at(4) && s.n >= 3) {
        SpecialDetection det = detect_special(s);
        rep.special_status = det.status;
        rep.special = std::move(det.structure);
    }
    return rep;
}

} // namespace widthk
