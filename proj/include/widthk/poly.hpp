#pragma once

// Sparse multivariate polynomials over the rationals. Terms live in a map
// keyed by exponent vector under graded lexicographic order; zero
// coefficients are never stored, so structural equality is polynomial
// equality. Printing walks the order backwards, which yields the usual
// "highest degree first" rendering and is byte-deterministic.

#include <widthk/linalg.hpp>
#include <widthk/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace widthk {

using Exponents = std::vector<std::uint32_t>;

struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        const auto deg = [](const Exponents& e) {
            return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
        };
        const std::uint64_t da = deg(a), db = deg(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, Rational c) {
        MultiPoly p(std::move(vars));
        if (c != 0) p.terms_[Exponents(p.vars_.size(), 0)] = std::move(c);
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, std::size_t index) {
        MultiPoly p(std::move(vars));
        if (index >= p.vars_.size()) throw std::invalid_argument("variable index out of range");
        Exponents e(p.vars_.size(), 0);
        e[index] = 1;
        p.terms_[std::move(e)] = 1;
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::size_t total_degree() const {
        std::size_t d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max<std::size_t>(d, std::accumulate(e.begin(), e.end(), std::size_t{0}));
        return d;
    }

    bool is_homogeneous(std::size_t degree) const {
        for (const auto& [e, c] : terms_)
            if (std::accumulate(e.begin(), e.end(), std::size_t{0}) != degree) return false;
        return true;
    }

    void add_term(const Exponents& exps, const Rational& c) {
        if (exps.size() != vars_.size()) throw std::invalid_argument("term arity mismatch");
        if (c == 0) return;
        auto it = terms_.find(exps);
        if (it == terms_.end()) {
            terms_[exps] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly out(a.vars_);
        for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_vars(b);
        MultiPoly out(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }

    friend MultiPoly operator*(const Rational& c, const MultiPoly& a) {
        MultiPoly out(a.vars_);
        if (c == 0) return out;
        for (const auto& [e, coef] : a.terms_) out.terms_[e] = c * coef;
        return out;
    }

    MultiPoly pow(std::size_t k) const {
        MultiPoly acc = constant(vars_, 1);
        for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("evaluate: arity mismatch");
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t p = 0; p < e[i]; ++p) t *= point[i];
            total += t;
        }
        return total;
    }

    Rational evaluate(const Vector& point) const {
        std::vector<Rational> p(point.dim());
        for (std::size_t i = 0; i < point.dim(); ++i) p[i] = point[i];
        return evaluate(std::span<const Rational>(p));
    }

    /// Substitutes images[i] (all over a common new variable set) for
    /// variable i and expands.
    MultiPoly substitute(std::span<const MultiPoly> images) const {
        if (images.size() != vars_.size()) throw std::invalid_argument("substitute: arity mismatch");
        std::vector<std::string> new_vars =
            images.empty() ? std::vector<std::string>{} : images.front().vars();
        for (const auto& im : images)
            if (im.vars() != new_vars) throw std::invalid_argument("substitute: image variable mismatch");
        MultiPoly out(new_vars);
        for (const auto& [e, c] : terms_) {
            MultiPoly term = MultiPoly::constant(new_vars, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t p = 0; p < e[i]; ++p) term = term * images[i];
            out += term;
        }
        return out;
    }

    /// Graded-lex rendering, highest terms first: "15*L^2 - 6*L*c1 + c1^2 - c2".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            const bool negative = c < 0;
            Rational mag = negative ? Rational(-c) : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string mono = monomial_string(e);
            if (mono.empty()) {
                os << mag.get_str();
            } else if (mag == 1) {
                os << mono;
            } else {
                os << mag.get_str() << "*" << mono;
            }
        }
        return os.str();
    }

  private:
    void check_same_vars(const MultiPoly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable mismatch");
    }

    std::string monomial_string(const Exponents& e) const {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Determinant of a square polynomial matrix by signed permutation
/// expansion (Leibniz). Intended for the small matrices of linear forms the
/// width checks produce.
inline MultiPoly det_linear_forms(const std::vector<std::vector<MultiPoly>>& m) {
    const std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("det: empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("det: not square");
    const auto& vars = m.front().front().vars();

    MultiPoly acc(vars);
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    // Iterate permutations in lexicographic order, tracking the sign.
    for (;;) {
        MultiPoly prod = MultiPoly::constant(vars, 1);
        bool zero = false;
        for (std::size_t i = 0; i < k && !zero; ++i) {
            if (m[i][perm[i]].is_zero()) zero = true;
            else prod = prod * m[i][perm[i]];
        }
        if (!zero) {
            // Parity by counting inversions.
            std::size_t inv = 0;
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = i + 1; j < k; ++j)
                    if (perm[i] > perm[j]) ++inv;
            if (inv % 2 == 0) acc += prod;
            else acc -= prod;
        }
        if (!std::next_permutation(perm.begin(), perm.end())) break;
    }
    return acc;
}

} // namespace widthk
