#pragma once

// Truncated graded polynomial quotient rings with monomial relations only:
// Q[g_1,...,g_m] / (g_i^{m_i}). Enough to model the cohomology of projective
// spaces, hypersurfaces, complete intersections and products of projective
// spaces, where everything is generated by hyperplane classes. Integration
// over the fundamental class is realized as "coefficient of the top monomial
// times a fixed rational".

#include <widthk/poly.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace widthk {

struct RingGenerator {
    std::string name;
    unsigned degree = 1;     // grading weight of the generator
    unsigned nilpotency = 1; // g^nilpotency = 0
};

class TruncatedRing {
  public:
    TruncatedRing(std::vector<RingGenerator> gens, Exponents top_monomial, Rational top_integral)
        : gens_(std::move(gens)), top_monomial_(std::move(top_monomial)),
          top_integral_(std::move(top_integral)) {
        if (top_monomial_.size() != gens_.size())
            throw std::invalid_argument("ring: top monomial arity mismatch");
        names_.reserve(gens_.size());
        for (const auto& g : gens_) names_.push_back(g.name);
    }

    const std::vector<RingGenerator>& generators() const { return gens_; }
    const std::vector<std::string>& names() const { return names_; }
    const Exponents& top_monomial() const { return top_monomial_; }
    const Rational& top_integral() const { return top_integral_; }

    /// Total grading of the ring, the weighted degree of the top monomial.
    std::size_t dimension() const {
        std::size_t d = 0;
        for (std::size_t i = 0; i < gens_.size(); ++i) d += top_monomial_[i] * gens_[i].degree;
        return d;
    }

    /// Deletes every monomial with some exponent at or above the generator's
    /// nilpotency order. Idempotent.
    MultiPoly reduce(const MultiPoly& p) const {
        if (p.vars() != names_) throw std::invalid_argument("ring: unknown variables");
        MultiPoly out(names_);
        for (const auto& [e, c] : p.terms()) {
            bool keep = true;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] >= gens_[i].nilpotency) { keep = false; break; }
            if (keep) out.add_term(e, c);
        }
        return out;
    }

    MultiPoly zero() const { return MultiPoly(names_); }
    MultiPoly one() const { return MultiPoly::constant(names_, 1); }
    MultiPoly gen(std::size_t i) const { return MultiPoly::variable(names_, i); }

  private:
    std::vector<RingGenerator> gens_;
    std::vector<std::string> names_;
    Exponents top_monomial_;
    Rational top_integral_;
};

using RingPtr = std::shared_ptr<const TruncatedRing>;

// Element of a truncated ring, stored reduced.
class RingClass {
  public:
    RingClass(RingPtr ring, const MultiPoly& poly) : ring_(std::move(ring)), poly_(ring_->reduce(poly)) {}

    const RingPtr& ring() const { return ring_; }
    const MultiPoly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    friend RingClass operator+(const RingClass& a, const RingClass& b) {
        a.check_ring(b);
        return RingClass(a.ring_, a.poly_ + b.poly_);
    }

    friend RingClass operator-(const RingClass& a, const RingClass& b) {
        a.check_ring(b);
        return RingClass(a.ring_, a.poly_ - b.poly_);
    }

    friend RingClass operator*(const RingClass& a, const RingClass& b) {
        a.check_ring(b);
        return RingClass(a.ring_, a.poly_ * b.poly_);
    }

    friend RingClass operator*(const Rational& c, const RingClass& a) {
        return RingClass(a.ring_, c * a.poly_);
    }

    RingClass pow(std::size_t k) const {
        RingClass acc(ring_, ring_->one());
        for (std::size_t i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const RingClass& a, const RingClass& b) {
        return a.poly_ == b.poly_;
    }

  private:
    void check_ring(const RingClass& o) const {
        if (ring_.get() != o.ring_.get() && ring_->names() != o.ring_->names())
            throw std::invalid_argument("ring class: mixed rings");
    }

    RingPtr ring_;
    MultiPoly poly_;
};

/// Pairing against the fundamental class: coefficient of the top monomial
/// times the ring's top integral. Non-top classes contribute nothing.
inline Rational integrate_top(const RingClass& c) {
    const auto& terms = c.poly().terms();
    auto it = terms.find(c.ring()->top_monomial());
    if (it == terms.end()) return 0;
    return it->second * c.ring()->top_integral();
}

} // namespace widthk
