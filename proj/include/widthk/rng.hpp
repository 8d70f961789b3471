#pragma once

#include <widthk/linalg.hpp>

#include <cstdint>
#include <random>

namespace widthk {

// Deterministic seeded generator. mt19937_64 and the mapping below are both
// fully specified, so identical seeds give identical draws on every platform
// (std::uniform_int_distribution is not portable, hence the hand-rolled map).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform integer in [lo, hi], rejection sampled to avoid modulo bias.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    std::uint64_t next() { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

inline Vector random_vector(Rng& rng, std::size_t n, std::int64_t box) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long>(rng.uniform(-box, box)));
    return v;
}

inline Vector random_nonzero_vector(Rng& rng, std::size_t n, std::int64_t box) {
    for (;;) {
        Vector v = random_vector(rng, n, box);
        if (!v.is_zero()) return v;
    }
}

inline SymMatrix random_symmetric(Rng& rng, std::size_t n, std::int64_t box) {
    SymMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            s(i, j) = Rational(static_cast<long>(rng.uniform(-box, box)));
    return s;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t box) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Rational(static_cast<long>(rng.uniform(-box, box)));
    return m;
}

inline Matrix random_invertible(Rng& rng, std::size_t n, std::int64_t box) {
    for (;;) {
        Matrix m = random_matrix(rng, n, n, box);
        if (rank(m) == n) return m;
    }
}

} // namespace widthk
