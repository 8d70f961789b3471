#pragma once

// Exact rational vectors and matrices with the elimination primitives the
// rest of the library is built on: rank, kernels, congruence, hyperplane
// restriction. All values are immutable in spirit; every operation returns
// a fresh object and nothing here mutates shared state.

#include <widthk/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace widthk {

class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t dim) : entries_(dim) {}
    Vector(std::initializer_list<Rational> init) : entries_(init) {}
    explicit Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const Vector&, const Vector&) = default;

  private:
    std::vector<Rational> entries_;
};

inline Rational dot(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Vector row(std::size_t i) const {
        Vector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> entries_;
};

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols() != v.dim()) throw std::invalid_argument("matvec: dimension mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

// Symmetric matrix stored as the upper triangle, so M = M^t holds by
// construction and cannot be violated by entry writes.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), upper_(n * (n + 1) / 2) {}

    std::size_t dim() const { return n_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }
    Rational& operator()(std::size_t i, std::size_t j) { return upper_[index(i, j)]; }

    Matrix to_matrix() const {
        Matrix m(n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = (*this)(i, j);
        return m;
    }

    /// Validates symmetry of a full square matrix and repacks it.
    static SymMatrix from_matrix(const Matrix& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("sym: not square");
        SymMatrix s(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i; j < m.cols(); ++j) {
                if (m(i, j) != m(j, i)) throw std::invalid_argument("sym: matrix is not symmetric");
                s(i, j) = m(i, j);
            }
        return s;
    }

    static SymMatrix identity(std::size_t n) {
        SymMatrix s(n);
        for (std::size_t i = 0; i < n; ++i) s(i, i) = 1;
        return s;
    }

    /// E_ii, or E_ij + E_ji for i != j.
    static SymMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
        SymMatrix s(n);
        s(i, j) = 1;
        return s;
    }

    bool is_zero() const {
        for (const auto& e : upper_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

  private:
    std::size_t index(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        if (j >= n_) throw std::out_of_range("sym: index");
        return i * n_ - i * (i - 1) / 2 + (j - i);
    }

    std::size_t n_ = 0;
    std::vector<Rational> upper_;
};

inline Vector operator*(const SymMatrix& m, const Vector& v) {
    if (m.dim() != v.dim()) throw std::invalid_argument("symvec: dimension mismatch");
    Vector out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sym add: dimension mismatch");
    SymMatrix s(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
}

inline SymMatrix operator*(const Rational& c, const SymMatrix& a) {
    SymMatrix s(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i; j < a.dim(); ++j) s(i, j) = c * a(i, j);
    return s;
}

/// Rank over the rationals by fraction-free (Bareiss) elimination. Rows are
/// first scaled to integers, then the pivoting elimination keeps every
/// intermediate entry an integer minor of the scaled matrix.
inline std::size_t rank(const Matrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < cols; ++j)
            lcm = ::lcm(lcm, Integer(m(i, j).get_den()));
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = m(i, j) * Rational(lcm);
            a[i][j] = scaled.get_num(); // denominator is 1 after scaling
        }
    }

    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                Integer t = a[i][j] * a[r][col] - a[i][col] * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        ++r;
    }
    return r;
}

struct RowEchelon {
    Matrix mat;                          // reduced row echelon form
    std::vector<std::size_t> pivot_cols; // one per nonzero row
};

/// Unique reduced row echelon form over the rationals (Gauss-Jordan,
/// pivots normalized to 1).
inline RowEchelon reduced_row_echelon(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        Rational inv = 1 / m(r, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(col);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

// Basis of a linear subspace of Q^n, canonicalized to reduced echelon form.
// Two SubspaceBasis values describe the same subspace iff they compare equal.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vector> vectors;

    std::size_t dim() const { return vectors.size(); }
    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;
};

/// Canonicalizes a spanning set (row reduction, zero rows dropped).
inline SubspaceBasis make_subspace(std::size_t ambient_dim, std::span<const Vector> spanning) {
    Matrix rows(spanning.size(), ambient_dim);
    for (std::size_t i = 0; i < spanning.size(); ++i) {
        if (spanning[i].dim() != ambient_dim)
            throw std::invalid_argument("subspace: vector dimension mismatch");
        for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = spanning[i][j];
    }
    RowEchelon re = reduced_row_echelon(std::move(rows));
    SubspaceBasis b;
    b.ambient_dim = ambient_dim;
    for (std::size_t i = 0; i < re.pivot_cols.size(); ++i) b.vectors.push_back(re.mat.row(i));
    return b;
}

inline SubspaceBasis make_subspace(std::size_t ambient_dim, const std::vector<Vector>& spanning) {
    return make_subspace(ambient_dim, std::span<const Vector>(spanning));
}

inline Matrix stack_rows(const SubspaceBasis& b) {
    Matrix m(b.vectors.size(), b.ambient_dim);
    for (std::size_t i = 0; i < b.vectors.size(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim; ++j) m(i, j) = b.vectors[i][j];
    return m;
}

/// Canonical basis of { u : m u = 0 }.
inline SubspaceBasis kernel_basis(const Matrix& m) {
    RowEchelon re = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : re.pivot_cols) is_pivot[c] = true;

    std::vector<Vector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t p = 0; p < re.pivot_cols.size(); ++p)
            v[re.pivot_cols[p]] = -re.mat(p, f);
        gens.push_back(std::move(v));
    }
    return make_subspace(m.cols(), gens);
}

inline bool subspace_contains(const SubspaceBasis& b, const Vector& v) {
    if (v.dim() != b.ambient_dim) throw std::invalid_argument("subspace: dimension mismatch");
    Matrix m(b.vectors.size() + 1, b.ambient_dim);
    for (std::size_t i = 0; i < b.vectors.size(); ++i)
        for (std::size_t j = 0; j < b.ambient_dim; ++j) m(i, j) = b.vectors[i][j];
    for (std::size_t j = 0; j < b.ambient_dim; ++j) m(b.vectors.size(), j) = v[j];
    return rank(m) == b.dim();
}

/// Intersection of two subspaces, via stacked annihilators.
inline SubspaceBasis subspace_intersection(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("subspace: ambient mismatch");
    SubspaceBasis ann_a = kernel_basis(stack_rows(a));
    SubspaceBasis ann_b = kernel_basis(stack_rows(b));
    Matrix stacked(ann_a.dim() + ann_b.dim(), a.ambient_dim);
    std::size_t r = 0;
    for (const auto& v : ann_a.vectors) {
        for (std::size_t j = 0; j < a.ambient_dim; ++j) stacked(r, j) = v[j];
        ++r;
    }
    for (const auto& v : ann_b.vectors) {
        for (std::size_t j = 0; j < a.ambient_dim; ++j) stacked(r, j) = v[j];
        ++r;
    }
    return kernel_basis(stacked);
}

/// Common kernel of a family of symmetric matrices: the kernel of the
/// stacked (r n) x n matrix.
inline SubspaceBasis common_kernel(std::span<const SymMatrix> ms) {
    if (ms.empty()) throw std::invalid_argument("common_kernel: empty family");
    const std::size_t n = ms.front().dim();
    for (const auto& m : ms)
        if (m.dim() != n) throw std::invalid_argument("common_kernel: dimension mismatch");
    Matrix stacked(ms.size() * n, n);
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = ms[k](i, j);
    return kernel_basis(stacked);
}

inline SubspaceBasis common_kernel(const std::vector<SymMatrix>& ms) {
    return common_kernel(std::span<const SymMatrix>(ms));
}

/// B H B^t for a rectangular B (rows are the vectors the form is evaluated
/// on). Symmetry of the result is structural.
inline SymMatrix congruence_rect(const Matrix& b, const SymMatrix& h) {
    if (b.cols() != h.dim()) throw std::invalid_argument("congruence: dimension mismatch");
    Matrix bh = b * h.to_matrix();
    SymMatrix out(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = i; j < b.rows(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < b.cols(); ++k) s += bh(i, k) * b(j, k);
            out(i, j) = s;
        }
    return out;
}

/// A H A^t for square invertible-or-not A of the same dimension as H.
inline SymMatrix congruence(const Matrix& a, const SymMatrix& h) {
    if (a.rows() != a.cols() || a.rows() != h.dim())
        throw std::invalid_argument("congruence: dimension mismatch");
    return congruence_rect(a, h);
}

/// Restriction of every quadratic form in the family to the hyperplane
/// spanned by the given n-1 independent vectors.
inline std::vector<SymMatrix> restrict_to_hyperplane(std::span<const SymMatrix> ms,
                                                     std::span<const Vector> basis) {
    if (ms.empty()) throw std::invalid_argument("restrict: empty family");
    const std::size_t n = ms.front().dim();
    if (basis.size() + 1 != n) throw std::invalid_argument("restrict: need n-1 basis vectors");
    Matrix b(basis.size(), n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].dim() != n) throw std::invalid_argument("restrict: vector dimension mismatch");
        for (std::size_t j = 0; j < n; ++j) b(i, j) = basis[i][j];
    }
    if (rank(b) != basis.size()) throw std::invalid_argument("restrict: dependent basis");
    std::vector<SymMatrix> out;
    out.reserve(ms.size());
    for (const auto& h : ms) {
        if (h.dim() != n) throw std::invalid_argument("restrict: dimension mismatch");
        out.push_back(congruence_rect(b, h));
    }
    return out;
}

/// Rank of the family viewed as vectors in the n(n+1)/2-dimensional space
/// of symmetric matrices.
inline std::size_t span_rank(std::span<const SymMatrix> ms) {
    if (ms.empty()) return 0;
    const std::size_t n = ms.front().dim();
    const std::size_t cols = n * (n + 1) / 2;
    Matrix v(ms.size(), cols);
    for (std::size_t k = 0; k < ms.size(); ++k) {
        if (ms[k].dim() != n) throw std::invalid_argument("span_rank: dimension mismatch");
        std::size_t c = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) v(k, c++) = ms[k](i, j);
    }
    return rank(v);
}

inline std::size_t span_rank(const std::vector<SymMatrix>& ms) {
    return span_rank(std::span<const SymMatrix>(ms));
}

} // namespace widthk
