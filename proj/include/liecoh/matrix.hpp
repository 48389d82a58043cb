#pragma once

// Dense exact linear algebra over GMP rationals: row reduction, rank,
// nullspaces, consistent solves. Everything is deterministic: pivots are
// chosen in fixed order and kernel bases are normalized to primitive
// integer vectors with a positive leading entry.

#include <optional>
#include <stdexcept>
#include <vector>

#include "liecoh/arith.hpp"

namespace liecoh {

class Mat {
  public:
    Mat() : r_(0), c_(0) {}
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix product shape mismatch");
        Mat p(r_, o.c_);
        Rat acc;
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Rat& x = (*this)(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.c_; ++j) {
                    if (o(k, j) == 0) continue;
                    acc = x * o(k, j);
                    p(i, j) += acc;
                }
            }
        return p;
    }

    Mat operator+(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape mismatch");
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
        return s;
    }

    Mat operator-(const Mat& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix diff shape mismatch");
        Mat s(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
        return s;
    }

    Mat operator*(const Rat& s) const {
        Mat m(r_, c_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
        return m;
    }

  private:
    int r_, c_;
    std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns rank, records pivot columns.
// First-nonzero pivot rule keeps the reduction deterministic.
inline int rref_inplace(Mat& m, std::vector<int>* pivot_cols = nullptr) {
    int rank = 0;
    const int rows = m.rows(), cols = m.cols();
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j) swap(m(piv, j), m(rank, j));
        Rat inv = 1 / m(rank, col);
        for (int j = col; j < cols; ++j) m(rank, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || m(i, col) == 0) continue;
            Rat f = m(i, col);
            for (int j = col; j < cols; ++j) m(i, j) -= f * m(rank, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    return rank;
}

inline int rank_of(Mat m) { return rref_inplace(m); }

// Scale a rational row vector to a primitive integer vector whose first
// nonzero entry is positive. Identical input spans yield identical output.
inline void primitivize_row(Mat& m, int row) {
    Int l = 1, g = 0;
    for (int j = 0; j < m.cols(); ++j)
        if (m(row, j) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(row, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
        m(row, j) *= Rat(l);
        m(row, j).canonicalize();
        if (m(row, j) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(row, j).get_num_mpz_t());
    }
    if (g == 0) return;
    int sign = 0;
    for (int j = 0; j < m.cols() && sign == 0; ++j)
        if (m(row, j) != 0) sign = (m(row, j) > 0) ? 1 : -1;
    if (sign < 0) g = -g;
    for (int j = 0; j < m.cols(); ++j) {
        m(row, j) /= Rat(g);
        m(row, j).canonicalize();
    }
}

// Kernel of m (right nullspace), one primitive integer basis vector per row,
// ordered by ascending free column.
inline Mat nullspace(Mat m) {
    std::vector<int> piv;
    int rank = rref_inplace(m, &piv);
    const int cols = m.cols();
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    Mat ker(cols - rank, cols);
    int k = 0;
    for (int free = 0; free < cols; ++free) {
        if (is_piv[free]) continue;
        ker(k, free) = 1;
        for (int p = 0; p < rank; ++p) ker(k, piv[p]) = -m(p, free);
        primitivize_row(ker, k);
        ++k;
    }
    return ker;
}

// Exact solve of A x = b for a single right-hand side; nullopt when
// inconsistent. Underdetermined systems take free variables = 0 so the
// answer is deterministic.
inline std::optional<std::vector<Rat>> solve_consistent(const Mat& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("solve shape mismatch");
    Mat aug(A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    std::vector<int> piv;
    int rank = rref_inplace(aug, &piv);
    for (int p = 0; p < rank; ++p)
        if (piv[p] == A.cols()) return std::nullopt;  // pivot in rhs column
    std::vector<Rat> x(A.cols());
    for (int p = 0; p < rank; ++p) x[piv[p]] = aug(p, A.cols());
    return x;
}

inline Mat inverse(const Mat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = A.rows();
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv;
    int rank = rref_inplace(aug, &piv);
    if (rank != n) throw std::domain_error("matrix is singular");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace liecoh
