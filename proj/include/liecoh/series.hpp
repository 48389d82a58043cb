#pragma once

// Polynomials in one variable q with integer coefficients, used as graded
// dimension series. Kept trimmed (no trailing zeros), so equality of series
// is equality of the coefficient vectors.

#include <string>
#include <vector>

#include "liecoh/arith.hpp"

namespace liecoh {

class GradedSeries {
  public:
    GradedSeries() = default;
    explicit GradedSeries(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static GradedSeries one() { return GradedSeries({Int(1)}); }

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Int coeff(int d) const {
        return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[d] : Int(0);
    }

    void set_coeff(int d, Int v) {
        if (d >= static_cast<int>(c_.size())) c_.resize(d + 1);
        c_[d] = std::move(v);
        trim();
    }

    void add_coeff(int d, const Int& v) {
        if (d >= static_cast<int>(c_.size())) c_.resize(d + 1);
        c_[d] += v;
        trim();
    }

    Int total() const {
        Int t = 0;
        for (const Int& x : c_) t += x;
        return t;
    }

    bool operator==(const GradedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const GradedSeries& o) const { return c_ != o.c_; }

    // Coefficientwise comparison; true iff every coefficient of *this is
    // at most the matching coefficient of o.
    bool dominated_by(const GradedSeries& o) const {
        for (int d = 0; d < static_cast<int>(c_.size()); ++d)
            if (c_[d] > o.coeff(d)) return false;
        return true;
    }

    bool is_palindromic() const {
        int n = static_cast<int>(c_.size());
        for (int d = 0; d < n / 2; ++d)
            if (c_[d] != c_[n - 1 - d]) return false;
        return true;
    }

    // "1 + q + 2q^2" style rendering; zero series renders as "0".
    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        for (int d = 0; d < static_cast<int>(c_.size()); ++d) {
            if (c_[d] == 0) continue;
            if (!s.empty()) s += " + ";
            if (c_[d] != 1 || d == 0) s += c_[d].get_str();
            if (d == 1) s += "q";
            if (d >= 2) s += "q^" + std::to_string(d);
        }
        return s.empty() ? "0" : s;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Int> c_;
};

// Hilbert series, truncated at degree `top`, of a free commutative
// polynomial ring on generators of the given degrees: the number of
// multisets of generator degrees summing to each d. An upper bound for
// any cyclic module generated in degree 0 over those generators.
inline GradedSeries free_series_bound(const std::vector<int>& degrees, int top) {
    std::vector<Int> c(top + 1, Int(0));
    c[0] = 1;
    for (int g : degrees)
        for (int d = g; d <= top; ++d) c[d] += c[d - g];
    return GradedSeries(std::move(c));
}

}  // namespace liecoh
