#pragma once

// Cartan matrices of finite type: construction from a type label or from
// explicit integer entries, validation (including positive-definiteness of
// the symmetrized matrix, checked in exact arithmetic), symmetrizer, and
// the dual matrix obtained by transposing.
//
// Index convention used throughout the library:
//     a[i][j] = <alpha_j, alpha_i^vee>
// so row i lists the pairings against the i-th simple coroot, and the j-th
// column is the j-th simple root written in fundamental-weight coordinates.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "liecoh/arith.hpp"
#include "liecoh/matrix.hpp"

namespace liecoh {

class CartanMatrix {
  public:
    static CartanMatrix from_label(const std::string& label);
    static CartanMatrix from_entries(std::vector<std::vector<long long>> entries,
                                     std::string label = "");

    int rank() const { return rank_; }
    const std::string& label() const { return label_; }
    long long operator()(int i, int j) const { return a_[i][j]; }
    const std::vector<std::vector<long long>>& entries() const { return a_; }

    // Symmetrizer d: d_i * a[i][j] == d_j * a[j][i], positive integers,
    // minimum 1 on each connected component. (alpha_i, alpha_j) = d_i a[i][j].
    const std::vector<long long>& symmetrizer() const { return d_; }

    bool is_irreducible() const { return components_ == 1; }

    CartanMatrix langlands_dual() const {
        std::vector<std::vector<long long>> t(rank_, std::vector<long long>(rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) t[i][j] = a_[j][i];
        return from_entries(std::move(t), dual_label(label_));
    }

    static std::string dual_label(const std::string& label) {
        if (label.empty()) return label;
        std::string d = label;
        if (d[0] == 'B')
            d[0] = 'C';
        else if (d[0] == 'C')
            d[0] = 'B';
        return d;
    }

  private:
    CartanMatrix() = default;
    void validate();

    int rank_ = 0;
    int components_ = 0;
    std::vector<std::vector<long long>> a_;
    std::vector<long long> d_;
    std::string label_;
};

inline CartanMatrix CartanMatrix::from_entries(std::vector<std::vector<long long>> entries,
                                               std::string label) {
    CartanMatrix cm;
    cm.rank_ = static_cast<int>(entries.size());
    cm.a_ = std::move(entries);
    cm.label_ = std::move(label);
    cm.validate();
    return cm;
}

inline void CartanMatrix::validate() {
    if (rank_ < 1) throw std::invalid_argument("Cartan matrix: empty");
    for (const auto& row : a_)
        if (static_cast<int>(row.size()) != rank_)
            throw std::invalid_argument("Cartan matrix: not square");
    for (int i = 0; i < rank_; ++i) {
        if (a_[i][i] != 2) throw std::invalid_argument("Cartan matrix: diagonal entry != 2");
        for (int j = 0; j < rank_; ++j) {
            if (i == j) continue;
            if (a_[i][j] > 0) throw std::invalid_argument("Cartan matrix: positive off-diagonal");
            if ((a_[i][j] == 0) != (a_[j][i] == 0))
                throw std::invalid_argument("Cartan matrix: zero pattern not symmetric");
        }
    }

    // Symmetrizer by propagation along the Dynkin graph; each connected
    // component is scaled so its smallest d_i is 1. A cycle would make the
    // propagation inconsistent, which positive-definiteness rules out anyway.
    std::vector<Rat> d(rank_);
    components_ = 0;
    std::vector<int> comp(rank_, -1);
    for (int s = 0; s < rank_; ++s) {
        if (comp[s] >= 0) continue;
        int c = components_++;
        comp[s] = c;
        d[s] = 1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < rank_; ++j) {
                if (i == j || a_[i][j] == 0) continue;
                Rat dj = d[i] * rat_of(a_[i][j]) / rat_of(a_[j][i]);
                if (comp[j] < 0) {
                    comp[j] = c;
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix: no symmetrizer");
                }
            }
        }
        Rat mn;
        bool first = true;
        for (int i = 0; i < rank_; ++i)
            if (comp[i] == c && (first || d[i] < mn)) {
                mn = d[i];
                first = false;
            }
        for (int i = 0; i < rank_; ++i)
            if (comp[i] == c) d[i] /= mn;
    }
    d_.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (d[i] <= 0) throw std::invalid_argument("Cartan matrix: nonpositive symmetrizer");
        d_[i] = rat_to_ll(d[i]);
    }

    // Positive-definiteness of (d_i a_ij) via Sylvester: symmetric Gaussian
    // elimination must meet a positive pivot at every step.
    Mat s(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) s(i, j) = rat_of(d_[i]) * rat_of(a_[i][j]);
    for (int k = 0; k < rank_; ++k) {
        if (s(k, k) <= 0) throw std::invalid_argument("Cartan matrix: not finite type");
        for (int i = k + 1; i < rank_; ++i) {
            if (s(i, k) == 0) continue;
            Rat f = s(i, k) / s(k, k);
            for (int j = k; j < rank_; ++j) s(i, j) -= f * s(k, j);
        }
    }
}

inline CartanMatrix CartanMatrix::from_label(const std::string& label) {
    if (label.size() < 2 || label[0] < 'A' || label[0] > 'G')
        throw std::invalid_argument("bad type label: " + label);
    for (size_t i = 1; i < label.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw std::invalid_argument("bad type label: " + label);
    const char fam = label[0];
    const int n = std::stoi(label.substr(1));
    auto chain = [](int n) {
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
        }
        return a;
    };
    std::vector<std::vector<long long>> a;
    switch (fam) {
        case 'A':
            if (n < 1) throw std::invalid_argument("bad rank for type A");
            a = chain(n);
            break;
        case 'B':  // alpha_n short: a[n-1][n-2] = -2
            if (n < 2) throw std::invalid_argument("bad rank for type B");
            a = chain(n);
            a[n - 1][n - 2] = -2;
            break;
        case 'C':  // alpha_n long: a[n-2][n-1] = -2
            if (n < 2) throw std::invalid_argument("bad rank for type C");
            a = chain(n);
            a[n - 2][n - 1] = -2;
            break;
        case 'D': {
            if (n < 2) throw std::invalid_argument("bad rank for type D");
            a = chain(n);
            // detach the last chain link, fork both end nodes off node n-3
            a[n - 1][n - 2] = a[n - 2][n - 1] = 0;
            if (n >= 3) a[n - 1][n - 3] = a[n - 3][n - 1] = -1;
            break;
        }
        case 'E': {
            if (n < 6 || n > 8) throw std::invalid_argument("bad rank for type E");
            a = std::vector<std::vector<long long>>(n, std::vector<long long>(n, 0));
            for (int i = 0; i < n; ++i) a[i][i] = 2;
            auto join = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
            // Bourbaki numbering: 1-3-4-5-...-n as a chain, 2 attached to 4.
            join(0, 2);
            join(2, 3);
            join(1, 3);
            for (int i = 3; i + 1 < n; ++i) join(i, i + 1);
            break;
        }
        case 'F':
            if (n != 4) throw std::invalid_argument("bad rank for type F");
            a = chain(4);
            a[2][1] = -2;
            break;
        case 'G':
            if (n != 2) throw std::invalid_argument("bad rank for type G");
            a = {{2, -1}, {-3, 2}};
            break;
        default:
            throw std::invalid_argument("bad type label: " + label);
    }
    return from_entries(std::move(a), label);
}

}  // namespace liecoh
