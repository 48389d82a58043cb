#pragma once

// Root system of a finite-type Cartan matrix: positive roots generated
// height by height through root strings, coroots, heights, exponents,
// Weyl-group utilities on weights (dominant representative, orbits) and
// the dominance ideal of a dominant weight.
//
// Weights are integer vectors in the fundamental-weight basis, so
// <nu, alpha_i^vee> is just nu[i]. Roots additionally carry simple-root
// coordinates and coroot coordinates.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liecoh/cartan.hpp"

namespace liecoh {

struct Root {
    Coords root_c;    // coordinates over the simple roots (nonnegative here)
    Coords coroot_c;  // coordinates of the coroot over the simple coroots
    Coords fund;      // fundamental-weight coordinates
    int height = 0;
    long long half_norm = 0;  // (r, r)/2 in the short-root-is-2 normalization
};

class RootSystem {
  public:
    explicit RootSystem(CartanMatrix cm) : cm_(std::move(cm)) { build(); }

    const CartanMatrix& cartan() const { return cm_; }
    int rank() const { return cm_.rank(); }

    // Positive roots, ordered by height then lexicographically by root
    // coordinates. This order is part of the library's determinism contract.
    const std::vector<Root>& positive_roots() const { return pos_; }
    int num_positive() const { return static_cast<int>(pos_.size()); }
    int dim_algebra() const { return 2 * num_positive() + rank(); }

    const std::vector<int>& exponents() const { return exponents_; }
    const std::vector<int>& height_histogram() const { return histogram_; }

    Int weyl_order() const {
        Int w = 1;
        for (int m : exponents_) w *= (m + 1);
        return w;
    }

    // index of r in the positive list, -1 if absent
    int find_positive(const Coords& root_c) const {
        auto it = pos_index_.find(root_c);
        return it == pos_index_.end() ? -1 : it->second;
    }

    long long pairing_simple(const Coords& fund, int i) const { return fund[i]; }

    long long pairing_coroot(const Coords& fund, const Root& r) const {
        long long s = 0;
        for (int i = 0; i < rank(); ++i) s += r.coroot_c[i] * fund[i];
        return s;
    }

    Coords simple_root_fund(int j) const {
        Coords c(rank());
        for (int i = 0; i < rank(); ++i) c[i] = cm_(i, j);
        return c;
    }

    Coords reflect_simple(const Coords& fund, int i) const {
        Coords out = fund;
        long long n = fund[i];
        for (int k = 0; k < rank(); ++k) out[k] -= n * cm_(k, i);
        return out;
    }

    bool is_dominant(const Coords& fund) const {
        for (long long x : fund)
            if (x < 0) return false;
        return true;
    }

    bool is_antidominant(const Coords& fund) const {
        for (long long x : fund)
            if (x > 0) return false;
        return true;
    }

    // Dominant representative, with the sequence of simple reflections that
    // was applied (in application order: fold left over the word).
    std::pair<Coords, std::vector<int>> dominant_representative(const Coords& fund) const {
        Coords v = fund;
        std::vector<int> word;
        for (;;) {
            int i = 0;
            while (i < rank() && v[i] >= 0) ++i;
            if (i == rank()) return {v, word};
            v = reflect_simple(v, i);
            word.push_back(i);
        }
    }

    // Full Weyl orbit, lexicographically sorted.
    std::vector<Coords> weyl_orbit(const Coords& fund) const {
        std::set<Coords> seen{fund};
        std::vector<Coords> stack{fund};
        while (!stack.empty()) {
            Coords v = std::move(stack.back());
            stack.pop_back();
            for (int i = 0; i < rank(); ++i) {
                Coords w = reflect_simple(v, i);
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        return {seen.begin(), seen.end()};
    }

    // All dominant mu with lambda - mu a nonnegative integer combination of
    // simple roots. Walks cover relations (each a positive-root step),
    // ordered by depth ht(lambda - mu), ties lexicographic.
    std::vector<Coords> dominance_ideal(const Coords& lambda_dom) const {
        if (!is_dominant(lambda_dom)) throw std::invalid_argument("dominance_ideal: not dominant");
        std::map<std::pair<int, Coords>, bool> out;  // key: (depth, mu)
        std::set<Coords> seen{lambda_dom};
        std::vector<std::pair<Coords, int>> stack{{lambda_dom, 0}};
        out[{0, lambda_dom}] = true;
        while (!stack.empty()) {
            auto [mu, depth] = stack.back();
            stack.pop_back();
            for (const Root& r : pos_) {
                Coords nu = coords_sub(mu, r.fund);
                if (!is_dominant(nu)) continue;
                if (!seen.insert(nu).second) continue;
                out[{depth + r.height, nu}] = true;
                stack.emplace_back(nu, depth + r.height);
            }
        }
        std::vector<Coords> ideal;
        ideal.reserve(out.size());
        for (const auto& [key, _] : out) ideal.push_back(key.second);
        return ideal;
    }

    // Exact simple-root coordinates of a weight (rational in general).
    std::vector<Rat> root_coords(const Coords& fund) const {
        std::vector<Rat> b(rank());
        for (int i = 0; i < rank(); ++i) b[i] = rat_of(fund[i]);
        std::vector<Rat> c(rank());
        for (int i = 0; i < rank(); ++i) {
            Rat s;
            for (int j = 0; j < rank(); ++j) s += a_inv_(i, j) * b[j];
            c[i] = s;
        }
        return c;
    }

    bool in_root_lattice(const Coords& fund) const {
        for (const Rat& c : root_coords(fund))
            if (c.get_den() != 1) return false;
        return true;
    }

    // W-invariant symmetric form, short roots normalized to (r,r) = 2.
    Rat form(const Coords& mu, const Coords& nu) const {
        std::vector<Rat> c = root_coords(nu);
        Rat s;
        for (int j = 0; j < rank(); ++j)
            if (c[j] != 0 && mu[j] != 0) s += rat_of(cm_.symmetrizer()[j]) * c[j] * rat_of(mu[j]);
        return s;
    }

    // <mu, 2 rho^vee> = sum of <mu, r^vee> over positive roots; also the
    // pairing of mu against the principal Cartan element.
    long long pairing_2rho_vee(const Coords& fund) const {
        long long s = 0;
        for (const Root& r : pos_) s += pairing_coroot(fund, r);
        return s;
    }

    Coords rho() const { return Coords(rank(), 1); }

    // Index of the positive root whose coroot is the highest coroot
    // (irreducible systems only).
    int highest_coroot_index() const {
        if (!cm_.is_irreducible())
            throw std::domain_error("highest coroot needs an irreducible system");
        return highest_coroot_;
    }

  private:
    void build();

    CartanMatrix cm_;
    std::vector<Root> pos_;
    std::map<Coords, int> pos_index_;
    std::vector<int> exponents_;
    std::vector<int> histogram_;
    Mat a_inv_;
    int highest_coroot_ = -1;
};

inline void RootSystem::build() {
    const int n = rank();

    Mat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rat_of(cm_(i, j));
    a_inv_ = inverse(a);

    auto pairing_i = [&](const Coords& root_c, int i) {
        long long s = 0;
        for (int j = 0; j < n; ++j) s += cm_(i, j) * root_c[j];
        return s;
    };

    // Closure by root strings, height by height. r + alpha_i is a root iff
    // the alpha_i-string down from r is longer than <r, alpha_i^vee>.
    std::set<Coords> known;
    std::vector<std::vector<Coords>> by_height(2);
    for (int i = 0; i < n; ++i) {
        Coords e(n, 0);
        e[i] = 1;
        by_height[1].push_back(e);
        known.insert(e);
    }
    for (int h = 1; !by_height[h].empty(); ++h) {
        by_height.resize(h + 2);
        std::set<Coords> next;
        for (const Coords& r : by_height[h]) {
            for (int i = 0; i < n; ++i) {
                int p = 0;
                Coords down = r;
                for (;;) {
                    down[i] -= 1;
                    bool is_root = down[i] >= 0 && known.count(down) > 0;
                    // the simple root itself steps through 0 to -alpha_i,
                    // which is not a positive root, so the walk stops
                    if (!is_root) break;
                    ++p;
                }
                if (p - pairing_i(r, i) > 0) {
                    Coords up = r;
                    up[i] += 1;
                    if (known.insert(up).second) next.insert(up);
                }
            }
        }
        for (const Coords& r : next) by_height[h + 1].push_back(r);
        if (static_cast<int>(known.size()) > 1000000)
            throw std::runtime_error("root closure runaway; matrix not finite type?");
    }

    const std::vector<long long>& d = cm_.symmetrizer();
    for (size_t h = 1; h < by_height.size(); ++h) {
        std::sort(by_height[h].begin(), by_height[h].end());
        for (const Coords& c : by_height[h]) {
            Root r;
            r.root_c = c;
            r.height = static_cast<int>(h);
            long long norm2 = 0;  // (r, r) = sum c_i c_j d_i a_ij
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) norm2 += c[i] * c[j] * d[i] * cm_(i, j);
            if (norm2 <= 0 || norm2 % 2 != 0) throw std::runtime_error("bad root norm");
            r.half_norm = norm2 / 2;
            r.coroot_c.resize(n);
            for (int i = 0; i < n; ++i) {
                long long num = c[i] * d[i];
                if (num % r.half_norm != 0) throw std::runtime_error("non-integral coroot");
                r.coroot_c[i] = num / r.half_norm;
            }
            r.fund.resize(n);
            for (int i = 0; i < n; ++i) r.fund[i] = pairing_i(c, i);
            pos_index_[c] = static_cast<int>(pos_.size());
            pos_.push_back(std::move(r));
        }
    }

    histogram_.clear();
    for (size_t h = 1; h < by_height.size(); ++h)
        if (!by_height[h].empty()) histogram_.push_back(static_cast<int>(by_height[h].size()));
    for (size_t k = 1; k < histogram_.size(); ++k)
        if (histogram_[k] > histogram_[k - 1])
            throw std::runtime_error("height histogram not weakly decreasing");

    // Exponents are the conjugate partition of the height histogram.
    exponents_.clear();
    for (int i = 0; i < n; ++i) {
        int m = 0;
        for (int hk : histogram_)
            if (hk >= i + 1) ++m;
        exponents_.push_back(m);
    }
    std::sort(exponents_.begin(), exponents_.end());
    long long mexp = 0;
    for (int m : exponents_) mexp += m;
    if (mexp != num_positive()) throw std::runtime_error("exponent sum mismatch");

    // rho in fundamental coordinates must come out as (1,...,1)
    Coords rho_sum(n, 0);
    for (const Root& r : pos_) rho_sum = coords_add(rho_sum, r.fund);
    for (long long x : rho_sum)
        if (x != 2) throw std::runtime_error("rho normalization failed");

    if (cm_.is_irreducible()) {
        int best = -1;
        long long best_h = -1;
        for (int k = 0; k < num_positive(); ++k) {
            long long ch = 0;
            for (long long x : pos_[k].coroot_c) ch += x;
            if (ch > best_h) {
                best_h = ch;
                best = k;
            }
        }
        for (const Root& r : pos_)
            for (int i = 0; i < n; ++i)
                if (pos_[best].coroot_c[i] < r.coroot_c[i])
                    throw std::runtime_error("highest coroot not dominant over coroots");
        highest_coroot_ = best;
    }
}

}  // namespace liecoh
