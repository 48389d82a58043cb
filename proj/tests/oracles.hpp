#pragma once

// Test-only oracles, kept deliberately naive and independent of the library
// algorithms they cross-check.

#include <set>
#include <vector>

#include "liecoh/cartan.hpp"
#include "liecoh/root_system.hpp"

namespace oracle {

using liecoh::CartanMatrix;
using liecoh::Coords;

// All roots as the closure of the simple roots under every simple
// reflection, in simple-root coordinates. No height induction, no strings.
inline std::set<Coords> roots_by_reflection_closure(const CartanMatrix& cm) {
    const int n = cm.rank();
    std::set<Coords> all;
    std::vector<Coords> stack;
    for (int i = 0; i < n; ++i) {
        Coords e(n, 0);
        e[i] = 1;
        all.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        Coords c = stack.back();
        stack.pop_back();
        for (int i = 0; i < n; ++i) {
            long long pair = 0;  // <r, alpha_i^vee>
            for (int j = 0; j < n; ++j) pair += cm(i, j) * c[j];
            Coords rc = c;
            rc[i] -= pair;
            if (all.insert(rc).second) stack.push_back(rc);
        }
    }
    return all;
}

inline std::set<Coords> positive_roots_by_reflection_closure(const CartanMatrix& cm) {
    std::set<Coords> pos;
    for (const Coords& c : roots_by_reflection_closure(cm)) {
        bool nonneg = true;
        for (long long x : c) nonneg = nonneg && x >= 0;
        if (nonneg) pos.insert(c);
    }
    return pos;
}

// Dominant weights <= lambda by brute box enumeration over simple-root
// steps; depends only on the Cartan matrix columns.
inline std::set<Coords> dominance_ideal_by_box(const liecoh::RootSystem& rs,
                                               const Coords& lambda_dom, int box) {
    const int n = rs.rank();
    std::set<Coords> out;
    std::vector<long long> steps(n, 0);
    for (;;) {
        Coords mu = lambda_dom;
        for (int j = 0; j < n; ++j) {
            Coords aj = rs.simple_root_fund(j);
            for (int i = 0; i < n; ++i) mu[i] -= steps[j] * aj[i];
        }
        if (rs.is_dominant(mu)) out.insert(mu);
        int k = 0;
        while (k < n && steps[k] == box) steps[k++] = 0;
        if (k == n) break;
        ++steps[k];
    }
    return out;
}

}  // namespace oracle
