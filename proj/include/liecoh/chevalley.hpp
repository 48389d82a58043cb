#pragma once

// Chevalley basis of the semisimple Lie algebra attached to a RootSystem:
// integer structure constants, the principal sl2 triple, and the graded
// centralizer of the principal nilpotent.
//
// Basis layout, fixed throughout: indices 0..n-1 are the Cartan elements
// h_i (simple coroots), n+k is x_{r_k} for the k-th positive root, and
// n+N+k is x_{-r_k}, with n = rank and N = number of positive roots.
//
// Sign convention: positive roots carry a total order refining height
// (the RootSystem enumeration order by default). For each non-simple root
// t the pair (a, b), a + b = t, with minimal first member is assigned
// N_{a,b} = +(p+1), p the length of the a-string down from b. Every other
// constant follows from the standard bracket identities. Any such order
// gives an isomorphic algebra; order_seed permutes the ties inside each
// height class so the independence is testable.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "liecoh/root_system.hpp"

namespace liecoh {

// Element of the algebra in the Chevalley basis.
using Element = std::vector<Rat>;

struct PrincipalTriple {
    Element h, e, f;
    std::vector<long long> b;  // h = sum b_i h_i, f = sum b_i x_{-alpha_i}
};

struct CentralizerBasis {
    std::vector<Element> elements;
    std::vector<int> degrees;  // ad-h eigenvalues, ascending

    std::vector<int> q_degrees() const {
        std::vector<int> q;
        q.reserve(degrees.size());
        for (int d : degrees) q.push_back(d / 2);
        return q;
    }
};

class ChevalleyAlgebra {
  public:
    explicit ChevalleyAlgebra(const RootSystem& rs, unsigned long long order_seed = 0)
        : rs_(rs), n_(rs.rank()), npos_(rs.num_positive()), dim_(rs.dim_algebra()) {
        build_order(order_seed);
        build_constants();
        build_table();
        verify_antisymmetry();
        verify_jacobi();
    }

    const RootSystem& roots() const { return rs_; }
    int rank() const { return n_; }
    int num_positive() const { return npos_; }
    int dim() const { return dim_; }

    int h_index(int i) const { return i; }
    int e_index(int k) const { return n_ + k; }
    int f_index(int k) const { return n_ + npos_ + k; }

    // true basis kind helpers: 0 = cartan, +1 = positive root, -1 = negative
    int basis_kind(int idx) const { return idx < n_ ? 0 : (idx < n_ + npos_ ? 1 : -1); }
    int basis_root(int idx) const { return idx < n_ ? -1 : (idx - n_) % npos_; }

    // Structure constant N_{r_k, r_l} for composable positive pairs, else 0.
    long long n_constant(int k, int l) const { return npos_table_[k][l]; }

    const std::vector<std::pair<int, long long>>& bracket_basis(int a, int b) const {
        return table_[a][b];
    }

    Element zero() const { return Element(dim_); }

    Element basis_element(int idx) const {
        Element x(dim_);
        x[idx] = 1;
        return x;
    }

    Element bracket(const Element& x, const Element& y) const {
        Element out(dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < dim_; ++b) {
                if (y[b] == 0) continue;
                for (const auto& [m, c] : table_[a][b]) out[m] += x[a] * y[b] * rat_of(c);
            }
        }
        return out;
    }

    // Matrix of [x, -] acting on the Chevalley basis (columns = images).
    Mat ad_matrix(const Element& x) const {
        Mat m(dim_, dim_);
        for (int a = 0; a < dim_; ++a) {
            if (x[a] == 0) continue;
            for (int b = 0; b < dim_; ++b)
                for (const auto& [t, c] : table_[a][b]) m(t, b) += x[a] * rat_of(c);
        }
        return m;
    }

    static std::string sign_convention() { return "height-order-extraspecial-plus-v1"; }
    unsigned long long order_seed() const { return order_seed_; }

    // JSON cache of the positive-pair constants, keyed by Cartan label (or
    // the serialized matrix when unlabeled). Semantics: if the file carries
    // the current sign-convention tag and has this key, the stored table is
    // compared entry by entry against the freshly computed one and any
    // difference is a hard error; a missing key is appended; a missing or
    // stale tag rebuilds the file. Seeded orders are never cached.
    void sync_cache_file(const std::string& path) const;

    nlohmann::ordered_json cache_entry() const;
    std::string cache_key() const;

  private:
    void build_order(unsigned long long seed);
    void build_constants();
    void build_table();
    void verify_antisymmetry() const;
    void verify_jacobi() const;

    int root_of_coords(const Coords& c) const {
        Coords neg(c.size());
        bool any_pos = false, any_neg = false;
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] > 0) any_pos = true;
            if (c[i] < 0) any_neg = true;
            neg[i] = -c[i];
        }
        if (any_pos && any_neg) return -1;
        return any_neg ? -1 : rs_.find_positive(c);
    }

    bool is_root_coords(const Coords& c) const {
        Coords neg(c.size());
        for (size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        return rs_.find_positive(c) >= 0 || rs_.find_positive(neg) >= 0;
    }

    long long string_down(int k, int l) const {
        // length of the r_k-string below r_l inside the root system
        Coords c = rs_.positive_roots()[l].root_c;
        const Coords& step = rs_.positive_roots()[k].root_c;
        long long p = 0;
        for (;;) {
            c = coords_sub(c, step);
            if (!is_root_coords(c)) break;
            ++p;
        }
        return p;
    }

    // N_{r_u, x_{-r_v}} for distinct positive u, v, via reduction to a
    // positive pair whose sum is a root of smaller height.
    long long mixed_constant(int u, int v) const {
        const auto& pos = rs_.positive_roots();
        Coords d = coords_sub(pos[u].root_c, pos[v].root_c);
        int c = root_of_coords(d);
        if (c >= 0) {  // r_u - r_v positive: N = (c,c)/(u,u) N_{c,v}
            long long num = pos[c].half_norm * npos_table_[c][v];
            if (num % pos[u].half_norm != 0)
                throw std::logic_error("mixed constant not integral");
            return num / pos[u].half_norm;
        }
        Coords nd(d.size());
        for (size_t i = 0; i < d.size(); ++i) nd[i] = -d[i];
        int w = root_of_coords(nd);
        if (w >= 0) {  // r_v - r_u positive: N = (w,w)/(v,v) N_{w,u}
            long long num = pos[w].half_norm * npos_table_[w][u];
            if (num % pos[v].half_norm != 0)
                throw std::logic_error("mixed constant not integral");
            return num / pos[v].half_norm;
        }
        return 0;
    }

    const RootSystem& rs_;
    int n_, npos_, dim_;
    unsigned long long order_seed_ = 0;
    std::vector<int> order_rank_;
    std::vector<std::vector<long long>> npos_table_;
    std::vector<std::vector<int>> sum_idx_;
    std::vector<std::vector<std::vector<std::pair<int, long long>>>> table_;
};

inline void ChevalleyAlgebra::build_order(unsigned long long seed) {
    order_seed_ = seed;
    order_rank_.resize(npos_);
    std::iota(order_rank_.begin(), order_rank_.end(), 0);
    if (seed == 0) return;
    SplitMix64 rng(seed);
    const auto& pos = rs_.positive_roots();
    int lo = 0;
    while (lo < npos_) {
        int hi = lo;
        while (hi < npos_ && pos[hi].height == pos[lo].height) ++hi;
        for (int i = hi - lo - 1; i > 0; --i) {
            long long j = rng.range(0, i);
            std::swap(order_rank_[lo + i], order_rank_[lo + j]);
        }
        lo = hi;
    }
}

inline void ChevalleyAlgebra::build_constants() {
    const auto& pos = rs_.positive_roots();
    sum_idx_.assign(npos_, std::vector<int>(npos_, -1));
    for (int k = 0; k < npos_; ++k)
        for (int l = 0; l < npos_; ++l)
            if (k != l) sum_idx_[k][l] = rs_.find_positive(coords_add(pos[k].root_c, pos[l].root_c));

    npos_table_.assign(npos_, std::vector<long long>(npos_, 0));

    // positive roots are enumerated by height, so this sweep meets each sum
    // only after all shorter sums are done
    for (int t = 0; t < npos_; ++t) {
        if (pos[t].height < 2) continue;
        std::vector<std::pair<int, int>> special;
        for (int k = 0; k < npos_; ++k)
            for (int l = 0; l < npos_; ++l)
                if (sum_idx_[k][l] == t && order_rank_[k] < order_rank_[l]) special.emplace_back(k, l);
        if (special.empty()) throw std::logic_error("non-simple root with no decomposition");
        auto xs = *std::min_element(special.begin(), special.end(),
                                    [&](const auto& p, const auto& q) {
                                        return order_rank_[p.first] < order_rank_[q.first];
                                    });
        const auto [a, b] = xs;
        long long nab = string_down(a, b) + 1;
        npos_table_[a][b] = nab;
        npos_table_[b][a] = -nab;

        for (const auto& [r, s] : special) {
            if (r == a && s == b) continue;
            // four-root identity on (a, b, -r, -s), solved for N_{r,s}
            Rat acc;
            Coords d1 = coords_sub(pos[b].root_c, pos[r].root_c);
            if (is_root_coords(d1)) {
                int abs1 = root_of_coords(d1);
                if (abs1 < 0) {
                    Coords nd(d1.size());
                    for (size_t i = 0; i < d1.size(); ++i) nd[i] = -d1[i];
                    abs1 = root_of_coords(nd);
                }
                acc += rat_of(mixed_constant(b, r)) * rat_of(mixed_constant(a, s)) /
                       rat_of(2 * pos[abs1].half_norm);
            }
            Coords d2 = coords_sub(pos[a].root_c, pos[r].root_c);
            if (is_root_coords(d2)) {
                int abs2 = root_of_coords(d2);
                if (abs2 < 0) {
                    Coords nd(d2.size());
                    for (size_t i = 0; i < d2.size(); ++i) nd[i] = -d2[i];
                    abs2 = root_of_coords(nd);
                }
                acc -= rat_of(mixed_constant(a, r)) * rat_of(mixed_constant(b, s)) /
                       rat_of(2 * pos[abs2].half_norm);
            }
            Rat nrs = rat_of(2 * pos[t].half_norm) * acc / rat_of(nab);
            if (nrs.get_den() != 1) throw std::logic_error("structure constant not integral");
            long long v = rat_to_ll(nrs);
            if (v == 0) throw std::logic_error("vanishing constant on composable pair");
            npos_table_[r][s] = v;
            npos_table_[s][r] = -v;
        }
    }

    // magnitude check against the independent string-length computation
    for (int k = 0; k < npos_; ++k)
        for (int l = 0; l < npos_; ++l) {
            if (k == l || sum_idx_[k][l] < 0) continue;
            long long v = npos_table_[k][l];
            if (v == 0 || std::abs(v) != string_down(k, l) + 1)
                throw std::logic_error("structure constant magnitude mismatch");
        }
}

inline void ChevalleyAlgebra::build_table() {
    const auto& pos = rs_.positive_roots();
    table_.assign(dim_, std::vector<std::vector<std::pair<int, long long>>>(dim_));
    auto set = [&](int a, int b, std::vector<std::pair<int, long long>> v) {
        table_[a][b] = std::move(v);
    };

    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < npos_; ++k) {
            long long p = pos[k].fund[i];
            if (p == 0) continue;
            set(h_index(i), e_index(k), {{e_index(k), p}});
            set(e_index(k), h_index(i), {{e_index(k), -p}});
            set(h_index(i), f_index(k), {{f_index(k), -p}});
            set(f_index(k), h_index(i), {{f_index(k), p}});
        }

    for (int k = 0; k < npos_; ++k)
        for (int l = 0; l < npos_; ++l) {
            if (k == l) continue;
            int m = sum_idx_[k][l];
            if (m >= 0) {
                set(e_index(k), e_index(l), {{e_index(m), npos_table_[k][l]}});
                set(f_index(k), f_index(l), {{f_index(m), -npos_table_[k][l]}});
            }
        }

    for (int k = 0; k < npos_; ++k) {
        std::vector<std::pair<int, long long>> hv;
        for (int i = 0; i < n_; ++i)
            if (pos[k].coroot_c[i] != 0) hv.emplace_back(h_index(i), pos[k].coroot_c[i]);
        set(e_index(k), f_index(k), hv);
        for (auto& [idx, c] : hv) c = -c;
        set(f_index(k), e_index(k), hv);
    }

    for (int k = 0; k < npos_; ++k)
        for (int l = 0; l < npos_; ++l) {
            if (k == l) continue;
            Coords d = coords_sub(pos[k].root_c, pos[l].root_c);
            int c = root_of_coords(d);
            long long v;
            if (c >= 0) {
                v = mixed_constant(k, l);
                set(e_index(k), f_index(l), {{e_index(c), v}});
                set(f_index(l), e_index(k), {{e_index(c), -v}});
                continue;
            }
            Coords nd(d.size());
            for (size_t i = 0; i < d.size(); ++i) nd[i] = -d[i];
            int w = root_of_coords(nd);
            if (w >= 0) {
                v = mixed_constant(k, l);
                set(e_index(k), f_index(l), {{f_index(w), v}});
                set(f_index(l), e_index(k), {{f_index(w), -v}});
            }
        }
}

inline void ChevalleyAlgebra::verify_antisymmetry() const {
    for (int a = 0; a < dim_; ++a) {
        if (!table_[a][a].empty()) throw std::logic_error("bracket [x,x] nonzero");
        for (int b = a + 1; b < dim_; ++b) {
            auto fwd = table_[a][b];
            auto bwd = table_[b][a];
            std::sort(fwd.begin(), fwd.end());
            std::sort(bwd.begin(), bwd.end());
            if (fwd.size() != bwd.size()) throw std::logic_error("antisymmetry failure");
            for (size_t i = 0; i < fwd.size(); ++i)
                if (fwd[i].first != bwd[i].first || fwd[i].second != -bwd[i].second)
                    throw std::logic_error("antisymmetry failure");
        }
    }
}

inline void ChevalleyAlgebra::verify_jacobi() const {
    // exhaustive over unordered basis triples; integer arithmetic, constants
    // are tiny so overflow is not in reach
    std::vector<long long> acc(dim_, 0);
    std::vector<int> touched;
    auto add_term = [&](int a, int b, int c) {
        for (const auto& [m, v] : table_[a][b])
            for (const auto& [m2, v2] : table_[m][c]) {
                if (acc[m2] == 0) touched.push_back(m2);
                acc[m2] += v * v2;
            }
    };
    for (int a = 0; a < dim_; ++a)
        for (int b = a + 1; b < dim_; ++b)
            for (int c = b + 1; c < dim_; ++c) {
                add_term(a, b, c);
                add_term(b, c, a);
                add_term(c, a, b);
                for (int m : touched)
                    if (acc[m] != 0) throw std::logic_error("Jacobi identity failure");
                for (int m : touched) acc[m] = 0;
                touched.clear();
            }
}

inline std::string ChevalleyAlgebra::cache_key() const {
    const CartanMatrix& cm = rs_.cartan();
    if (!cm.label().empty()) return cm.label();
    std::string key = "matrix";
    for (const auto& row : cm.entries())
        for (long long v : row) key += "_" + std::to_string(v);
    return key;
}

inline nlohmann::ordered_json ChevalleyAlgebra::cache_entry() const {
    nlohmann::ordered_json entry;
    entry["cartan"] = rs_.cartan().entries();
    nlohmann::ordered_json roots = nlohmann::ordered_json::array();
    for (const Root& r : rs_.positive_roots()) roots.push_back(r.root_c);
    entry["roots"] = std::move(roots);
    nlohmann::ordered_json cons = nlohmann::ordered_json::array();
    for (int k = 0; k < npos_; ++k)
        for (int l = k + 1; l < npos_; ++l)
            if (sum_idx_[k][l] >= 0)
                cons.push_back(nlohmann::ordered_json::array({k, l, npos_table_[k][l]}));
    entry["constants"] = std::move(cons);
    return entry;
}

inline void ChevalleyAlgebra::sync_cache_file(const std::string& path) const {
    if (order_seed_ != 0) return;
    nlohmann::ordered_json doc;
    bool fresh = true;
    {
        std::ifstream in(path);
        if (in) {
            try {
                in >> doc;
                fresh = !(doc.is_object() && doc.value("sign_convention", "") == sign_convention());
            } catch (const nlohmann::json::exception&) {
                fresh = true;
            }
        }
    }
    if (fresh) {
        doc = nlohmann::ordered_json::object();
        doc["schema"] = "liecoh-chevalley-cache-v1";
        doc["sign_convention"] = sign_convention();
        doc["entries"] = nlohmann::ordered_json::object();
    }
    nlohmann::ordered_json mine = cache_entry();
    const std::string key = cache_key();
    if (doc["entries"].contains(key)) {
        if (doc["entries"][key] != mine)
            throw std::runtime_error("structure-constant cache mismatch for " + key +
                                     " in " + path);
        return;
    }
    doc["entries"][key] = std::move(mine);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file " + path);
    out << doc.dump(1) << "\n";
}

inline PrincipalTriple principal_triple(const ChevalleyAlgebra& alg) {
    const RootSystem& rs = alg.roots();
    const int n = rs.rank();
    Mat at(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = rat_of(rs.cartan()(j, i));
    std::vector<Rat> rhs(n, rat_of(2));
    auto sol = solve_consistent(at, rhs);
    if (!sol) throw std::logic_error("principal Cartan element: no solution");

    PrincipalTriple t;
    t.h = alg.zero();
    t.e = alg.zero();
    t.f = alg.zero();
    t.b.resize(n);
    for (int i = 0; i < n; ++i) {
        if ((*sol)[i].get_den() != 1 || (*sol)[i] <= 0)
            throw std::logic_error("principal Cartan element not a positive integer vector");
        t.b[i] = rat_to_ll((*sol)[i]);
        t.h[alg.h_index(i)] = (*sol)[i];
        // enumeration order of the height-1 roots need not match simple index
        Coords sr(n, 0);
        sr[i] = 1;
        int k = rs.find_positive(sr);
        t.e[alg.e_index(k)] = 1;
        t.f[alg.f_index(k)] = (*sol)[i];
    }

    Element he = alg.bracket(t.h, t.e);
    Element hf = alg.bracket(t.h, t.f);
    Element ef = alg.bracket(t.e, t.f);
    for (int i = 0; i < alg.dim(); ++i) {
        if (he[i] != t.e[i] * 2 || hf[i] != t.f[i] * -2 || ef[i] != t.h[i])
            throw std::logic_error("principal triple relations failed");
    }
    return t;
}

inline CentralizerBasis centralizer_of_e(const ChevalleyAlgebra& alg,
                                         const PrincipalTriple& triple) {
    const RootSystem& rs = alg.roots();
    const auto& pos = rs.positive_roots();
    const int n = rs.rank();
    const int npos = rs.num_positive();

    // ad-h eigenspace of weight 2k is spanned by the x_r with height(r) = k
    // (negative k via the f side), weight 0 by the Cartan
    auto block_indices = [&](int w) {
        std::vector<int> idx;
        if (w == 0)
            for (int i = 0; i < n; ++i) idx.push_back(alg.h_index(i));
        for (int k = 0; k < npos; ++k) {
            if (2 * pos[k].height == w) idx.push_back(alg.e_index(k));
            if (-2 * pos[k].height == w) idx.push_back(alg.f_index(k));
        }
        return idx;
    };

    int hmax = pos.back().height;
    CentralizerBasis cb;
    for (int w = -2 * hmax; w <= 2 * hmax; w += 2) {
        std::vector<int> src = block_indices(w);
        if (src.empty()) continue;
        std::vector<int> dst = block_indices(w + 2);
        std::vector<int> dst_pos(alg.dim(), -1);
        for (size_t t = 0; t < dst.size(); ++t) dst_pos[dst[t]] = static_cast<int>(t);

        Mat m(dst.size(), src.size());
        for (size_t c = 0; c < src.size(); ++c)
            for (int i = 0; i < n; ++i)
                for (const auto& [tgt, v] : alg.bracket_basis(alg.e_index(i), src[c])) {
                    if (dst_pos[tgt] < 0) throw std::logic_error("ad(e) left its target block");
                    m(dst_pos[tgt], c) += rat_of(v);
                }

        Mat ker = nullspace(m);
        if (ker.rows() == 0) continue;
        if (w <= 0) throw std::logic_error("centralizer element at nonpositive degree");
        for (int r = 0; r < ker.rows(); ++r) {
            Element x = alg.zero();
            for (size_t c = 0; c < src.size(); ++c) x[src[c]] = ker(r, c);
            cb.elements.push_back(std::move(x));
            cb.degrees.push_back(w);
        }
    }

    if (static_cast<int>(cb.elements.size()) != n)
        throw std::logic_error("centralizer dimension != rank");
    std::vector<int> expect = rs.exponents();
    for (size_t i = 0; i < expect.size(); ++i)
        if (cb.degrees[i] != 2 * expect[i])
            throw std::logic_error("centralizer degrees do not match exponents");
    for (const Element& x : cb.elements) {
        Element ex = alg.bracket(triple.e, x);
        for (const Rat& v : ex)
            if (v != 0) throw std::logic_error("centralizer element fails to commute with e");
    }
    for (size_t i = 0; i < cb.elements.size(); ++i)
        for (size_t j = i + 1; j < cb.elements.size(); ++j) {
            Element br = alg.bracket(cb.elements[i], cb.elements[j]);
            for (const Rat& v : br)
                if (v != 0) throw std::logic_error("centralizer not abelian");
        }
    return cb;
}

}  // namespace liecoh
