#pragma once

// Finite-dimensional irreducible modules with a distinguished lowest weight
// vector, built over the Chevalley basis with exact rational matrices.
//
// The construction is by the contravariant form: at each weight, candidate
// vectors are simple raisings of the basis one level down, their Gram matrix
// is computed by commutator straightening, and a greedy symmetric elimination
// picks a basis of the quotient by the radical. Multiplicities are checked
// at every weight against the Freudenthal recursion, which is computed
// independently, and the total against the Weyl dimension formula.
//
// Grading: level(mu) = height(mu - lambda), so the lowest weight sits at
// level 0 and the highest at level T = <-lambda, 2 rho-vee>. Slices (all
// weight spaces of one level, weights in lex order) are the unit the
// annihilator machinery works in.

#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liecoh/chevalley.hpp"

namespace liecoh {

struct WeightMultiplicityTable {
    Coords lambda_plus;  // dominant label the table was computed for
    std::unordered_map<Coords, long long, CoordsHash> mult;  // every weight
    Int total;

    long long at(const Coords& w) const {
        auto it = mult.find(w);
        return it == mult.end() ? 0 : it->second;
    }
};

inline Int weyl_dimension(const RootSystem& rs, const Coords& lambda_plus) {
    if (!rs.is_dominant(lambda_plus))
        throw std::invalid_argument("weyl_dimension needs a dominant weight");
    Coords lr = lambda_plus;
    for (long long& v : lr) v += 1;  // lambda + rho
    Int num = 1, den = 1;
    for (const Root& r : rs.positive_roots()) {
        num *= int_of(rs.pairing_coroot(lr, r));
        den *= int_of(rs.pairing_coroot(rs.rho(), r));
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension product not divisible");
    return num / den;
}

// Multiplicities of the highest-weight module V^{lambda_plus} by the
// Freudenthal recursion, run over the dominant weights in depth order and
// spread over Weyl orbits. All arithmetic stays in 64-bit integers; the
// recursion values are small and the final total is cross-checked against
// the Weyl dimension formula.
inline WeightMultiplicityTable freudenthal(const RootSystem& rs, const Coords& lambda_plus) {
    if (!rs.is_dominant(lambda_plus))
        throw std::invalid_argument("freudenthal needs a dominant weight");
    const int n = rs.rank();
    const std::vector<long long>& d = rs.cartan().symmetrizer();

    std::vector<Coords> ideal = rs.dominance_ideal(lambda_plus);
    std::unordered_map<Coords, long long, CoordsHash> dom_mult;
    dom_mult[lambda_plus] = 1;

    for (size_t idx = 1; idx < ideal.size(); ++idx) {
        const Coords& mu = ideal[idx];
        // denominator (lambda+mu+2rho, lambda-mu), expanded over simple roots
        std::vector<Rat> rc = rs.root_coords(coords_sub(lambda_plus, mu));
        long long den = 0;
        for (int i = 0; i < n; ++i) {
            if (rc[i].get_den() != 1) throw std::logic_error("weight not over the root lattice");
            den += rat_to_ll(rc[i]) * d[i] * (lambda_plus[i] + mu[i] + 2);
        }
        if (den <= 0) throw std::logic_error("Freudenthal denominator not positive");

        // numerator 2 sum_{r>0} sum_{k>=1} m(mu+kr) (mu+kr, r); the inner sum
        // stops at the first non-weight because weight strings have no gaps
        long long num = 0;
        for (const Root& r : rs.positive_roots()) {
            long long pr = rs.pairing_coroot(mu, r);
            Coords nu = mu;
            for (long long k = 1;; ++k) {
                nu = coords_add(nu, r.fund);
                auto it = dom_mult.find(rs.dominant_representative(nu).first);
                if (it == dom_mult.end()) break;
                num += it->second * r.half_norm * (pr + 2 * k);
            }
        }
        num *= 2;
        if (num % den != 0) throw std::logic_error("Freudenthal multiplicity not integral");
        long long m = num / den;
        if (m <= 0) throw std::logic_error("Freudenthal multiplicity not positive");
        dom_mult[mu] = m;
    }

    WeightMultiplicityTable t;
    t.lambda_plus = lambda_plus;
    t.total = 0;
    for (const auto& [mu, m] : dom_mult)
        for (const Coords& w : rs.weyl_orbit(mu)) t.mult[w] = m;
    for (const auto& [w, m] : t.mult) t.total += int_of(m);
    if (t.total != weyl_dimension(rs, lambda_plus))
        throw std::logic_error("Freudenthal total disagrees with Weyl dimension");
    return t;
}

inline void dump_multiplicities_csv(const WeightMultiplicityTable& t, std::ostream& os) {
    std::vector<Coords> ws;
    ws.reserve(t.mult.size());
    for (const auto& [w, m] : t.mult) ws.push_back(w);
    std::sort(ws.begin(), ws.end());
    os << "weight,multiplicity\n";
    for (const Coords& w : ws) {
        for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
        os << "," << t.mult.at(w) << "\n";
    }
}

class IrreducibleModule {
  public:
    IrreducibleModule(const ChevalleyAlgebra& alg, Coords lambda, bool reversed_order = false)
        : alg_(alg), lambda_(std::move(lambda)) {
        const RootSystem& rs = alg.roots();
        const int n = rs.rank();
        if (static_cast<int>(lambda_.size()) != n)
            throw std::invalid_argument("lowest weight has wrong rank");
        if (!rs.is_antidominant(lambda_))
            throw std::invalid_argument("lowest weight must be anti-dominant");

        table_ = freudenthal(rs, coords_neg(lambda_));
        top_ = static_cast<int>(rs.pairing_2rho_vee(coords_neg(lambda_)));

        levels_.assign(top_ + 1, {});
        for (const auto& [nu, m] : table_.mult) {
            Coords w = coords_neg(nu);
            long long p = rs.pairing_2rho_vee(w) + top_;
            if (p < 0 || p % 2 != 0 || p / 2 > top_)
                throw std::logic_error("weight outside the level range");
            WInfo wi;
            wi.level = static_cast<int>(p / 2);
            wi.m = m;
            levels_[wi.level].push_back(w);
            info_.emplace(std::move(w), std::move(wi));
        }
        for (auto& lv : levels_) std::sort(lv.begin(), lv.end());

        dim_ = 0;
        level_dims_.assign(top_ + 1, 0);
        for (int l = 0; l <= top_; ++l) {
            int off = 0;
            for (const Coords& w : levels_[l]) {
                WInfo& wi = info_.at(w);
                wi.off = off;
                wi.goff = dim_ + off;
                off += static_cast<int>(wi.m);
            }
            level_dims_[l] = off;
            dim_ += off;
        }
        if (Int(dim_) != table_.total) throw std::logic_error("level layout lost weights");
        if (levels_[0] != std::vector<Coords>{lambda_} || info_.at(lambda_).m != 1)
            throw std::logic_error("lowest weight space malformed");

        WInfo& bot = info_.at(lambda_);
        bot.gram = Mat(1, 1);
        bot.gram(0, 0) = 1;
        bot.raise_in.assign(n, Mat(1, 0));
        bot.lower_out.assign(n, Mat(0, 1));

        for (int l = 1; l <= top_; ++l)
            for (const Coords& w : levels_[l]) build_weight(w, reversed_order);
    }

    IrreducibleModule(const IrreducibleModule&) = delete;
    IrreducibleModule& operator=(const IrreducibleModule&) = delete;

    const ChevalleyAlgebra& algebra() const { return alg_; }
    const RootSystem& roots() const { return alg_.roots(); }
    const Coords& lowest_weight() const { return lambda_; }
    const WeightMultiplicityTable& mult_table() const { return table_; }

    int dim() const { return dim_; }
    int top_level() const { return top_; }
    const std::vector<Coords>& weights_at_level(int l) const { return levels_.at(l); }
    int level_dim(int l) const { return (l < 0 || l > top_) ? 0 : level_dims_[l]; }

    long long mult(const Coords& w) const {
        auto it = info_.find(w);
        return it == info_.end() ? 0 : it->second.m;
    }
    int level_of(const Coords& w) const { return info_.at(w).level; }
    int offset_in_level(const Coords& w) const { return info_.at(w).off; }
    int global_offset(const Coords& w) const { return info_.at(w).goff; }

    const Mat& gram(const Coords& w) const { return info_.at(w).gram; }

    // matrix of x_{alpha_i} from V(w) into V(w + alpha_i)
    Mat simple_raise_block(int i, const Coords& w) const {
        Coords t = coords_add(w, roots().simple_root_fund(i));
        long long mt = mult(t), ms = mult(w);
        if (mt == 0 || ms == 0) return Mat(static_cast<int>(mt), static_cast<int>(ms));
        return info_.at(t).raise_in[i];
    }

    // matrix of x_{-alpha_i} from V(w) into V(w - alpha_i)
    Mat simple_lower_block(int i, const Coords& w) const {
        Coords t = coords_sub(w, roots().simple_root_fund(i));
        long long mt = mult(t), ms = mult(w);
        if (mt == 0 || ms == 0) return Mat(static_cast<int>(mt), static_cast<int>(ms));
        return info_.at(w).lower_out[i];
    }

    // matrix of x_{r_k} (sign +1) or x_{-r_k} (sign -1) from V(w); non-simple
    // operators are expanded through the bracket with the leading simple root
    // and memoized per (operator, weight)
    const Mat& root_operator_block(int k, int sign, const Coords& w) const {
        std::lock_guard<std::recursive_mutex> lock(memo_mu_);
        auto key = std::make_pair(sign > 0 ? k + 1 : -(k + 1), w);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        const RootSystem& rs = roots();
        const Root& r = rs.positive_roots()[k];
        Mat blk;
        if (r.height == 1) {
            int i = 0;
            while (r.root_c[i] == 0) ++i;
            blk = sign > 0 ? simple_raise_block(i, w) : simple_lower_block(i, w);
        } else {
            int i = 0;
            Coords rest;
            int krest = -1;
            for (;; ++i) {
                rest = r.root_c;
                rest[i] -= 1;
                if (rest[i] < 0) continue;
                krest = rs.find_positive(rest);
                if (krest >= 0) break;
            }
            Coords unit(rs.rank(), 0);
            unit[i] = 1;
            int ki = rs.find_positive(unit);
            long long nc = alg_.n_constant(ki, krest);
            if (nc == 0) throw std::logic_error("vanishing constant in operator expansion");

            Coords step_i = rs.simple_root_fund(i);
            Coords step_r = rs.positive_roots()[krest].fund;
            if (sign < 0) {
                step_i = coords_neg(step_i);
                step_r = coords_neg(step_r);
            }
            const Mat& a1 = root_operator_block(krest, sign, w);
            const Mat& a2 = root_operator_block(ki, sign, coords_add(w, step_r));
            const Mat& b1 = root_operator_block(ki, sign, w);
            const Mat& b2 = root_operator_block(krest, sign, coords_add(w, step_i));
            long long div = sign > 0 ? nc : -nc;
            blk = (a2 * a1 - b2 * b1) * rat_of(1, div);
        }
        return memo_.emplace(std::move(key), std::move(blk)).first->second;
    }

    std::vector<Rat> zero_vector() const { return std::vector<Rat>(dim_); }

    std::vector<Rat> lowest_vector() const {
        std::vector<Rat> v(dim_);
        v[info_.at(lambda_).goff] = 1;
        return v;
    }

    // action of an algebra element given in the Chevalley basis
    std::vector<Rat> apply(const Element& x, const std::vector<Rat>& v) const {
        if (static_cast<int>(x.size()) != alg_.dim() || static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("apply shape mismatch");
        const RootSystem& rs = roots();
        const int n = rs.rank();
        std::vector<Rat> out(dim_);
        for (int l = 0; l <= top_; ++l)
            for (const Coords& w : levels_[l]) {
                const WInfo& wi = info_.at(w);
                const int m = static_cast<int>(wi.m);
                bool live = false;
                for (int a = 0; a < m && !live; ++a) live = v[wi.goff + a] != 0;
                if (!live) continue;
                for (int i = 0; i < n; ++i) {
                    const Rat& c = x[alg_.h_index(i)];
                    if (c == 0) continue;
                    for (int a = 0; a < m; ++a)
                        if (v[wi.goff + a] != 0) out[wi.goff + a] += c * rat_of(w[i]) * v[wi.goff + a];
                }
                for (int k = 0; k < alg_.num_positive(); ++k)
                    for (int sign : {+1, -1}) {
                        const Rat& c = x[sign > 0 ? alg_.e_index(k) : alg_.f_index(k)];
                        if (c == 0) continue;
                        Coords step = rs.positive_roots()[k].fund;
                        if (sign < 0) step = coords_neg(step);
                        Coords t = coords_add(w, step);
                        auto ti = info_.find(t);
                        if (ti == info_.end()) continue;
                        const Mat& blk = root_operator_block(k, sign, w);
                        for (int p = 0; p < blk.rows(); ++p) {
                            Rat acc;
                            for (int a = 0; a < m; ++a)
                                if (blk(p, a) != 0 && v[wi.goff + a] != 0)
                                    acc += blk(p, a) * v[wi.goff + a];
                            if (acc != 0) out[ti->second.goff + p] += c * acc;
                        }
                    }
            }
        return out;
    }

    // [x_{alpha_i}, x_{-alpha_j}] = delta_ij h_i on every weight block
    bool verify_sl2_relations() const {
        const RootSystem& rs = roots();
        const int n = rs.rank();
        for (int l = 0; l <= top_; ++l)
            for (const Coords& w : levels_[l])
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        Coords up = coords_add(w, rs.simple_root_fund(i));
                        Coords dn = coords_sub(w, rs.simple_root_fund(j));
                        Mat lhs = simple_raise_block(i, dn) * simple_lower_block(j, w) -
                                  simple_lower_block(j, up) * simple_raise_block(i, w);
                        Mat want(lhs.rows(), lhs.cols());
                        if (i == j)
                            for (int a = 0; a < want.rows(); ++a) want(a, a) = rat_of(w[i]);
                        if (!(lhs == want)) return false;
                    }
        return true;
    }

  private:
    struct WInfo {
        long long m = 0;  // multiplicity; target from the table, then verified
        int level = 0;
        int off = 0;   // offset inside the level slice
        int goff = 0;  // offset in the full module
        std::vector<std::pair<int, int>> parent;  // basis vector = x_i (basis b one level down)
        Mat gram;                                 // contravariant Gram of the basis, integer PD
        std::vector<Mat> raise_in;                // i -> X_i[w - a_i -> w]
        std::vector<Mat> lower_out;               // i -> F_i[w -> w - a_i]
    };

    void build_weight(const Coords& w, bool reversed_order) {
        const RootSystem& rs = roots();
        const int n = rs.rank();
        WInfo& wi = info_.at(w);

        std::vector<Coords> below(n);
        std::vector<const WInfo*> bw(n, nullptr);
        std::vector<std::pair<int, int>> cand;
        for (int i = 0; i < n; ++i) {
            below[i] = coords_sub(w, rs.simple_root_fund(i));
            auto it = info_.find(below[i]);
            if (it == info_.end()) continue;
            bw[i] = &it->second;
            for (int a = 0; a < static_cast<int>(it->second.m); ++a) cand.emplace_back(i, a);
        }
        if (reversed_order) std::reverse(cand.begin(), cand.end());
        const int c = static_cast<int>(cand.size());
        if (c == 0) throw std::logic_error("weight with no raising candidates");

        // pair matrix M_ij = G_{w-a_i} X_j[w-a_i-a_j -> w-a_i] F_i[w-a_j],
        // the straightened form values between raisings from directions i, j
        std::vector<std::vector<Mat>> M(n, std::vector<Mat>(n));
        for (int i = 0; i < n; ++i) {
            if (!bw[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!bw[j]) continue;
                M[i][j] = bw[i]->gram * (bw[i]->raise_in[j] * bw[j]->lower_out[i]);
            }
        }

        Mat C(c, c);
        for (int s = 0; s < c; ++s) {
            auto [i, a] = cand[s];
            for (int t = 0; t < c; ++t) {
                auto [j, b] = cand[t];
                Rat v = M[i][j](a, b);
                if (i == j) v -= rat_of(below[i][i]) * bw[i]->gram(a, b);
                C(s, t) = v;
            }
        }
        for (int s = 0; s < c; ++s)
            for (int t = 0; t < c; ++t) {
                if (C(s, t).get_den() != 1)
                    throw std::logic_error("contravariant Gram not integral");
                if (C(s, t) != C(t, s)) throw std::logic_error("contravariant Gram not symmetric");
            }

        // greedy symmetric elimination; a positive pivot admits the candidate,
        // a zero pivot must have a zero residual row (radical vector)
        Mat R = C;
        std::vector<int> sel;
        for (int t = 0; t < c; ++t) {
            Rat piv = R(t, t);
            if (piv < 0) throw std::logic_error("contravariant form not positive semidefinite");
            if (piv == 0) {
                for (int u = t + 1; u < c; ++u)
                    if (R(t, u) != 0)
                        throw std::logic_error("contravariant form not positive semidefinite");
                continue;
            }
            sel.push_back(t);
            for (int u = t + 1; u < c; ++u) {
                if (R(u, t) == 0) continue;
                Rat f = R(u, t) / piv;
                for (int v2 = t + 1; v2 < c; ++v2) R(u, v2) -= f * R(t, v2);
            }
        }
        if (static_cast<long long>(sel.size()) != wi.m)
            throw std::logic_error("constructed multiplicity disagrees with Freudenthal");
        const int m = static_cast<int>(sel.size());

        wi.gram = Mat(m, m);
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) wi.gram(p, q) = C(sel[p], sel[q]);
        wi.parent.reserve(m);
        for (int p = 0; p < m; ++p) wi.parent.push_back(cand[sel[p]]);

        // raising coordinates: candidate t equals sum_p xi_p (basis p), with
        // G xi = <basis, candidate t>
        Mat ginv = inverse(wi.gram);
        std::vector<std::vector<int>> cand_pos(n);
        for (int i = 0; i < n; ++i)
            if (bw[i]) cand_pos[i].assign(static_cast<size_t>(bw[i]->m), -1);
        for (int t = 0; t < c; ++t) cand_pos[cand[t].first][cand[t].second] = t;

        wi.raise_in.assign(n, Mat());
        for (int i = 0; i < n; ++i) {
            if (!bw[i]) {
                wi.raise_in[i] = Mat(m, 0);
                continue;
            }
            const int ms = static_cast<int>(bw[i]->m);
            Mat X(m, ms);
            for (int a = 0; a < ms; ++a) {
                int t = cand_pos[i][a];
                for (int p = 0; p < m; ++p) {
                    Rat acc;
                    for (int q = 0; q < m; ++q)
                        if (ginv(p, q) != 0 && C(sel[q], t) != 0) acc += ginv(p, q) * C(sel[q], t);
                    X(p, a) = acc;
                }
            }
            wi.raise_in[i] = std::move(X);
        }

        // lowering by straightening through the recorded parent:
        // F_i (x_j w_b) = x_j (F_i w_b) - delta_ij <w - a_j, a_i-vee> w_b
        wi.lower_out.assign(n, Mat());
        for (int i = 0; i < n; ++i) {
            const int mt = bw[i] ? static_cast<int>(bw[i]->m) : 0;
            Mat F(mt, m);
            if (mt > 0)
                for (int p = 0; p < m; ++p) {
                    auto [j, b] = wi.parent[p];
                    const Mat& Fi = bw[j]->lower_out[i];
                    const Mat& Xj = bw[i]->raise_in[j];
                    if (Fi.rows() > 0)
                        for (int y = 0; y < mt; ++y) {
                            Rat acc;
                            for (int z = 0; z < Fi.rows(); ++z)
                                if (Xj(y, z) != 0 && Fi(z, b) != 0) acc += Xj(y, z) * Fi(z, b);
                            if (acc != 0) F(y, p) += acc;
                        }
                    if (i == j) F(b, p) -= rat_of(below[i][i]);
                }
            wi.lower_out[i] = std::move(F);
        }
    }

    const ChevalleyAlgebra& alg_;
    Coords lambda_;
    WeightMultiplicityTable table_;
    int top_ = 0;
    int dim_ = 0;
    std::vector<std::vector<Coords>> levels_;
    std::vector<int> level_dims_;
    std::unordered_map<Coords, WInfo, CoordsHash> info_;
    mutable std::recursive_mutex memo_mu_;
    mutable std::map<std::pair<int, Coords>, Mat> memo_;
};

inline IrreducibleModule build_module(const ChevalleyAlgebra& alg, const Coords& lambda,
                                      bool reversed_order = false) {
    return IrreducibleModule(alg, lambda, reversed_order);
}

inline std::vector<Rat> apply(const IrreducibleModule& mod, const Element& x,
                              const std::vector<Rat>& v) {
    return mod.apply(x, v);
}

// Dimension of the joint kernel of a family of algebra elements on the
// module. Elements homogeneous for the level grading (the battery's case)
// restrict to maps between level slices, so the kernel splits levelwise;
// anything else falls back to stacked dense matrices.
inline int joint_kernel(const IrreducibleModule& mod, const std::vector<Element>& elements) {
    const ChevalleyAlgebra& alg = mod.algebra();
    const RootSystem& rs = alg.roots();
    const int n = rs.rank();

    struct Part {
        std::vector<std::pair<int, Rat>> hs;            // (simple index, coefficient)
        std::vector<std::tuple<int, int, Rat>> roots;   // (positive root, sign, coefficient)
        int degree = 0;
    };
    std::vector<Part> parts;
    bool all_graded = true;
    for (const Element& x : elements) {
        if (static_cast<int>(x.size()) != alg.dim())
            throw std::invalid_argument("joint_kernel element shape mismatch");
        Part p;
        bool first = true, graded = true;
        for (int idx = 0; idx < alg.dim(); ++idx) {
            if (x[idx] == 0) continue;
            int deg = 0;
            if (idx < n) {
                p.hs.emplace_back(idx, x[idx]);
            } else {
                int k = alg.basis_root(idx);
                int sign = alg.basis_kind(idx);
                p.roots.emplace_back(k, sign, x[idx]);
                deg = sign * rs.positive_roots()[k].height;
            }
            if (first) {
                p.degree = deg;
                first = false;
            } else if (deg != p.degree) {
                graded = false;
            }
        }
        if (first) continue;  // zero element constrains nothing
        if (!graded) all_graded = false;
        parts.push_back(std::move(p));
    }
    if (parts.empty()) return mod.dim();

    if (all_graded) {
        int total = 0;
        for (int l = 0; l <= mod.top_level(); ++l) {
            const int ld = mod.level_dim(l);
            if (ld == 0) continue;
            int rows = 0;
            std::vector<Mat> blocks;
            for (const Part& p : parts) {
                const int lt = l + p.degree;
                Mat B(mod.level_dim(lt), ld);
                if (B.rows() > 0)
                    for (const Coords& w : mod.weights_at_level(l)) {
                        const int so = mod.offset_in_level(w);
                        const int m = static_cast<int>(mod.mult(w));
                        for (const auto& [i, c] : p.hs)
                            for (int a = 0; a < m; ++a) B(so + a, so + a) += c * rat_of(w[i]);
                        for (const auto& [k, sign, c] : p.roots) {
                            Coords step = rs.positive_roots()[k].fund;
                            if (sign < 0) step = coords_neg(step);
                            Coords t = coords_add(w, step);
                            if (mod.mult(t) == 0) continue;
                            const Mat& blk = mod.root_operator_block(k, sign, w);
                            const int to = mod.offset_in_level(t);
                            for (int y = 0; y < blk.rows(); ++y)
                                for (int a = 0; a < m; ++a)
                                    if (blk(y, a) != 0) B(to + y, so + a) += c * blk(y, a);
                        }
                    }
                rows += B.rows();
                blocks.push_back(std::move(B));
            }
            if (rows == 0) {
                total += ld;
                continue;
            }
            Mat S(rows, ld);
            int at = 0;
            for (const Mat& B : blocks) {
                for (int y = 0; y < B.rows(); ++y)
                    for (int a = 0; a < ld; ++a) S(at + y, a) = B(y, a);
                at += B.rows();
            }
            total += ld - rref_inplace(S);
        }
        return total;
    }

    const int dim = mod.dim();
    Mat S(static_cast<int>(parts.size()) * dim, dim);
    int at = 0;
    for (const Element& x : elements) {
        bool zero = true;
        for (const Rat& v : x) zero = zero && v == 0;
        if (zero) continue;
        for (int b = 0; b < dim; ++b) {
            std::vector<Rat> col(dim);
            col[b] = 1;
            std::vector<Rat> img = mod.apply(x, col);
            for (int y = 0; y < dim; ++y) S(at + y, b) = img[y];
        }
        at += dim;
    }
    return dim - rref_inplace(S);
}

}  // namespace liecoh
