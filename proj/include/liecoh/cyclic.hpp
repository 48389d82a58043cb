#pragma once

// The graded cyclic module U(g^e) v_lambda, its Hilbert series, and the
// annihilator ladder. The centralizer is abelian, so U(g^e) = S(g^e) and
// everything reduces to exact linear algebra degree by degree: evaluate the
// weighted-degree-d monomials in the generators on the lowest weight vector,
// row-reduce to get the d-th coefficient, keep the kernel as the degree-d
// slice of the annihilator.
//
// q-degree convention: a generator of ad-h weight 2m has q-degree m; q-degree
// k corresponds to cohomological degree 2k. Monomial lists are in graded-lex
// order with the first exponent most significant and largest first; together
// with the primitive-integer kernel normalization this makes series, ladders,
// and reports reproducible bit for bit.
//
// Every generator raises the module level by its q-degree, so a monomial of
// degree d vanishes on any vector supported above level T - d. That structural
// cutoff, plus keeping every evaluation over the integers (generators are
// rescaled once to clear block denominators, a degree-preserving remix that
// changes neither the series nor the annihilator), is what keeps the deep
// battery cases fast.

#include <optional>

#include "liecoh/module.hpp"
#include "liecoh/series.hpp"

namespace liecoh {

// weighted-degree-d exponent vectors over generators of q-degrees m
inline std::vector<std::vector<int>> monomials_of_degree(const std::vector<int>& m, int d) {
    const int r = static_cast<int>(m.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur(r, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r - 1) {
            if (rem % m[pos] == 0) {
                cur[pos] = rem / m[pos];
                out.push_back(cur);
            }
            return;
        }
        for (int k = rem / m[pos]; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, rem - k * m[pos]);
        }
    };
    rec(rec, 0, d);
    return out;
}

struct AnnihilatorLadder {
    std::vector<Element> generators;   // the centralizer basis the ladder is over
    std::vector<int> gen_degrees;      // q-degrees m_1 <= ... <= m_r
    std::vector<std::vector<std::vector<int>>> monomials;  // [q-degree] -> exponent vectors
    std::vector<Mat> kernels;          // [q-degree] -> rows spanning Ann in that degree

    int top() const { return static_cast<int>(kernels.size()) - 1; }
};

namespace detail {

// level-graded integer vector: level -> slice coordinates (weights in lex order)
using LevelVec = std::map<int, std::vector<Int>>;

struct IMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;
    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// one generator as integer weight-block maps; applying it raises the level by
// qdeg. scale is the factor that cleared the block denominators.
struct GenAction {
    int qdeg = 0;
    Int scale = 1;
    std::unordered_map<Coords, std::vector<std::pair<Coords, IMat>>, CoordsHash> blocks;
};

inline std::vector<GenAction> build_gen_actions(const IrreducibleModule& mod,
                                                const std::vector<Element>& gens) {
    const ChevalleyAlgebra& alg = mod.algebra();
    const RootSystem& rs = alg.roots();
    std::vector<GenAction> out;
    out.reserve(gens.size());
    for (const Element& g : gens) {
        GenAction act;
        std::vector<std::pair<int, Rat>> comps;  // positive root index -> coefficient
        int height = -1;
        for (int idx = 0; idx < alg.dim(); ++idx) {
            if (g[idx] == 0) continue;
            if (alg.basis_kind(idx) != 1)
                throw std::invalid_argument("generator is not a raising element");
            int k = alg.basis_root(idx);
            int h = rs.positive_roots()[k].height;
            if (height == -1) height = h;
            if (h != height) throw std::invalid_argument("generator is not level-homogeneous");
            comps.emplace_back(k, g[idx]);
        }
        if (height <= 0) throw std::invalid_argument("generator is zero");
        act.qdeg = height;

        std::vector<std::tuple<Coords, Coords, Mat>> raw;
        for (int l = 0; l + act.qdeg <= mod.top_level(); ++l)
            for (const Coords& w : mod.weights_at_level(l))
                for (const auto& [k, c] : comps) {
                    Coords t = coords_add(w, rs.positive_roots()[k].fund);
                    if (mod.mult(t) == 0) continue;
                    raw.emplace_back(w, std::move(t), mod.root_operator_block(k, 1, w) * c);
                }
        for (const auto& [w, t, B] : raw)
            for (int r = 0; r < B.rows(); ++r)
                for (int c = 0; c < B.cols(); ++c)
                    if (B(r, c) != 0)
                        mpz_lcm(act.scale.get_mpz_t(), act.scale.get_mpz_t(),
                                B(r, c).get_den().get_mpz_t());
        for (auto& [w, t, B] : raw) {
            IMat ib(B.rows(), B.cols());
            for (int r = 0; r < B.rows(); ++r)
                for (int c = 0; c < B.cols(); ++c) {
                    Rat x = B(r, c) * Rat(act.scale);
                    ib.at(r, c) = x.get_num();  // denominator is 1 after scaling
                }
            act.blocks[w].emplace_back(t, std::move(ib));
        }
        out.push_back(std::move(act));
    }
    return out;
}

inline Element scaled_generator(const Element& g, const Int& scale) {
    Element out = g;
    if (scale != 1) {
        Rat s(scale);
        for (Rat& x : out) x *= s;
    }
    return out;
}

inline LevelVec apply_gen(const IrreducibleModule& mod, const GenAction& act, const LevelVec& v) {
    LevelVec out;
    for (const auto& [l, vec] : v) {
        const int lt = l + act.qdeg;
        if (lt > mod.top_level()) continue;
        for (const Coords& w : mod.weights_at_level(l)) {
            const int so = mod.offset_in_level(w);
            const int m = static_cast<int>(mod.mult(w));
            bool live = false;
            for (int a = 0; a < m && !live; ++a) live = vec[so + a] != 0;
            if (!live) continue;
            auto it = act.blocks.find(w);
            if (it == act.blocks.end()) continue;
            for (const auto& [t, B] : it->second) {
                std::vector<Int>& slot = out[lt];
                if (slot.empty()) slot.assign(mod.level_dim(lt), Int());
                const int to = mod.offset_in_level(t);
                for (int y = 0; y < B.rows; ++y) {
                    Int& acc = slot[to + y];
                    for (int a = 0; a < m; ++a)
                        if (B.at(y, a) != 0 && vec[so + a] != 0)
                            mpz_addmul(acc.get_mpz_t(), B.at(y, a).get_mpz_t(),
                                       vec[so + a].get_mpz_t());
                }
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        bool zero = true;
        for (const Int& x : it->second) zero = zero && x == 0;
        it = zero ? out.erase(it) : std::next(it);
    }
    return out;
}

// splits into level slices with denominators cleared; u (c v) = c (u v), so
// the common rescale does not affect any annihilation check
inline LevelVec level_split_cleared(const IrreducibleModule& mod, const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& x : v)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    LevelVec out;
    int base = 0;
    for (int l = 0; l <= mod.top_level(); ++l) {
        const int ld = mod.level_dim(l);
        bool live = false;
        for (int a = 0; a < ld && !live; ++a) live = v[base + a] != 0;
        if (live) {
            std::vector<Int> slice(ld);
            for (int a = 0; a < ld; ++a) {
                Rat x = v[base + a] * Rat(den);
                slice[a] = x.get_num();
            }
            out[l] = std::move(slice);
        }
        base += ld;
    }
    return out;
}

inline int lowest_nonzero_index(const std::vector<int>& k) {
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] > 0) return static_cast<int>(i);
    return -1;
}

}  // namespace detail

// Hilbert series of U(g^e) v_lambda together with the annihilator ladder.
// Coefficients are computed through top_level + rank * max_degree as a guard;
// everything past the series' first empty degree must come out zero.
inline std::pair<GradedSeries, AnnihilatorLadder> cyclic_series(const IrreducibleModule& mod,
                                                                const CentralizerBasis& cb) {
    const int r = static_cast<int>(cb.elements.size());
    std::vector<int> m = cb.q_degrees();
    std::vector<detail::GenAction> acts = detail::build_gen_actions(mod, cb.elements);
    for (int i = 0; i < r; ++i)
        if (acts[i].qdeg != m[i])
            throw std::invalid_argument("generator degree disagrees with its ad-h weight");

    const int T = mod.top_level();
    const int guard = T + r * m.back();

    AnnihilatorLadder lad;
    lad.generators.reserve(r);
    for (int i = 0; i < r; ++i)
        lad.generators.push_back(detail::scaled_generator(cb.elements[i], acts[i].scale));
    lad.gen_degrees = m;

    std::vector<Int> coeffs;
    // all monomial evaluations on v_lambda; a degree-d value lives entirely in
    // the level-d slice, so one vector per monomial is enough
    std::vector<std::vector<std::vector<Int>>> evals(guard + 1);
    std::vector<std::map<std::vector<int>, int>> pos(guard + 1);

    for (int d = 0; d <= guard; ++d) {
        std::vector<std::vector<int>> mons = monomials_of_degree(m, d);
        const int nm = static_cast<int>(mons.size());
        evals[d].resize(nm);
        for (int j = 0; j < nm; ++j) pos[d][mons[j]] = j;

        for (int j = 0; j < nm; ++j) {
            if (d == 0) {
                evals[d][j] = {Int(1)};  // v_lambda spans the level-0 slice
                continue;
            }
            std::vector<int> k = mons[j];
            const int i = detail::lowest_nonzero_index(k);
            k[i] -= 1;
            const std::vector<Int>& par = evals[d - m[i]][pos[d - m[i]].at(k)];
            if (par.empty() || d > T) continue;  // already zero, stays zero
            detail::LevelVec pv;
            pv[d - m[i]] = par;
            detail::LevelVec img = detail::apply_gen(mod, acts[i], pv);
            if (!img.empty()) evals[d][j] = std::move(img.begin()->second);
        }

        const int ld = d > T ? 0 : mod.level_dim(d);
        Mat E(nm, ld);
        for (int j = 0; j < nm; ++j)
            if (!evals[d][j].empty())
                for (int a = 0; a < ld; ++a) E(j, a) = Rat(evals[d][j][a]);
        Mat K = nullspace(E.transpose());
        coeffs.push_back(int_of(nm - K.rows()));
        lad.monomials.push_back(std::move(mons));
        lad.kernels.push_back(std::move(K));
    }

    if (coeffs[0] != 1) throw std::logic_error("cyclic series has constant coefficient != 1");
    // the series must stop at its first empty degree; the guard window past
    // the top level is what certifies that nothing reappears
    int stop = guard + 1;
    for (int d = 0; d <= guard; ++d)
        if (coeffs[d] == 0) {
            stop = d;
            break;
        }
    if (stop > T + 1) throw std::logic_error("cyclic series extends past the top level");
    for (int d = stop; d <= guard; ++d)
        if (coeffs[d] != 0) throw std::logic_error("cyclic series resumed after vanishing");
    coeffs.resize(stop);
    GradedSeries series(std::move(coeffs));
    Int sum = series.total();
    if (sum > Int(mod.dim())) throw std::logic_error("cyclic submodule exceeds the module");
    return {std::move(series), std::move(lad)};
}

// Checks u v = 0 for every ladder basis element u against one vector after
// another, sharing the per-case setup. Evaluation walks monomials degree by
// degree with a sliding window of parent layers; degrees that cannot reach a
// nonzero evaluation (support level + degree > top) are skipped outright.
class ContainmentChecker {
  public:
    ContainmentChecker(const IrreducibleModule& mod, const AnnihilatorLadder& ladder)
        : mod_(mod), lad_(ladder), acts_(detail::build_gen_actions(mod, ladder.generators)) {
        for (const detail::GenAction& a : acts_)
            if (a.scale != 1)
                throw std::invalid_argument("ladder generators must have integer action");
    }

    bool check(const std::vector<Rat>& v) const {
        detail::LevelVec lv = detail::level_split_cleared(mod_, v);
        if (lv.empty()) return true;
        const int lmin = lv.begin()->first;
        const int dcap = mod_.top_level() - lmin;
        int dneed = -1;
        for (int d = 0; d <= lad_.top() && d <= dcap; ++d)
            if (lad_.kernels[d].rows() > 0) dneed = d;
        if (dneed < 0) return true;

        const std::vector<int>& m = lad_.gen_degrees;
        const int mmax = m.back();
        // window[d % (mmax+1)]: evaluations of the degree-d monomials on v
        std::vector<std::vector<detail::LevelVec>> window(mmax + 1);
        std::vector<std::map<std::vector<int>, int>> wpos(mmax + 1);

        for (int d = 0; d <= dneed; ++d) {
            const std::vector<std::vector<int>>& mons = lad_.monomials[d];
            const int slot = d % (mmax + 1);
            window[slot].assign(mons.size(), {});
            wpos[slot].clear();
            for (size_t j = 0; j < mons.size(); ++j) wpos[slot][mons[j]] = static_cast<int>(j);

            for (size_t j = 0; j < mons.size(); ++j) {
                if (d == 0) {
                    window[slot][j] = lv;
                    continue;
                }
                std::vector<int> k = mons[j];
                const int i = detail::lowest_nonzero_index(k);
                k[i] -= 1;
                const int pslot = (d - m[i]) % (mmax + 1);
                const detail::LevelVec& par = window[pslot][wpos[pslot].at(k)];
                if (!par.empty()) window[slot][j] = detail::apply_gen(mod_, acts_[i], par);
            }

            const Mat& K = lad_.kernels[d];
            for (int row = 0; row < K.rows(); ++row) {
                std::vector<Int> kc(mons.size());
                for (size_t j = 0; j < mons.size(); ++j) {
                    const Rat& x = K(row, static_cast<int>(j));
                    if (x != 0) kc[j] = x.get_num();  // kernel rows are integer
                }
                detail::LevelVec combo;
                for (size_t j = 0; j < mons.size(); ++j) {
                    if (kc[j] == 0 || window[slot][j].empty()) continue;
                    for (const auto& [l, vec] : window[slot][j]) {
                        std::vector<Int>& slotv = combo[l];
                        if (slotv.empty()) slotv.assign(vec.size(), Int());
                        for (size_t a = 0; a < vec.size(); ++a)
                            if (vec[a] != 0)
                                mpz_addmul(slotv[a].get_mpz_t(), kc[j].get_mpz_t(),
                                           vec[a].get_mpz_t());
                    }
                }
                for (const auto& [l, vec] : combo)
                    for (const Int& x : vec)
                        if (x != 0) return false;
            }
        }
        return true;
    }

  private:
    const IrreducibleModule& mod_;
    const AnnihilatorLadder& lad_;
    std::vector<detail::GenAction> acts_;
};

inline bool check_annihilator_containment(const IrreducibleModule& mod,
                                          const AnnihilatorLadder& ladder,
                                          const std::vector<Rat>& v) {
    return ContainmentChecker(mod, ladder).check(v);
}

// True/false when lambda is minuscule (its Weyl orbit is all of the weights),
// disengaged otherwise.
inline std::optional<bool> check_minuscule_full(const IrreducibleModule& mod,
                                                const GradedSeries& series) {
    const RootSystem& rs = mod.roots();
    size_t orbit = rs.weyl_orbit(mod.lowest_weight()).size();
    if (static_cast<long long>(orbit) != mod.dim()) return std::nullopt;
    return series.total() == Int(mod.dim());
}

// Coefficientwise bound by the series of the free polynomial ring on the
// generator degrees.
inline bool free_series_bound(const CentralizerBasis& cb, const GradedSeries& series) {
    return series.dominated_by(free_series_bound(cb.q_degrees(), series.degree()));
}

// Random rational vector on a window of up to 16 consecutive coordinates
// (seeded start), numerators in [-9, 9] without zero, denominators in
// {1, 2, 3}. Consecutive coordinates sit in one or two adjacent level slices,
// which spreads the draws over all module depths instead of pinning every
// draw to the deepest walk.
inline std::vector<Rat> random_sparse_vector(const IrreducibleModule& mod, SplitMix64& rng) {
    const int dim = mod.dim();
    const int support = dim < 16 ? dim : 16;
    const int start = static_cast<int>(rng.range(0, dim - support));
    std::vector<Rat> v(dim);
    for (int j = 0; j < support; ++j) {
        long long num = 0;
        while (num == 0) num = rng.range(-9, 9);
        v[start + j] = rat_of(num, rng.range(1, 3));
    }
    return v;
}

}  // namespace liecoh
