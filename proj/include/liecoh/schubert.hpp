#pragma once

// Orbit cell combinatorics on the coweight lattice: cell degrees, cell tables
// over a dominance ideal, and the two Poincaré series that the cyclic-module
// side has to match. Coweights of the input type are weights of the dual type,
// so everything here runs on the already-dualized root system and pairs
// weights against its coroots.
//
// The closed cell-degree formula is cross-examined by an affine Weyl group
// oracle that knows nothing about the formula: walk the group by right
// multiplication with the simple affine reflections, measure each element by
// counting the hyperplanes separating the fundamental alcove from its image,
// and take the minimum over the translation coset. Translations by coweights
// outside the root lattice live in a nontrivial component of the extended
// group, so the walk starts from the length-zero element of that component.

#include "liecoh/module.hpp"
#include "liecoh/series.hpp"

namespace liecoh {

// number of affine hyperplanes crossed, minus one for each positive side:
// the Iwahori cell attached to nu has this complex dimension
inline long long cell_degree(const Coords& nu, const RootSystem& rs) {
    long long d = 0;
    for (const Root& r : rs.positive_roots()) {
        long long p = rs.pairing_coroot(nu, r);
        d += p > 0 ? p - 1 : -p;
    }
    return d;
}

// affine transformation x -> Mx + t of the weight lattice, fund coords;
// column j of M is the image of the j-th fundamental weight
struct AffineWeylElement {
    std::vector<Coords> M;
    Coords t;

    static AffineWeylElement identity(int n) {
        AffineWeylElement e;
        e.M.assign(n, Coords(n, 0));
        for (int j = 0; j < n; ++j) e.M[j][j] = 1;
        e.t.assign(n, 0);
        return e;
    }
    Coords apply(const Coords& x) const {
        const int n = static_cast<int>(t.size());
        Coords out = t;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out[i] += M[j][i] * x[j];
        return out;
    }
    std::vector<Rat> apply(const std::vector<Rat>& x) const {
        const int n = static_cast<int>(t.size());
        std::vector<Rat> out(n);
        for (int i = 0; i < n; ++i) out[i] = Rat(int_of(t[i]));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out[i] += Rat(int_of(M[j][i])) * x[j];
        return out;
    }
    // composition: this after other
    AffineWeylElement after(const AffineWeylElement& o) const {
        const int n = static_cast<int>(t.size());
        AffineWeylElement out;
        out.t = apply(o.t);
        out.M.assign(n, Coords(n, 0));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k) out.M[j][i] += M[k][i] * o.M[j][k];
        return out;
    }
    std::vector<long long> key() const {
        std::vector<long long> k;
        for (const Coords& col : M) k.insert(k.end(), col.begin(), col.end());
        k.insert(k.end(), t.begin(), t.end());
        return k;
    }
};

namespace detail {

// the finite reflections plus the reflection in the wall <x, theta_v> = 1,
// where theta_v is the highest coroot
inline std::vector<AffineWeylElement> simple_affine_reflections(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<AffineWeylElement> gens;
    const Root& hc = rs.positive_roots()[rs.highest_coroot_index()];
    AffineWeylElement s0;
    s0.M.assign(n, Coords(n, 0));
    for (int j = 0; j < n; ++j) {
        // s0(x) = x - (<x, theta_v> - 1) theta, theta the root of theta_v
        for (int i = 0; i < n; ++i)
            s0.M[j][i] = (i == j ? 1 : 0) - hc.coroot_c[j] * hc.fund[i];
    }
    s0.t = hc.fund;
    gens.push_back(std::move(s0));
    for (int i = 0; i < n; ++i) {
        AffineWeylElement si = AffineWeylElement::identity(n);
        for (int j = 0; j < n; ++j) {
            Coords e(n, 0);
            e[j] = 1;
            si.M[j] = rs.reflect_simple(e, i);
        }
        gens.push_back(std::move(si));
    }
    return gens;
}

// interior point of the fundamental alcove: all coroot pairings in (0, 1)
inline std::vector<Rat> alcove_sample(const RootSystem& rs) {
    long long hmax = 0;
    for (const Root& r : rs.positive_roots()) {
        long long s = 0;
        for (long long c : r.coroot_c) s += c;
        hmax = std::max(hmax, s);
    }
    std::vector<Rat> p(rs.rank(), rat_of(1, hmax + 1));
    return p;
}

inline Rat pairing_coroot_rat(const RootSystem& rs, const std::vector<Rat>& x, const Root& r) {
    Rat s;
    for (int j = 0; j < rs.rank(); ++j)
        if (r.coroot_c[j] != 0) s += x[j] * rat_of(r.coroot_c[j]);
    return s;
}

// hyperplanes separating the fundamental alcove from its image under g;
// both sample pairings are off every hyperplane, so the count is exact
inline long long separating_hyperplanes(const RootSystem& rs, const std::vector<Rat>& p0,
                                        const AffineWeylElement& g) {
    std::vector<Rat> p1 = g.apply(p0);
    long long total = 0;
    for (const Root& r : rs.positive_roots()) {
        Rat a = pairing_coroot_rat(rs, p0, r);
        Rat b = pairing_coroot_rat(rs, p1, r);
        long long fa = rat_to_ll(rat_floor(a));
        long long fb = rat_to_ll(rat_floor(b));
        total += fa > fb ? fa - fb : fb - fa;
    }
    return total;
}

inline std::vector<AffineWeylElement> finite_weyl_elements(const RootSystem& rs) {
    const int n = rs.rank();
    std::vector<AffineWeylElement> gens;
    for (int i = 0; i < n; ++i) {
        AffineWeylElement si = AffineWeylElement::identity(n);
        for (int j = 0; j < n; ++j) {
            Coords e(n, 0);
            e[j] = 1;
            si.M[j] = rs.reflect_simple(e, i);
        }
        gens.push_back(std::move(si));
    }
    std::vector<AffineWeylElement> out{AffineWeylElement::identity(n)};
    std::set<std::vector<long long>> seen{out[0].key()};
    for (size_t h = 0; h < out.size(); ++h)
        for (const AffineWeylElement& s : gens) {
            AffineWeylElement next = out[h].after(s);
            if (seen.insert(next.key()).second) out.push_back(std::move(next));
        }
    return out;
}

}  // namespace detail

// Minimal length over the coset of the translation by nu modulo the finite
// Weyl group, measured by breadth-first search from the length-zero element
// of the component containing that translation. Every visited element's BFS
// depth is checked against its separating-hyperplane count; a search that
// exhausts length_cap without reaching the coset throws.
inline long long brute_min_coset_length(const Coords& nu, const RootSystem& rs, int length_cap) {
    const int n = rs.rank();
    std::vector<Rat> p0 = detail::alcove_sample(rs);

    // the translation component is labeled by the unique dominant coweight
    // with all pairings in {0, 1} congruent to nu modulo the root lattice
    Coords bottom;
    bool found = false;
    std::vector<Coords> candidates{Coords(n, 0)};
    for (int i = 0; i < n; ++i) {
        Coords w(n, 0);
        w[i] = 1;
        bool small = true;
        for (const Root& r : rs.positive_roots()) small = small && rs.pairing_coroot(w, r) <= 1;
        if (small) candidates.push_back(std::move(w));
    }
    for (const Coords& c : candidates)
        if (rs.in_root_lattice(coords_sub(nu, c))) {
            bottom = c;
            found = true;
            break;
        }
    if (!found) throw std::logic_error("no translation component bottom for nu");

    AffineWeylElement seed = AffineWeylElement::identity(n);
    if (!coords_is_zero(bottom)) {
        AffineWeylElement tb = AffineWeylElement::identity(n);
        tb.t = bottom;
        bool have = false;
        for (const AffineWeylElement& w : detail::finite_weyl_elements(rs)) {
            AffineWeylElement cand = tb.after(w);  // x -> w(x) + bottom
            if (detail::separating_hyperplanes(rs, p0, cand) == 0) {
                seed = std::move(cand);
                have = true;
                break;
            }
        }
        if (!have) throw std::logic_error("no length-zero seed in translation component");
    }

    std::vector<AffineWeylElement> gens = detail::simple_affine_reflections(rs);
    std::set<std::vector<long long>> seen{seed.key()};
    std::vector<AffineWeylElement> frontier{seed};
    for (int depth = 0; depth <= length_cap; ++depth) {
        std::vector<AffineWeylElement> next;
        for (const AffineWeylElement& g : frontier) {
            if (detail::separating_hyperplanes(rs, p0, g) != depth)
                throw std::logic_error("affine length disagrees with word length");
            if (g.t == nu) return depth;
            for (const AffineWeylElement& s : gens) {
                AffineWeylElement h = g.after(s);
                if (seen.insert(h.key()).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    throw std::runtime_error("oracle out of range");
}

// all cells of the orbit closure: every coweight whose dominant representative
// lies in the dominance ideal of lambda's, with its cell degree
struct CellTable {
    std::vector<std::pair<Coords, int>> cells;
};

inline CellTable cell_table(const RootSystem& rs, const Coords& lambda) {
    Coords lplus = rs.dominant_representative(lambda).first;
    const long long top = rs.pairing_2rho_vee(lplus);
    CellTable out;
    int zeros = 0, tops = 0;
    for (const Coords& mu : rs.dominance_ideal(lplus))
        for (const Coords& nu : rs.weyl_orbit(mu)) {
            long long d = cell_degree(nu, rs);
            if (d < 0 || d > top) throw std::logic_error("cell degree out of range");
            zeros += d == 0;
            tops += d == top;
            out.cells.emplace_back(nu, static_cast<int>(d));
        }
    if (zeros != 1) throw std::logic_error("closed cell is not unique");
    if (tops != 1) throw std::logic_error("open cell is not unique");
    return out;
}

inline std::string dump_cells_csv(const CellTable& table) {
    std::string out = "nu,degree\n";
    for (const auto& [nu, d] : table.cells) {
        for (size_t i = 0; i < nu.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(nu[i]);
        }
        out += ',';
        out += std::to_string(d);
        out += '\n';
    }
    return out;
}

// cohomology Poincaré series: one cell per q-degree point
inline GradedSeries poincare_H(const RootSystem& rs, const Coords& lambda) {
    Coords lplus = rs.dominant_representative(lambda).first;
    const long long top = rs.pairing_2rho_vee(lplus);
    std::vector<Int> coeffs(static_cast<size_t>(top) + 1);
    CellTable table = cell_table(rs, lambda);
    for (const auto& [nu, d] : table.cells) coeffs[d] += 1;
    GradedSeries s(std::move(coeffs));
    if (s.coeff(0) != 1) throw std::logic_error("cell series has constant coefficient != 1");
    if (s.total() != int_of(static_cast<long long>(table.cells.size())))
        throw std::logic_error("cell series drops cells");
    return s;
}

// intersection cohomology Poincaré series: weight multiplicities graded by
// height above the lowest weight, so the cyclic vector sits in degree 0
inline GradedSeries poincare_IH(const RootSystem& rs, const Coords& lambda) {
    Coords lplus = rs.dominant_representative(lambda).first;
    const long long top = rs.pairing_2rho_vee(lplus);
    WeightMultiplicityTable table = freudenthal(rs, lplus);
    std::vector<Int> coeffs(static_cast<size_t>(top) + 1);
    for (const auto& [w, m] : table.mult) {
        long long level = (rs.pairing_2rho_vee(w) + top) / 2;
        coeffs[static_cast<size_t>(level)] += int_of(m);
    }
    GradedSeries s(std::move(coeffs));
    if (s.coeff(0) != 1) throw std::logic_error("highest weight space is not a line");
    if (s.total() != table.total) throw std::logic_error("graded dimension mismatch");
    if (!s.is_palindromic()) throw std::logic_error("intersection series is not palindromic");
    return s;
}

inline bool injectivity_check(const RootSystem& rs, const Coords& lambda) {
    return poincare_H(rs, lambda).dominated_by(poincare_IH(rs, lambda));
}

}  // namespace liecoh
