#pragma once

// Case orchestration and reporting. A case is an input Cartan type plus an
// anti-dominant coweight; verification builds everything on the dual root
// system (coweights of the input type are weights there), runs the cyclic
// module route and the cell route independently, and records both series with
// pass/fail flags. The flags are recomputable from the recorded data, so a
// report is self-verifying. Serialization is deterministic: same config and
// seed produce byte-identical JSON (timings are opt-in for that reason).

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "liecoh/cyclic.hpp"
#include "liecoh/schubert.hpp"

namespace liecoh {

using OrderedJson = nlohmann::ordered_json;

struct CaseFlags {
    bool series_match = false;      // cyclic Hilbert series == cell series
    bool constant_term_one = false; // both series start with coefficient 1
    bool top_term_one = false;      // cell series ends with coefficient 1
    bool injectivity = false;       // cell series <= intersection series
    int minuscule = -1;             // orbit module filled: pass/fail, -1 n/a
    bool containment = false;       // ladder kills basis and random vectors
    bool centralizer_shape = false; // rank generators, degrees twice exponents
    int zero_weight_gate = -1;      // invariants == zero weight mult, -1 n/a
    bool dims_consistent = false;   // Weyl formula == table total == module
    bool free_bound = false;        // series below the free polynomial series

    bool passed() const {
        return series_match && constant_term_one && top_term_one && injectivity &&
               minuscule != 0 && containment && centralizer_shape && zero_weight_gate != 0 &&
               dims_consistent && free_bound;
    }
    bool operator==(const CaseFlags&) const = default;
};

struct CaseReport {
    std::string type;                            // input label, "" for raw matrices
    std::vector<std::vector<long long>> cartan;  // input Cartan matrix
    Coords lambda;                               // anti-dominant input coweight
    long long dim = 0;
    unsigned long long seed = 0;
    std::vector<int> exponents;
    std::vector<int> degrees;  // ad-h degrees of the centralizer generators
    long long zero_weight_mult = 0;
    long long invariant_dim = 0;
    GradedSeries hilbert;  // cyclic module route
    GradedSeries cells;    // cell degree route
    GradedSeries ih;       // weight multiplicity route
    CaseFlags flags;
    std::vector<std::pair<std::string, long long>> timings_ms;

    bool same_result(const CaseReport& o) const {
        return type == o.type && cartan == o.cartan && lambda == o.lambda && dim == o.dim &&
               seed == o.seed && exponents == o.exponents && degrees == o.degrees &&
               zero_weight_mult == o.zero_weight_mult && invariant_dim == o.invariant_dim &&
               hilbert.coeffs() == o.hilbert.coeffs() && cells.coeffs() == o.cells.coeffs() &&
               ih.coeffs() == o.ih.coeffs() && flags == o.flags;
    }
};

namespace detail {

inline long long steady_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

inline std::vector<std::vector<long long>> cartan_rows(const CartanMatrix& cm) {
    std::vector<std::vector<long long>> rows(cm.rank(), std::vector<long long>(cm.rank()));
    for (int i = 0; i < cm.rank(); ++i)
        for (int j = 0; j < cm.rank(); ++j) rows[i][j] = cm(i, j);
    return rows;
}

inline uint64_t fnv64(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t case_seed(uint64_t global, const std::string& key, const Coords& lambda) {
    uint64_t h = hash_combine64(global, fnv64(key));
    for (long long c : lambda) h = hash_combine64(h, static_cast<uint64_t>(c + 0x7fffffff));
    return h;
}

inline std::string input_key(const CartanMatrix& cm) {
    if (!cm.label().empty()) return cm.label();
    std::string k = "M";
    for (int i = 0; i < cm.rank(); ++i)
        for (int j = 0; j < cm.rank(); ++j) k += ":" + std::to_string(cm(i, j));
    return k;
}

}  // namespace detail

// Full pipeline for one case. lambda is an anti-dominant coweight of the
// input type, which is the same integer vector as an anti-dominant weight of
// the dual type. Check failures are recorded in the flags, not thrown.
inline CaseReport verify_case(const CartanMatrix& cm_input, const Coords& lambda,
                              unsigned long long seed = 0, int random_checks = 100,
                              const std::string& cache_path = "") {
    CaseReport rep;
    rep.type = cm_input.label();
    rep.cartan = detail::cartan_rows(cm_input);
    rep.lambda = lambda;
    rep.seed = seed;

    RootSystem rs(cm_input.langlands_dual());
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("lambda has the wrong rank");
    if (!rs.is_antidominant(lambda)) throw std::invalid_argument("lambda is not anti-dominant");

    long long t0 = detail::steady_ms();
    ChevalleyAlgebra alg(rs, seed);
    if (!cache_path.empty()) alg.sync_cache_file(cache_path);
    PrincipalTriple triple = principal_triple(alg);
    CentralizerBasis cb = centralizer_of_e(alg, triple);
    IrreducibleModule mod(alg, lambda);
    rep.timings_ms.emplace_back("build", detail::steady_ms() - t0);

    rep.dim = mod.dim();
    rep.exponents = rs.exponents();
    for (int d : cb.q_degrees()) rep.degrees.push_back(2 * d);
    {
        std::vector<int> want = rep.exponents;
        for (int& x : want) x *= 2;
        std::sort(want.begin(), want.end());
        std::vector<int> have = rep.degrees;
        std::sort(have.begin(), have.end());
        rep.flags.centralizer_shape =
            static_cast<int>(cb.elements.size()) == rs.rank() && have == want;
    }

    t0 = detail::steady_ms();
    auto [series, ladder] = cyclic_series(mod, cb);
    rep.hilbert = series;
    rep.timings_ms.emplace_back("series", detail::steady_ms() - t0);

    t0 = detail::steady_ms();
    rep.cells = poincare_H(rs, lambda);
    rep.ih = poincare_IH(rs, lambda);
    rep.timings_ms.emplace_back("cells", detail::steady_ms() - t0);

    rep.flags.series_match = rep.hilbert.coeffs() == rep.cells.coeffs();
    rep.flags.constant_term_one = rep.hilbert.coeff(0) == 1 && rep.cells.coeff(0) == 1;
    rep.flags.top_term_one = rep.cells.coeff(rep.cells.degree()) == 1;
    rep.flags.injectivity = rep.cells.dominated_by(rep.ih);
    if (std::optional<bool> full = check_minuscule_full(mod, series))
        rep.flags.minuscule = *full ? 1 : 0;

    t0 = detail::steady_ms();
    {
        ContainmentChecker checker(mod, ladder);
        bool ok = true;
        for (int j = 0; ok && j < mod.dim(); ++j) {
            std::vector<Rat> v = mod.zero_vector();
            v[j] = 1;
            ok = checker.check(v);
        }
        SplitMix64 rng(seed);
        for (int k = 0; ok && k < random_checks; ++k)
            ok = checker.check(random_sparse_vector(mod, rng));
        rep.flags.containment = ok;
    }
    rep.timings_ms.emplace_back("containment", detail::steady_ms() - t0);

    rep.zero_weight_mult = mod.mult(Coords(rs.rank(), 0));
    rep.invariant_dim = joint_kernel(mod, cb.elements);
    if (rs.in_root_lattice(lambda))
        rep.flags.zero_weight_gate = rep.invariant_dim == rep.zero_weight_mult ? 1 : 0;

    Coords lplus = rs.dominant_representative(lambda).first;
    rep.flags.dims_consistent = weyl_dimension(rs, lplus) == int_of(rep.dim) &&
                                rep.ih.total() == int_of(rep.dim);
    rep.flags.free_bound = free_series_bound(cb, series);
    return rep;
}

struct BatteryConfig {
    std::vector<std::string> types;
    long long max_dim = 2000;
    long long max_pairing = -1;  // bound on <2rho, lambda+>; -1 derives it from max_dim
    unsigned long long seed = 0;
    int jobs = 1;
    int random_checks = 100;
    std::string cache_path;
};

// All anti-dominant lambda for the dual system within the config bounds,
// ordered by increasing <2rho, lambda+> with ties broken lexicographically
// on the dominant representative.
inline std::vector<Coords> enumerate_antidominant(const RootSystem& rs, long long max_dim,
                                                  long long max_pairing) {
    const int n = rs.rank();
    std::vector<long long> tw(n);
    for (int i = 0; i < n; ++i) {
        Coords e(n, 0);
        e[i] = 1;
        tw[i] = rs.pairing_2rho_vee(e);
    }
    // every level of the module is nonempty, so dim >= pairing + 1
    long long cap = max_pairing >= 0 ? max_pairing : max_dim - 1;
    std::vector<Coords> out;
    Coords mu(n, 0);
    auto rec = [&](auto&& self, int i, long long rest) -> void {
        if (i == n - 1) {
            if (rest % tw[i]) return;
            mu[i] = rest / tw[i];
            if (weyl_dimension(rs, mu) <= int_of(max_dim)) {
                Coords lambda(mu);
                for (long long& c : lambda) c = -c;
                out.push_back(std::move(lambda));
            }
            return;
        }
        for (mu[i] = 0; mu[i] * tw[i] <= rest; ++mu[i]) self(self, i + 1, rest - mu[i] * tw[i]);
    };
    for (long long t = 0; t <= cap; ++t) rec(rec, 0, t);
    return out;
}

inline std::vector<CaseReport> run_battery(const BatteryConfig& cfg) {
    std::vector<std::pair<CartanMatrix, Coords>> work;
    for (const std::string& label : cfg.types) {
        CartanMatrix cm = CartanMatrix::from_label(label);
        RootSystem rs(cm.langlands_dual());
        if (!cfg.cache_path.empty()) ChevalleyAlgebra(rs, 0).sync_cache_file(cfg.cache_path);
        for (Coords& lambda : enumerate_antidominant(rs, cfg.max_dim, cfg.max_pairing))
            work.emplace_back(cm, std::move(lambda));
    }
    std::vector<CaseReport> out(work.size());
    auto run_one = [&](size_t i) {
        const auto& [cm, lambda] = work[i];
        uint64_t seed = detail::case_seed(cfg.seed, detail::input_key(cm), lambda);
        out[i] = verify_case(cm, lambda, seed, cfg.random_checks);
    };
    if (cfg.jobs <= 1) {
        for (size_t i = 0; i < work.size(); ++i) run_one(i);
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.jobs; ++t)
        pool.emplace_back([&] {
            for (size_t i = next++; i < work.size(); i = next++) run_one(i);
        });
    for (std::thread& t : pool) t.join();
    return out;
}

// ---- serialization ----------------------------------------------------

namespace detail {

inline const char* tri_str(int v) { return v < 0 ? "n/a" : (v ? "pass" : "fail"); }

inline int tri_parse(const std::string& s) {
    if (s == "n/a") return -1;
    if (s == "pass") return 1;
    if (s == "fail") return 0;
    throw std::invalid_argument("bad tri-state flag: " + s);
}

inline OrderedJson series_json(const GradedSeries& s) {
    OrderedJson a = OrderedJson::array();
    for (const Int& c : s.coeffs()) a.push_back(to_ll(c));
    return a;
}

inline GradedSeries series_parse(const OrderedJson& a) {
    std::vector<Int> c;
    for (const auto& v : a) c.push_back(int_of(v.get<long long>()));
    return GradedSeries(std::move(c));
}

inline std::string series_spaced(const GradedSeries& s) {
    std::string out;
    for (const Int& c : s.coeffs()) {
        if (!out.empty()) out += ' ';
        out += c.get_str();
    }
    return out.empty() ? "0" : out;
}

}  // namespace detail

inline OrderedJson case_to_json(const CaseReport& r, bool with_timings = false) {
    OrderedJson j;
    j["type"] = r.type;
    j["cartan"] = r.cartan;
    j["lambda"] = r.lambda;
    j["dim"] = r.dim;
    j["seed"] = r.seed;
    j["exponents"] = r.exponents;
    j["degrees"] = r.degrees;
    j["zero_weight_mult"] = r.zero_weight_mult;
    j["invariant_dim"] = r.invariant_dim;
    OrderedJson series;
    series["hilbert"] = detail::series_json(r.hilbert);
    series["cells"] = detail::series_json(r.cells);
    series["ih"] = detail::series_json(r.ih);
    j["series"] = std::move(series);
    OrderedJson f;
    f["series_match"] = r.flags.series_match;
    f["constant_term_one"] = r.flags.constant_term_one;
    f["top_term_one"] = r.flags.top_term_one;
    f["injectivity"] = r.flags.injectivity;
    f["minuscule"] = detail::tri_str(r.flags.minuscule);
    f["containment"] = r.flags.containment;
    f["centralizer_shape"] = r.flags.centralizer_shape;
    f["zero_weight_gate"] = detail::tri_str(r.flags.zero_weight_gate);
    f["dims_consistent"] = r.flags.dims_consistent;
    f["free_bound"] = r.flags.free_bound;
    f["passed"] = r.flags.passed();
    j["flags"] = std::move(f);
    if (with_timings) {
        OrderedJson t;
        for (const auto& [name, ms] : r.timings_ms) t[name] = ms;
        j["timings_ms"] = std::move(t);
    }
    return j;
}

inline CaseReport case_from_json(const OrderedJson& j) {
    CaseReport r;
    r.type = j.at("type").get<std::string>();
    r.cartan = j.at("cartan").get<std::vector<std::vector<long long>>>();
    r.lambda = j.at("lambda").get<Coords>();
    r.dim = j.at("dim").get<long long>();
    r.seed = j.at("seed").get<unsigned long long>();
    r.exponents = j.at("exponents").get<std::vector<int>>();
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.zero_weight_mult = j.at("zero_weight_mult").get<long long>();
    r.invariant_dim = j.at("invariant_dim").get<long long>();
    r.hilbert = detail::series_parse(j.at("series").at("hilbert"));
    r.cells = detail::series_parse(j.at("series").at("cells"));
    r.ih = detail::series_parse(j.at("series").at("ih"));
    const OrderedJson& f = j.at("flags");
    r.flags.series_match = f.at("series_match").get<bool>();
    r.flags.constant_term_one = f.at("constant_term_one").get<bool>();
    r.flags.top_term_one = f.at("top_term_one").get<bool>();
    r.flags.injectivity = f.at("injectivity").get<bool>();
    r.flags.minuscule = detail::tri_parse(f.at("minuscule").get<std::string>());
    r.flags.containment = f.at("containment").get<bool>();
    r.flags.centralizer_shape = f.at("centralizer_shape").get<bool>();
    r.flags.zero_weight_gate = detail::tri_parse(f.at("zero_weight_gate").get<std::string>());
    r.flags.dims_consistent = f.at("dims_consistent").get<bool>();
    r.flags.free_bound = f.at("free_bound").get<bool>();
    if (j.contains("timings_ms"))
        for (const auto& [k, v] : j.at("timings_ms").items())
            r.timings_ms.emplace_back(k, v.get<long long>());
    return r;
}

struct ReportDocument {
    unsigned long long seed = 0;
    std::vector<CaseReport> cases;

    int passed() const {
        int p = 0;
        for (const CaseReport& r : cases) p += r.flags.passed();
        return p;
    }
    bool all_passed() const { return passed() == static_cast<int>(cases.size()); }
};

inline OrderedJson report_to_json(const ReportDocument& doc, bool with_timings = false) {
    OrderedJson j;
    j["schema"] = "liecoh-report-v1";
    j["seed"] = doc.seed;
    OrderedJson arr = OrderedJson::array();
    for (const CaseReport& r : doc.cases) arr.push_back(case_to_json(r, with_timings));
    j["cases"] = std::move(arr);
    OrderedJson s;
    s["cases"] = doc.cases.size();
    s["passed"] = doc.passed();
    s["failed"] = static_cast<int>(doc.cases.size()) - doc.passed();
    j["summary"] = std::move(s);
    return j;
}

inline ReportDocument report_from_json(const OrderedJson& j) {
    if (j.value("schema", "") != "liecoh-report-v1")
        throw std::invalid_argument("unknown report schema");
    ReportDocument doc;
    doc.seed = j.at("seed").get<unsigned long long>();
    for (const auto& c : j.at("cases")) doc.cases.push_back(case_from_json(c));
    return doc;
}

namespace detail {

inline std::string lambda_str(const Coords& lambda) {
    std::string s = "(";
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lambda[i]);
    }
    return s + ")";
}

}  // namespace detail

inline void emit_text(const ReportDocument& doc, std::ostream& os) {
    for (const CaseReport& r : doc.cases) {
        std::string name = r.type.empty() ? "custom" : r.type;
        os << name << " lambda=" << detail::lambda_str(r.lambda) << " dim=" << r.dim
           << " seed=" << r.seed << ": " << (r.flags.passed() ? "PASS" : "FAIL") << "\n";
        os << "  hilbert = " << r.hilbert.str() << "\n";
        os << "  cells   = " << r.cells.str() << "\n";
        os << "  ih      = " << r.ih.str() << "\n";
        if (!r.flags.passed()) {
            os << "  failing:";
            if (!r.flags.series_match) os << " series_match";
            if (!r.flags.constant_term_one) os << " constant_term_one";
            if (!r.flags.top_term_one) os << " top_term_one";
            if (!r.flags.injectivity) os << " injectivity";
            if (r.flags.minuscule == 0) os << " minuscule";
            if (!r.flags.containment) os << " containment";
            if (!r.flags.centralizer_shape) os << " centralizer_shape";
            if (r.flags.zero_weight_gate == 0) os << " zero_weight_gate";
            if (!r.flags.dims_consistent) os << " dims_consistent";
            if (!r.flags.free_bound) os << " free_bound";
            os << "\n";
        }
    }
    os << "summary: " << doc.cases.size() << " cases, " << doc.passed() << " passed, "
       << static_cast<int>(doc.cases.size()) - doc.passed() << " failed\n";
}

inline void emit_csv(const ReportDocument& doc, std::ostream& os) {
    os << "type,lambda,dim,seed,hilbert,cells,ih,zero_weight_mult,invariant_dim,minuscule,"
          "passed\n";
    for (const CaseReport& r : doc.cases) {
        std::string lam;
        for (size_t i = 0; i < r.lambda.size(); ++i) {
            if (i) lam += ' ';
            lam += std::to_string(r.lambda[i]);
        }
        os << (r.type.empty() ? "custom" : r.type) << ',' << lam << ',' << r.dim << ','
           << r.seed << ',' << detail::series_spaced(r.hilbert) << ','
           << detail::series_spaced(r.cells) << ',' << detail::series_spaced(r.ih) << ','
           << r.zero_weight_mult << ',' << r.invariant_dim << ','
           << detail::tri_str(r.flags.minuscule) << ',' << (r.flags.passed() ? 1 : 0) << "\n";
    }
}

inline void emit_report(const ReportDocument& doc, const std::string& format, std::ostream& os,
                        bool with_timings = false) {
    if (format == "json")
        os << report_to_json(doc, with_timings).dump(2) << "\n";
    else if (format == "text")
        emit_text(doc, os);
    else if (format == "csv")
        emit_csv(doc, os);
    else
        throw std::invalid_argument("unknown report format: " + format);
}

// ---- config parsing ----------------------------------------------------

inline CartanMatrix cartan_from_json(const nlohmann::json& j) {
    if (j.is_string()) return CartanMatrix::from_label(j.get<std::string>());
    return CartanMatrix::from_entries(j.get<std::vector<std::vector<long long>>>());
}

inline BatteryConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    BatteryConfig cfg;
    cfg.types = j.value("types", std::vector<std::string>{});
    cfg.max_dim = j.value("max_dim", cfg.max_dim);
    cfg.max_pairing = j.value("max_pairing", cfg.max_pairing);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.jobs = j.value("jobs", cfg.jobs);
    cfg.random_checks = j.value("random_checks", cfg.random_checks);
    cfg.cache_path = j.value("cache", cfg.cache_path);
    return cfg;
}

}  // namespace liecoh
