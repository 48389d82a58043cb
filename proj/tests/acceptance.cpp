// Acceptance gate: runs the default battery and checks every promised
// property, printing one PASS/FAIL line per criterion. Exits 0 only if all
// criteria hold.

#include <cstdio>
#include <string>
#include <vector>

#include "liecoh/report.hpp"

using namespace liecoh;

namespace {

int failures = 0;

void criterion(const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s - %s%s%s\n", ok ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : ": ", detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

std::string count_str(int have, int total) {
    return std::to_string(have) + "/" + std::to_string(total) + " cases";
}

}  // namespace

int main() {
    BatteryConfig cfg;
    cfg.types = {"A1", "A2", "A3", "B2", "C2", "G2"};
    cfg.max_dim = 2000;
    cfg.seed = 20260816;
    cfg.random_checks = 100;

    std::fprintf(stderr, "running battery (types A1 A2 A3 B2 C2 G2, dim <= %lld)...\n",
                 cfg.max_dim);
    std::vector<CaseReport> reports = run_battery(cfg);
    const int n = static_cast<int>(reports.size());
    std::fprintf(stderr, "battery finished: %d cases\n", n);

    // 1. the central equality: cyclic Hilbert series == cell series, everywhere
    {
        int ok = 0;
        for (const CaseReport& r : reports) ok += r.flags.series_match;
        criterion("criterion 1 (hilbert series equals cell series)", ok == n, count_str(ok, n));
    }

    // 2. cohomology embeds into intersection cohomology, with unit ends
    {
        int ok = 0;
        for (const CaseReport& r : reports)
            ok += r.flags.injectivity && r.flags.constant_term_one && r.flags.top_term_one;
        criterion("criterion 2 (degreewise injectivity, unit constant and top terms)", ok == n,
                  count_str(ok, n));
    }

    // 3. minuscule orbits are filled; the sl3 adjoint is strictly smaller
    {
        bool all_minuscule = true;
        int applicable = 0;
        for (const CaseReport& r : reports)
            if (r.flags.minuscule >= 0) {
                ++applicable;
                all_minuscule = all_minuscule && r.flags.minuscule == 1;
            }
        bool adjoint_gap = false;
        for (const CaseReport& r : reports)
            if (r.type == "A2" && r.lambda == Coords{-1, -1})
                adjoint_gap = r.hilbert.total() == 7 && r.dim == 8;
        criterion("criterion 3 (minuscule fullness and the adjoint gap 7 < 8)",
                  all_minuscule && applicable > 0 && adjoint_gap,
                  std::to_string(applicable) + " minuscule cases");
    }

    // 4. annihilator containment: basis plus 100 random vectors per case
    {
        int ok = 0;
        for (const CaseReport& r : reports) ok += r.flags.containment;
        criterion("criterion 4 (annihilator kills basis and random vectors)", ok == n,
                  count_str(ok, n));
    }

    // 5. centralizer shape, rechecked from scratch per type
    {
        bool ok = true;
        std::string bad;
        for (const std::string& label : cfg.types) {
            RootSystem rs(CartanMatrix::from_label(label).langlands_dual());
            ChevalleyAlgebra alg(rs);
            CentralizerBasis cb = centralizer_of_e(alg, principal_triple(alg));
            bool shape = static_cast<int>(cb.elements.size()) == rs.rank();
            for (size_t i = 0; i < cb.elements.size() && shape; ++i)
                for (size_t j = i + 1; j < cb.elements.size() && shape; ++j) {
                    Element br = alg.bracket(cb.elements[i], cb.elements[j]);
                    for (const Rat& c : br) shape = shape && c == 0;
                }
            std::vector<int> deg = cb.q_degrees();
            std::vector<int> exp = rs.exponents();
            std::sort(deg.begin(), deg.end());
            std::sort(exp.begin(), exp.end());
            shape = shape && deg == exp;
            for (const CaseReport& r : reports)
                if (r.type == label) shape = shape && r.flags.centralizer_shape;
            if (!shape && bad.empty()) bad = label;
            ok = ok && shape;
        }
        criterion("criterion 5 (abelian rank-sized centralizer, degrees from exponents)", ok,
                  ok ? "all types" : "first failure " + bad);
    }

    // 6. root lattice cases: invariant dimension equals the zero weight space
    {
        bool ok = true;
        int applicable = 0;
        for (const CaseReport& r : reports)
            if (r.flags.zero_weight_gate >= 0) {
                ++applicable;
                ok = ok && r.flags.zero_weight_gate == 1;
            }
        criterion("criterion 6 (invariants match the zero weight multiplicity)",
                  ok && applicable > 0, std::to_string(applicable) + " root-lattice cases");
    }

    // 7a. structure constants satisfy Jacobi across all small and exceptional types
    {
        bool ok = true;
        std::string bad;
        for (const char* label : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4",
                                  "D4", "F4", "G2"}) {
            try {
                RootSystem rs(CartanMatrix::from_label(label));
                ChevalleyAlgebra alg(rs);
            } catch (const std::exception&) {
                ok = false;
                if (bad.empty()) bad = label;
            }
        }
        criterion("criterion 7a (exhaustive Jacobi identity)", ok,
                  ok ? "13 types" : "first failure " + bad);
    }

    // 7b. dimension agreement between formula, table and module
    {
        int ok = 0;
        for (const CaseReport& r : reports) ok += r.flags.dims_consistent;
        criterion("criterion 7b (three-way dimension agreement)", ok == n, count_str(ok, n));
    }

    // 7c. cell degree formula against the affine Weyl length oracle
    {
        bool ok = true;
        int checked = 0;
        for (const char* label : {"A1", "A2", "B2", "C2", "G2"}) {
            RootSystem rs(CartanMatrix::from_label(label));
            const long long C = rs.rank() == 1 ? 10 : 9;
            std::vector<Coords> box;
            if (rs.rank() == 1)
                for (long long a = -C; a <= C; ++a) box.push_back({a});
            else
                for (long long a = -C; a <= C; ++a)
                    for (long long b = -C; b <= C; ++b) box.push_back({a, b});
            for (const Coords& nu : box) {
                long long d = cell_degree(nu, rs);
                bool shell = false;
                for (long long c : nu) shell = shell || c == C || c == -C;
                if (shell)
                    ok = ok && d > 8;  // nothing with d <= 8 escapes the sweep
                else if (d <= 8) {
                    ok = ok && brute_min_coset_length(nu, rs, 10) == d;
                    ++checked;
                }
            }
        }
        criterion("criterion 7c (cell degrees equal brute-force coset lengths)", ok,
                  std::to_string(checked) + " coweights");
    }

    // 7d. the series sits under the free polynomial bound
    {
        int ok = 0;
        for (const CaseReport& r : reports) ok += r.flags.free_bound;
        criterion("criterion 7d (free polynomial series bound)", ok == n, count_str(ok, n));
    }

    // 8. reruns are byte-identical
    {
        std::fprintf(stderr, "running battery again for determinism...\n");
        std::vector<CaseReport> again = run_battery(cfg);
        ReportDocument d1{cfg.seed, reports};
        ReportDocument d2{cfg.seed, std::move(again)};
        criterion("criterion 8 (same-seed battery reruns byte-identical)",
                  report_to_json(d1).dump() == report_to_json(d2).dump());
    }

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILED");
    return failures == 0 ? 0 : 1;
}
