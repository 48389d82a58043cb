// Command line front end: verify one case, run a battery, or re-render a
// stored JSON report. Exit code 0 means every check passed, 1 means some
// check failed or the computation aborted, 2 means the invocation was wrong.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liecoh/report.hpp"

namespace {

using namespace liecoh;

Coords parse_lambda(const std::vector<std::string>& tokens) {
    Coords out;
    for (const std::string& tok : tokens) {
        std::string piece;
        std::stringstream ss(tok);
        while (std::getline(ss, piece, ',')) {
            if (piece.empty()) continue;
            size_t used = 0;
            long long v = std::stoll(piece, &used);
            if (used != piece.size()) throw std::invalid_argument("bad lambda entry: " + piece);
            out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("empty lambda");
    return out;
}

CartanMatrix load_type(const std::string& spec) {
    std::ifstream in(spec);
    if (in) {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("cannot parse matrix file " + spec + ": " + e.what());
        }
        return cartan_from_json(j);
    }
    return CartanMatrix::from_label(spec);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

std::string render(const ReportDocument& doc, const std::string& format, bool timings) {
    std::ostringstream os;
    emit_report(doc, format, os, timings);
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-route verification of orbit-closure cohomology series"};
    app.require_subcommand(1);

    std::string format = "text", out_path, cache_path;
    bool timings = false;

    auto add_output_opts = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text, json or csv");
        cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
        cmd->add_flag("--timings", timings, "include per-phase timings in JSON output");
    };

    // verify
    std::string type_spec;
    std::vector<std::string> lambda_tokens;
    unsigned long long seed = 0;
    int random_checks = 100;
    std::string dump_cells_path, dump_mults_path;
    CLI::App* verify = app.add_subcommand("verify", "run every check for a single case");
    verify->add_option("--type", type_spec, "type label or JSON matrix file")->required();
    verify->add_option("--lambda", lambda_tokens, "anti-dominant coweight coordinates")
        ->required();
    verify->add_option("--seed", seed, "seed for basis order and random vectors");
    verify->add_option("--random-checks", random_checks, "number of random containment probes");
    verify->add_option("--cache", cache_path, "structure constant cache file")
        ->envname("LIECOH_CACHE");
    verify->add_option("--dump-cells", dump_cells_path, "write the cell table CSV here");
    verify->add_option("--dump-mults", dump_mults_path, "write weight multiplicities CSV here");
    add_output_opts(verify);

    // battery
    std::string config_path;
    std::vector<std::string> types;
    long long max_dim = -1, max_pairing = -2;
    unsigned long long bat_seed = 0;
    int jobs = 0, bat_checks = -1;
    CLI::App* battery = app.add_subcommand("battery", "enumerate and verify a family of cases");
    battery->add_option("--config", config_path, "JSON config file");
    battery->add_option("--types", types, "type labels")->delimiter(',');
    battery->add_option("--max-dim", max_dim, "largest module dimension");
    battery->add_option("--max-pairing", max_pairing, "largest pairing of lambda with 2rho");
    battery->add_option("--seed", bat_seed, "battery seed");
    battery->add_option("--jobs", jobs, "worker threads");
    battery->add_option("--random-checks", bat_checks, "random containment probes per case");
    battery->add_option("--cache", cache_path, "structure constant cache file")
        ->envname("LIECOH_CACHE");
    add_output_opts(battery);

    // report
    std::string in_path;
    CLI::App* report = app.add_subcommand("report", "re-render a stored JSON report");
    report->add_option("--in", in_path, "JSON report file")->required();
    add_output_opts(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            CartanMatrix cm = load_type(type_spec);
            Coords lambda = parse_lambda(lambda_tokens);
            CaseReport rep = verify_case(cm, lambda, seed, random_checks, cache_path);
            if (!dump_cells_path.empty() || !dump_mults_path.empty()) {
                RootSystem rs(cm.langlands_dual());
                if (!dump_cells_path.empty())
                    write_output(dump_cells_path, dump_cells_csv(cell_table(rs, lambda)));
                if (!dump_mults_path.empty()) {
                    std::ostringstream os;
                    dump_multiplicities_csv(
                        freudenthal(rs, rs.dominant_representative(lambda).first), os);
                    write_output(dump_mults_path, os.str());
                }
            }
            ReportDocument doc{seed, {rep}};
            write_output(out_path, render(doc, format, timings));
            return doc.all_passed() ? 0 : 1;
        }
        if (battery->parsed()) {
            BatteryConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                if (!in) throw std::invalid_argument("cannot read config " + config_path);
                nlohmann::json j;
                try {
                    in >> j;
                } catch (const nlohmann::json::exception& e) {
                    throw std::invalid_argument(std::string("bad config JSON: ") + e.what());
                }
                cfg = config_from_json(j);
            }
            if (!types.empty()) cfg.types = types;
            if (max_dim >= 0) cfg.max_dim = max_dim;
            if (max_pairing >= -1) cfg.max_pairing = max_pairing;
            if (battery->count("--seed")) cfg.seed = bat_seed;
            if (jobs > 0) cfg.jobs = jobs;
            if (bat_checks >= 0) cfg.random_checks = bat_checks;
            if (!cache_path.empty()) cfg.cache_path = cache_path;
            ReportDocument doc{cfg.seed, run_battery(cfg)};
            write_output(out_path, render(doc, format, timings));
            return doc.all_passed() ? 0 : 1;
        }
        // report
        std::ifstream in(in_path);
        if (!in) throw std::invalid_argument("cannot read report " + in_path);
        OrderedJson j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
        }
        ReportDocument doc = report_from_json(j);
        write_output(out_path, render(doc, format, timings));
        return doc.all_passed() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
