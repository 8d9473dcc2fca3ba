// pagamma: exponent of finite preferential-attachment networks.
//
//   pagamma solve --m 3
//   pagamma generate --n 100000 --m 3 --seed 42 [--edges e.txt] [--degrees d.txt]
//   pagamma estimate --degrees d.txt [--k-min 3] [--method mle|loglog]
//   pagamma fit --points points.csv
//   pagamma figure1 [--config cfg]
//   pagamma fit-panel [--config cfg]
//
// Results go to stdout as JSON (CSV for figure1). Failures print one JSON
// line {"error": kind, "message": ...} to stderr and exit nonzero.

#include "pagamma/errors.hpp"
#include "pagamma/estimate.hpp"
#include "pagamma/fit.hpp"
#include "pagamma/format.hpp"
#include "pagamma/harness.hpp"
#include "pagamma/netgen.hpp"
#include "pagamma/theory.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace pagamma;

int print_error(const std::string& kind, const std::string& message) {
    std::cerr << JsonObject().str("error", kind).str("message", message).dump() << '\n';
    return 1;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io_error", "cannot read " + path);
    return in;
}

std::vector<std::int64_t> read_degrees(const std::string& path) {
    auto in = open_input(path);
    std::vector<std::int64_t> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::int64_t k;
        std::string rest;
        if (!(ls >> k) || (ls >> rest)) {
            throw Error("parse_error", path + ":" + std::to_string(lineno) + ": expected one integer");
        }
        if (k < 0) {
            throw Error("parse_error", path + ":" + std::to_string(lineno) + ": negative degree");
        }
        out.push_back(k);
    }
    return out;
}

// "m,gamma" rows; a non-numeric first row is taken as a header.
std::vector<FitPoint> read_points(const std::string& path) {
    auto in = open_input(path);
    std::vector<FitPoint> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        FitPoint p;
        if (!(ls >> p.m >> p.gamma)) {
            if (lineno == 1) continue;
            throw Error("parse_error", path + ":" + std::to_string(lineno) + ": expected m,gamma");
        }
        out.push_back(p);
    }
    return out;
}

std::string solution_json(const GammaSolution& s) {
    return JsonObject()
        .integer("m", s.m)
        .num("gamma", s.gamma)
        .num("residual", s.residual)
        .nums("bracket", {s.bracket.first, s.bracket.second})
        .dump();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Expected power-law exponent of finite preferential-attachment networks"};
    app.require_subcommand(1);

    std::int64_t solve_m = 0;
    auto* solve = app.add_subcommand("solve", "Solve the implicit equation for gamma(m)");
    solve->add_option("--m", solve_m, "Links per new node")->required();

    std::int64_t gen_n = 0, gen_m = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_edges, gen_degrees;
    auto* gen = app.add_subcommand("generate", "Grow a Barabasi-Albert network");
    gen->add_option("--n", gen_n, "Final node count")->required();
    gen->add_option("--m", gen_m, "Links per new node")->required();
    gen->add_option("--seed", gen_seed, "PRNG seed")->required();
    gen->add_option("--edges", gen_edges, "Write the edge list here");
    gen->add_option("--degrees", gen_degrees, "Write degrees here, one per line ('-' for stdout)");

    std::string est_path, est_method = "mle";
    std::int64_t est_kmin = 0;
    auto* est = app.add_subcommand("estimate", "Maximum-likelihood exponent of a degree list");
    est->add_option("--degrees", est_path, "File with one integer degree per line")->required();
    est->add_option("--k-min", est_kmin, "Lower cutoff (default: smallest degree)");
    est->add_option("--method", est_method, "mle (default) or loglog")
        ->check(CLI::IsMember({"mle", "loglog"}));

    std::string fit_path;
    auto* fit = app.add_subcommand("fit", "Fit 3 - (m + alpha)^(-beta) to (m, gamma) points");
    fit->add_option("--points", fit_path, "CSV with columns m,gamma")->required();

    std::string fig_config;
    unsigned fig_workers = 0;
    auto* fig = app.add_subcommand("figure1", "Simulated exponent estimates against theory");
    fig->add_option("--config", fig_config, "key=value or JSON config file");
    fig->add_option("--workers", fig_workers, "Override the worker count");

    std::string panel_config;
    auto* panel = app.add_subcommand("fit-panel", "Solver curve and fitted ansatz");
    panel->add_option("--config", panel_config, "key=value or JSON config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        print_error("usage_error", e.what());
        return 2;
    }

    try {
        if (*solve) {
            std::cout << solution_json(solve_gamma(solve_m)) << '\n';
        } else if (*gen) {
            const GrowthParams params{gen_n, gen_m, gen_seed};
            const Network net = generate_network(params, !gen_edges.empty());
            const auto& d = net.sequence.degrees;
            if (!gen_edges.empty()) {
                std::ofstream out(gen_edges);
                if (!out) throw Error("io_error", "cannot write " + gen_edges);
                write_edge_list(out, net.edges);
            }
            if (gen_degrees == "-") {
                for (const auto k : d) std::cout << k << '\n';
            } else {
                if (!gen_degrees.empty()) {
                    std::ofstream out(gen_degrees);
                    if (!out) throw Error("io_error", "cannot write " + gen_degrees);
                    for (const auto k : d) out << k << '\n';
                }
                std::int64_t sum = 0;
                for (const auto k : d) sum += k;
                const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
                std::cout << JsonObject()
                                 .integer("n_nodes", params.n_nodes)
                                 .integer("m", params.m)
                                 .raw("seed", std::to_string(params.seed))
                                 .integer("degree_sum", sum)
                                 .num("mean_degree", static_cast<double>(sum) /
                                                         static_cast<double>(d.size()))
                                 .integer("min_degree", *lo)
                                 .integer("max_degree", *hi)
                                 .dump()
                          << '\n';
            }
        } else if (*est) {
            const auto degrees = read_degrees(est_path);
            if (degrees.empty()) throw DegenerateInput("no degrees in " + est_path);
            const std::int64_t k_min =
                est_kmin > 0 ? est_kmin : *std::min_element(degrees.begin(), degrees.end());
            if (est_method == "loglog") {
                std::cout << JsonObject()
                                 .str("method", "loglog")
                                 .num("gamma_hat", estimate_gamma_loglog(degrees, k_min))
                                 .integer("k_min", k_min)
                                 .dump()
                          << '\n';
            } else {
                const GammaEstimate e = estimate_gamma(degrees, k_min);
                std::cout << JsonObject()
                                 .str("method", "mle")
                                 .num("gamma_hat", e.gamma_hat)
                                 .integer("k_min", e.k_min)
                                 .integer("n_tail", e.n_tail)
                                 .num("log_likelihood", e.log_likelihood)
                                 .dump()
                          << '\n';
            }
        } else if (*fit) {
            const FitResult r = fit_ansatz(read_points(fit_path));
            std::cout << JsonObject()
                             .num("alpha", r.alpha)
                             .num("beta", r.beta)
                             .num("alpha_stderr", r.alpha_stderr)
                             .num("beta_stderr", r.beta_stderr)
                             .num("rss", r.rss)
                             .integer("iterations", static_cast<std::int64_t>(r.iterations))
                             .nums("residuals", r.residuals)
                             .dump()
                      << '\n';
        } else if (*fig) {
            ExperimentConfig cfg = fig_config.empty() ? ExperimentConfig{} : load_config(fig_config);
            if (fig_workers > 0) cfg.workers = fig_workers;
            std::cout << figure1_csv(run_figure1(cfg));
        } else if (*panel) {
            const ExperimentConfig cfg =
                panel_config.empty() ? ExperimentConfig{} : load_config(panel_config);
            const FitPanel p = run_fit_panel(cfg);
            for (const auto& w : p.warnings) std::cerr << "warning: " << w << '\n';
            std::cout << fit_panel_json(p) << '\n';
        }
    } catch (const Error& e) {
        return print_error(e.kind(), e.what());
    } catch (const std::exception& e) {
        return print_error("internal_error", e.what());
    }
    return 0;
}
