#pragma once

#include "pagamma/fit.hpp"
#include "pagamma/theory.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace pagamma {

/// Upper end of the m range the ansatz is fitted on; larger m values in a
/// config are only used to show the extrapolation.
inline constexpr double kFitRangeMax = 10.0;

/// Estimates outside this band abort a run.
inline constexpr double kSanityLow = 1.5;
inline constexpr double kSanityHigh = 3.5;

/// Alternative alpha quoted alongside the caption value; checked against
/// the fit's confidence interval and flagged when outside it.
inline constexpr double kAlphaTextValue = 0.925;

struct ExperimentConfig {
    std::vector<std::int64_t> m_values{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<std::int64_t> n_values{1000, 10000, 100000};
    std::int64_t realizations = 30;
    std::uint64_t base_seed = 1;
    std::filesystem::path output_dir = "pagamma_out";
    /// 0 means std::thread::hardware_concurrency().
    unsigned workers = 0;
    bool write_svg = true;

    /// Throws ConfigError on empty lists, non-positive entries or
    /// realizations < 1.
    void validate() const;
};

/// Reads a config file. A file whose first non-blank character is '{' is
/// parsed as JSON; anything else as `key = value` lines with '#' comments.
/// Keys: m_values, n_values, realizations, base_seed, output_dir, workers,
/// svg. Integer lists are comma-separated in key=value form and may use
/// `a..b` ranges ("1..10"); in JSON they are arrays.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& text);

/// Seed of replicate `replicate` at (m, N): nested SplitMix64 mixing of
/// base_seed, m, N and the replicate index.
std::uint64_t derive_seed(std::uint64_t base_seed, std::int64_t m, std::int64_t n_nodes,
                          std::int64_t replicate);

struct ExperimentRow {
    std::int64_t m = 0;
    std::int64_t n_nodes = 0;
    double mean_gamma = 0.0;
    double std_gamma = 0.0;  ///< sample standard deviation, n - 1 denominator
    double theory_gamma = 0.0;
    std::int64_t realizations = 0;
    /// Replicate estimates, in replicate-index order.
    std::vector<double> gamma_hats;
};

struct ExperimentTable {
    std::vector<ExperimentRow> rows;  ///< m-major, then N, in config order
};

/// Exact CSV header of figure1.csv.
inline constexpr const char* kFigure1CsvHeader = "m,N,mean_gamma,std_gamma,theory_gamma,realizations";

/// Generates `realizations` networks per (m, N), estimates gamma for each and
/// summarizes against solve_gamma(m). Work is spread over config.workers
/// threads; results do not depend on the worker count.
///
/// Writes into config.output_dir:
///   figure1.csv                    summary table
///   replicates/gamma_m<m>_N<N>.txt one estimate per line, replicate order
///   figure1_theory.dat             "m gamma" theory line
///   figure1_N<N>.dat               "m mean std" per network size
///   figure1.svg                    when config.write_svg
///
/// Failures are rethrown as ExperimentError naming (m, N, replicate).
ExperimentTable run_figure1(const ExperimentConfig& config);

/// Summary table without touching the filesystem.
ExperimentTable compute_figure1(const ExperimentConfig& config);

std::string figure1_csv(const ExperimentTable& table);

struct FitPanel {
    FitResult fit;
    std::vector<GammaSolution> solutions;  ///< one per config m value
    std::vector<FitPoint> fitted_points;   ///< the subset with m <= 10
    bool alpha_text_value_in_ci = false;   ///< 0.925 inside alpha +- 1.96 stderr
    std::vector<std::string> warnings;
};

/// Solves gamma(m) over config.m_values, fits the ansatz on m in [1, 10] and
/// writes into config.output_dir:
///   fit_panel_points.dat  "m gamma" solver output (all m values)
///   fit_panel_curve.dat   "m gamma_hat" fitted curve, extended past the data
///   fit_panel.json        fitted parameters and diagnostics
///   fit_panel.svg         when config.write_svg
/// A warning is recorded when fewer than 5 points fall in the fit range.
FitPanel run_fit_panel(const ExperimentConfig& config);

/// run_fit_panel without writing files.
FitPanel compute_fit_panel(const ExperimentConfig& config);

std::string fit_panel_json(const FitPanel& panel);

} // namespace pagamma
