#include "pagamma/harness.hpp"

#include "pagamma/errors.hpp"
#include "pagamma/estimate.hpp"
#include "pagamma/format.hpp"
#include "pagamma/netgen.hpp"
#include "pagamma/random.hpp"
#include "plot.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace pagamma {
namespace {

struct Task {
    std::size_t row;
    std::int64_t m;
    std::int64_t n_nodes;
    std::int64_t replicate;
};

std::string task_label(std::int64_t m, std::int64_t n, std::int64_t rep) {
    return "(m=" + std::to_string(m) + ", N=" + std::to_string(n) +
           ", replicate=" + std::to_string(rep) + ")";
}

unsigned worker_count(unsigned requested, std::size_t tasks) {
    unsigned w = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(tasks, 1)));
}

// Mean and n-1 sample deviation over the sorted values, so the result is
// bitwise independent of the order replicates finished in.
std::pair<double, double> summarize(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (const double v : values) sum += v;
    const double mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (const double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io_error", "cannot write " + path.string());
    out << contents;
    if (!out) throw Error("io_error", "write failed for " + path.string());
}

// Theory values per distinct m, in config order.
std::vector<double> theory_for(const std::vector<std::int64_t>& m_values) {
    const auto sols = gamma_curve(m_values);
    std::vector<double> out;
    out.reserve(sols.size());
    for (const auto& s : sols) out.push_back(s.gamma);
    return out;
}

const char* size_color(std::size_t i) {
    static constexpr const char* kColors[] = {"#d62728", "#2ca02c", "#1f77b4", "#9467bd", "#ff7f0e"};
    return kColors[i % 5];
}

} // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::int64_t m, std::int64_t n_nodes,
                          std::int64_t replicate) {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(m));
    h = splitmix64(h ^ static_cast<std::uint64_t>(n_nodes));
    h = splitmix64(h ^ static_cast<std::uint64_t>(replicate));
    return h;
}

ExperimentTable compute_figure1(const ExperimentConfig& config) {
    config.validate();
    const std::vector<double> theory = theory_for(config.m_values);

    ExperimentTable table;
    std::vector<Task> tasks;
    for (std::size_t mi = 0; mi < config.m_values.size(); ++mi) {
        for (const std::int64_t n : config.n_values) {
            ExperimentRow row;
            row.m = config.m_values[mi];
            row.n_nodes = n;
            row.theory_gamma = theory[mi];
            row.realizations = config.realizations;
            row.gamma_hats.assign(static_cast<std::size_t>(config.realizations), 0.0);
            for (std::int64_t r = 0; r < config.realizations; ++r) {
                tasks.push_back({table.rows.size(), row.m, n, r});
            }
            table.rows.push_back(std::move(row));
        }
    }

    // Each task writes only its own slot, so the workers share no mutable
    // state apart from the task counter and the first error.
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::size_t error_task = tasks.size();
    std::exception_ptr error;

    const auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            const Task& t = tasks[i];
            try {
                const GrowthParams params{t.n_nodes, t.m,
                                          derive_seed(config.base_seed, t.m, t.n_nodes, t.replicate)};
                const double g = estimate_gamma(generate(params)).gamma_hat;
                if (!(g > kSanityLow && g < kSanityHigh)) {
                    throw ExperimentError("sanity_band",
                                          "estimate " + fmt_num(g) + " outside (1.5, 3.5)");
                }
                table.rows[t.row].gamma_hats[static_cast<std::size_t>(t.replicate)] = g;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (i < error_task) {
                    error_task = i;
                    error = std::current_exception();
                }
            }
        }
    };

    const unsigned n_workers = worker_count(config.workers, tasks.size());
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < n_workers; ++w) pool.emplace_back(work);
        work();
    }

    if (error) {
        const Task& t = tasks[error_task];
        const std::string where = task_label(t.m, t.n_nodes, t.replicate);
        try {
            std::rethrow_exception(error);
        } catch (const Error& e) {
            throw ExperimentError(e.kind(), "figure1 " + where + ": " + e.what());
        } catch (const std::exception& e) {
            throw ExperimentError("internal_error", "figure1 " + where + ": " + e.what());
        }
    }

    for (auto& row : table.rows) {
        std::tie(row.mean_gamma, row.std_gamma) = summarize(row.gamma_hats);
    }
    return table;
}

std::string figure1_csv(const ExperimentTable& table) {
    std::string s = std::string(kFigure1CsvHeader) + "\n";
    for (const auto& r : table.rows) {
        s += fmt_num(r.m) + "," + fmt_num(r.n_nodes) + "," + fmt_num(r.mean_gamma) + "," +
             fmt_num(r.std_gamma) + "," + fmt_num(r.theory_gamma) + "," + fmt_num(r.realizations) +
             "\n";
    }
    return s;
}

ExperimentTable run_figure1(const ExperimentConfig& config) {
    ExperimentTable table = compute_figure1(config);
    const auto& dir = config.output_dir;
    std::filesystem::create_directories(dir / "replicates");

    write_file(dir / "figure1.csv", figure1_csv(table));
    for (const auto& r : table.rows) {
        std::string s;
        for (const double g : r.gamma_hats) s += fmt_num(g) + "\n";
        write_file(dir / "replicates" /
                       ("gamma_m" + std::to_string(r.m) + "_N" + std::to_string(r.n_nodes) + ".txt"),
                   s);
    }

    std::string theory_dat = "# m gamma\n";
    plot::Series theory_series;
    theory_series.label = "theory";
    theory_series.line = true;
    theory_series.line_width = 3.0;
    theory_series.marker = plot::Marker::None;
    for (const auto& r : table.rows) {
        if (r.n_nodes != config.n_values.front()) continue;
        theory_dat += fmt_num(r.m) + " " + fmt_num(r.theory_gamma) + "\n";
        theory_series.x.push_back(static_cast<double>(r.m));
        theory_series.y.push_back(r.theory_gamma);
    }
    write_file(dir / "figure1_theory.dat", theory_dat);

    plot::Chart chart;
    chart.title = "Exponent estimates vs theory";
    chart.xlabel = "m";
    chart.ylabel = "gamma";
    chart.series.push_back(theory_series);
    for (std::size_t ni = 0; ni < config.n_values.size(); ++ni) {
        const std::int64_t n = config.n_values[ni];
        std::string dat = "# m mean std\n";
        plot::Series s;
        s.label = "N=" + std::to_string(n);
        s.color = size_color(ni);
        for (const auto& r : table.rows) {
            if (r.n_nodes != n) continue;
            dat += fmt_num(r.m) + " " + fmt_num(r.mean_gamma) + " " + fmt_num(r.std_gamma) + "\n";
            s.x.push_back(static_cast<double>(r.m));
            s.y.push_back(r.mean_gamma);
            s.yerr.push_back(r.std_gamma);
        }
        write_file(dir / ("figure1_N" + std::to_string(n) + ".dat"), dat);
        chart.series.push_back(std::move(s));
    }
    if (config.write_svg) write_file(dir / "figure1.svg", plot::render_svg(chart));
    return table;
}

FitPanel compute_fit_panel(const ExperimentConfig& config) {
    config.validate();
    FitPanel panel;
    panel.solutions = gamma_curve(config.m_values);
    for (const auto& s : panel.solutions) {
        if (s.m >= 1 && static_cast<double>(s.m) <= kFitRangeMax) {
            panel.fitted_points.push_back({static_cast<double>(s.m), s.gamma});
        }
    }
    if (panel.fitted_points.size() < 5) {
        panel.warnings.push_back("only " + std::to_string(panel.fitted_points.size()) +
                                 " points in the fit range m in [1, 10]; parameters are poorly "
                                 "constrained");
    }
    panel.fit = fit_ansatz(panel.fitted_points);

    const double half_width = 1.96 * panel.fit.alpha_stderr;
    panel.alpha_text_value_in_ci = std::fabs(kAlphaTextValue - panel.fit.alpha) <= half_width;
    if (!panel.alpha_text_value_in_ci) {
        panel.warnings.push_back("alternative alpha " + fmt_num(kAlphaTextValue) +
                                 " lies outside the 95% interval " + fmt_num(panel.fit.alpha) +
                                 " +- " + fmt_num(half_width));
    }
    return panel;
}

std::string fit_panel_json(const FitPanel& panel) {
    std::vector<double> ms, gammas;
    for (const auto& p : panel.fitted_points) {
        ms.push_back(p.m);
        gammas.push_back(p.gamma);
    }
    std::string warnings = "[";
    for (std::size_t i = 0; i < panel.warnings.size(); ++i) {
        if (i) warnings += ",";
        warnings += json_quote(panel.warnings[i]);
    }
    warnings += "]";
    return JsonObject()
        .num("alpha", panel.fit.alpha)
        .num("beta", panel.fit.beta)
        .num("alpha_stderr", panel.fit.alpha_stderr)
        .num("beta_stderr", panel.fit.beta_stderr)
        .num("rss", panel.fit.rss)
        .integer("iterations", static_cast<std::int64_t>(panel.fit.iterations))
        .nums("m", ms)
        .nums("gamma", gammas)
        .nums("residuals", panel.fit.residuals)
        .boolean("alpha_text_value_in_ci", panel.alpha_text_value_in_ci)
        .raw("warnings", warnings)
        .dump();
}

FitPanel run_fit_panel(const ExperimentConfig& config) {
    FitPanel panel = compute_fit_panel(config);
    const auto& dir = config.output_dir;
    std::filesystem::create_directories(dir);

    plot::Series stars;
    stars.label = "solver";
    stars.color = "#1f77b4";
    stars.marker = plot::Marker::Star;
    std::string points = "# m gamma\n";
    double m_max = 1.0;
    for (const auto& s : panel.solutions) {
        points += fmt_num(s.m) + " " + fmt_num(s.gamma) + "\n";
        stars.x.push_back(static_cast<double>(s.m));
        stars.y.push_back(s.gamma);
        m_max = std::max(m_max, static_cast<double>(s.m));
    }
    write_file(dir / "fit_panel_points.dat", points);

    // log-spaced samples from m = 1 to well beyond the data
    const double m_end = std::max(100.0, 10.0 * m_max);
    constexpr int kSamples = 200;
    plot::Series curve;
    curve.label = "fit";
    curve.color = "#d62728";
    curve.line = true;
    curve.marker = plot::Marker::None;
    std::string curve_dat = "# m gamma_hat\n";
    for (int i = 0; i < kSamples; ++i) {
        const double m = std::pow(m_end, static_cast<double>(i) / (kSamples - 1));
        const double g = eval_ansatz(m, panel.fit.alpha, panel.fit.beta);
        curve_dat += fmt_num(m) + " " + fmt_num(g) + "\n";
        curve.x.push_back(m);
        curve.y.push_back(g);
    }
    write_file(dir / "fit_panel_curve.dat", curve_dat);
    write_file(dir / "fit_panel.json", fit_panel_json(panel) + "\n");

    if (config.write_svg) {
        plot::Chart chart;
        chart.title = "gamma(m) and fitted curve";
        chart.xlabel = "m";
        chart.ylabel = "gamma";
        chart.log_x = true;
        chart.series.push_back(std::move(curve));
        chart.series.push_back(std::move(stars));
        write_file(dir / "fit_panel.svg", plot::render_svg(chart));
    }
    return panel;
}

} // namespace pagamma
