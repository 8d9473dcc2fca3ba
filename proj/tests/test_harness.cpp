#include "pagamma/errors.hpp"
#include "pagamma/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using namespace pagamma;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("pagamma_test_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("key=value config") {
    const auto cfg = parse_config(
        "# comment\n"
        "m_values = 1..3, 7\n"
        "n_values = 100,200\n"
        "realizations = 4   # trailing\n"
        "base_seed = 18446744073709551615\n"
        "output_dir = /tmp/x\n"
        "workers = 2\n"
        "svg = false\n");
    CHECK(cfg.m_values == std::vector<std::int64_t>{1, 2, 3, 7});
    CHECK(cfg.n_values == std::vector<std::int64_t>{100, 200});
    CHECK(cfg.realizations == 4);
    CHECK(cfg.base_seed == 18446744073709551615ULL);
    CHECK(cfg.output_dir == fs::path("/tmp/x"));
    CHECK(cfg.workers == 2);
    CHECK_FALSE(cfg.write_svg);
}

TEST_CASE("JSON config") {
    const auto cfg = parse_config(R"({"m_values": [2, 4], "n_values": [1000], "realizations": 3,
                                      "base_seed": 9, "output_dir": "out", "svg": true})");
    CHECK(cfg.m_values == std::vector<std::int64_t>{2, 4});
    CHECK(cfg.n_values == std::vector<std::int64_t>{1000});
    CHECK(cfg.realizations == 3);
    CHECK(cfg.base_seed == 9);
    CHECK(cfg.output_dir == fs::path("out"));
}

TEST_CASE("defaults match the published experiment") {
    const ExperimentConfig cfg;
    CHECK(cfg.m_values.size() == 10);
    CHECK(cfg.m_values.front() == 1);
    CHECK(cfg.m_values.back() == 10);
    CHECK(cfg.n_values == std::vector<std::int64_t>{1000, 10000, 100000});
    CHECK(cfg.realizations == 30);
}

TEST_CASE("config errors") {
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("realizations = many\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("m_values = 5..2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("{\"m_values\": [1.5]}"), ConfigError);
    CHECK_THROWS_AS(parse_config("{not json"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/pagamma.cfg"), ConfigError);

    ExperimentConfig cfg;
    cfg.m_values.clear();
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.realizations = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = {};
    cfg.n_values = {0};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}

TEST_CASE("replicate seeds are distinct over the default grid") {
    const ExperimentConfig cfg;
    std::set<std::uint64_t> seeds;
    std::size_t count = 0;
    for (const auto m : cfg.m_values) {
        for (const auto n : cfg.n_values) {
            for (std::int64_t r = 0; r < 1000; ++r) {
                seeds.insert(derive_seed(cfg.base_seed, m, n, r));
                ++count;
            }
        }
    }
    CHECK(seeds.size() == count);
    CHECK(derive_seed(1, 2, 3, 4) == derive_seed(1, 2, 3, 4));
    CHECK(derive_seed(1, 2, 3, 4) != derive_seed(2, 2, 3, 4));
}

TEST_CASE("run_figure1 on a tiny config") {
    ExperimentConfig cfg;
    cfg.m_values = {1};
    cfg.n_values = {100};
    cfg.realizations = 2;
    cfg.output_dir = scratch("tiny");
    const ExperimentTable t = run_figure1(cfg);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].realizations == 2);
    CHECK(t.rows[0].gamma_hats.size() == 2);
    CHECK(t.rows[0].std_gamma >= 0.0);
    CHECK(t.rows[0].theory_gamma == solve_gamma(1).gamma);

    const std::string csv = slurp(cfg.output_dir / "figure1.csv");
    CHECK(csv.rfind("m,N,mean_gamma,std_gamma,theory_gamma,realizations\n", 0) == 0);
    CHECK(fs::exists(cfg.output_dir / "replicates" / "gamma_m1_N100.txt"));
    CHECK(fs::exists(cfg.output_dir / "figure1_theory.dat"));
    CHECK(fs::exists(cfg.output_dir / "figure1_N100.dat"));
    CHECK(fs::exists(cfg.output_dir / "figure1.svg"));
    CHECK(slurp(cfg.output_dir / "figure1.svg").find("<svg") == 0);
}

TEST_CASE("figure1 table shape, statistics and determinism across worker counts") {
    ExperimentConfig cfg;
    cfg.m_values = {1, 2, 5};
    cfg.n_values = {200, 2000};
    cfg.realizations = 6;
    cfg.write_svg = false;
    cfg.output_dir = scratch("det_a");
    cfg.workers = 1;
    const ExperimentTable a = run_figure1(cfg);

    CHECK(a.rows.size() == 6);
    for (const auto& r : a.rows) {
        CHECK(r.std_gamma >= 0.0);
        CHECK(r.theory_gamma > 2.0);
        CHECK(r.theory_gamma < 3.0);
        CHECK(r.mean_gamma > 1.5);
        CHECK(r.mean_gamma < 3.5);
        double sum = 0.0;
        for (const double g : r.gamma_hats) sum += g;
        CHECK(r.mean_gamma == doctest::Approx(sum / 6.0).epsilon(1e-14));
    }
    // rows are m-major
    CHECK(a.rows[0].m == 1);
    CHECK(a.rows[1].m == 1);
    CHECK(a.rows[1].n_nodes == 2000);
    CHECK(a.rows[2].m == 2);

    ExperimentConfig cfg_b = cfg;
    cfg_b.workers = 4;
    cfg_b.output_dir = scratch("det_b");
    run_figure1(cfg_b);
    CHECK(slurp(cfg.output_dir / "figure1.csv") == slurp(cfg_b.output_dir / "figure1.csv"));
    CHECK(slurp(cfg.output_dir / "replicates" / "gamma_m5_N2000.txt") ==
          slurp(cfg_b.output_dir / "replicates" / "gamma_m5_N2000.txt"));

    // per-replicate file holds one value per replicate
    std::istringstream in(slurp(cfg.output_dir / "replicates" / "gamma_m2_N200.txt"));
    int lines = 0;
    for (std::string l; std::getline(in, l);) ++lines;
    CHECK(lines == 6);

    ExperimentConfig cfg_c = cfg;
    cfg_c.base_seed = 2;
    CHECK(figure1_csv(compute_figure1(cfg_c)) != figure1_csv(a));
}

TEST_CASE("single realization has zero spread") {
    ExperimentConfig cfg;
    cfg.m_values = {3};
    cfg.n_values = {500};
    cfg.realizations = 1;
    const auto t = compute_figure1(cfg);
    CHECK(t.rows[0].std_gamma == 0.0);
}

TEST_CASE("figure1 errors name the failing task") {
    ExperimentConfig cfg;
    cfg.m_values = {5};
    cfg.n_values = {6};  // needs N >= m + 2
    cfg.realizations = 2;
    try {
        compute_figure1(cfg);
        FAIL("expected an error");
    } catch (const ExperimentError& e) {
        const std::string what = e.what();
        CHECK(what.find("m=5") != std::string::npos);
        CHECK(what.find("N=6") != std::string::npos);
        CHECK(what.find("replicate=0") != std::string::npos);
        CHECK(e.kind() == "invalid_params");
    }
}

TEST_CASE("fit panel with the default m range") {
    ExperimentConfig cfg;
    cfg.output_dir = scratch("panel");
    const FitPanel p = run_fit_panel(cfg);
    CHECK(std::fabs(p.fit.alpha - 0.9205) <= 0.01);
    CHECK(std::fabs(p.fit.beta - 0.9932) <= 0.01);
    CHECK(p.fitted_points.size() == 10);
    CHECK(p.alpha_text_value_in_ci);
    CHECK(p.warnings.empty());
    CHECK(fs::exists(cfg.output_dir / "fit_panel_points.dat"));
    CHECK(fs::exists(cfg.output_dir / "fit_panel_curve.dat"));
    CHECK(fs::exists(cfg.output_dir / "fit_panel.json"));
    CHECK(fs::exists(cfg.output_dir / "fit_panel.svg"));
    CHECK(slurp(cfg.output_dir / "fit_panel.json").find("\"alpha\":0.92") != std::string::npos);
}

TEST_CASE("fit panel extrapolates past the fit range") {
    ExperimentConfig cfg;
    cfg.m_values = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100};
    const FitPanel p = compute_fit_panel(cfg);
    CHECK(p.solutions.size() == 13);
    CHECK(p.fitted_points.size() == 10);
    for (const auto& s : p.solutions) {
        CHECK(std::fabs(eval_ansatz(double(s.m), p.fit.alpha, p.fit.beta) - s.gamma) <= 0.01);
    }
}

TEST_CASE("fit panel boundaries") {
    ExperimentConfig cfg;
    cfg.m_values = {1, 2, 3};
    const FitPanel p = compute_fit_panel(cfg);
    CHECK(p.fitted_points.size() == 3);
    CHECK_FALSE(p.warnings.empty());

    cfg.m_values = {};
    CHECK_THROWS_AS(compute_fit_panel(cfg), ConfigError);

    cfg.m_values = {20, 30, 40};  // nothing inside [1, 10]
    CHECK_THROWS_AS(compute_fit_panel(cfg), InsufficientPoints);
}
