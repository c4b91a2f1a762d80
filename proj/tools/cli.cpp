#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracsl/fracsl.hpp"

namespace fracsl::cli {

namespace {

std::string fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

std::string shortest(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

ProbeFraction parse_probe(const std::string& item) {
    const auto slash = item.find('/');
    if (slash != std::string::npos) {
        long num = 0, den = 0;
        auto r1 = std::from_chars(item.data(), item.data() + slash, num);
        auto r2 = std::from_chars(item.data() + slash + 1, item.data() + item.size(), den);
        if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != item.data() + slash ||
            r2.ptr != item.data() + item.size())
            throw std::domain_error("bad probe fraction '" + item + "'");
        return ProbeFraction(num, den);
    }
    double value = 0.0;
    auto r = std::from_chars(item.data(), item.data() + item.size(), value);
    if (r.ec != std::errc{} || r.ptr != item.data() + item.size())
        throw std::domain_error("bad probe '" + item + "'");
    // decimal probes become exact rationals over a power of ten
    const long long den = 1000000000LL;
    const long long num = std::llround(value * static_cast<double>(den));
    return ProbeFraction(static_cast<long>(num), static_cast<long>(den));
}

std::string probe_label(const ProbeFraction& p) {
    return std::to_string(p.num) + "/" + std::to_string(p.den);
}

nlohmann::json config_json(const RunConfig& cfg) {
    nlohmann::json j{
        {"mode", cfg.mode == Mode::solve   ? "solve"
                 : cfg.mode == Mode::study ? "study"
                                           : "validate"},
        {"alpha", cfg.alpha},
        {"lambda", cfg.lambda},
        {"q", cfg.q_text},
        {"b", cfg.b},
        {"L", cfg.boundary_value},
        {"format", cfg.format == Format::csv ? "csv" : "json"},
        {"precision", cfg.precision},
    };
    if (cfg.mode == Mode::solve) j["n"] = cfg.intervals;
    if (cfg.mode == Mode::study) {
        j["n_list"] = cfg.n_list;
        auto probes = nlohmann::json::array();
        for (const auto& p : cfg.probes) probes.push_back(probe_label(p));
        j["probes"] = probes;
    }
    return j;
}

nlohmann::json grid_json(const UniformGrid& grid) {
    return {{"intervals", grid.intervals()},
            {"length", grid.length()},
            {"step", grid.step()}};
}

}  // namespace

ProblemSpec to_problem(const RunConfig& cfg) {
    auto parsed = parse_potential(cfg.q_text);
    if (!parsed)
        throw std::domain_error("cannot parse q at byte " +
                                std::to_string(parsed.error().offset) + ": " +
                                parsed.error().message);
    return make_problem(cfg.alpha, cfg.lambda, parsed.value(), cfg.b, cfg.boundary_value);
}

std::vector<ProbeFraction> parse_probes(const std::string& text) {
    std::vector<ProbeFraction> probes;
    for (const auto& item : split(text, ','))
        if (!item.empty()) probes.push_back(parse_probe(item));
    if (probes.empty()) throw std::domain_error("no probes given");
    return probes;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> ns;
    for (const auto& item : split(text, ',')) {
        if (item.empty()) continue;
        std::size_t n = 0;
        auto r = std::from_chars(item.data(), item.data() + item.size(), n);
        if (r.ec != std::errc{} || r.ptr != item.data() + item.size())
            throw std::domain_error("bad interval count '" + item + "'");
        ns.push_back(n);
    }
    if (ns.empty()) throw std::domain_error("empty n list");
    return ns;
}

void write_solve_csv(std::ostream& out, const Solution& sol, int precision) {
    out << "t,f\n";
    for (std::size_t i = 0; i < sol.values.size(); ++i)
        out << fixed(sol.grid.node(i), precision) << ',' << fixed(sol.values[i], precision)
            << '\n';
}

void write_solve_json(std::ostream& out, const RunConfig& cfg, const Solution& sol) {
    nlohmann::json j{{"config", config_json(cfg)},
                     {"grid", grid_json(sol.grid)},
                     {"values", sol.values}};
    out << j.dump(2) << '\n';
}

void write_study_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records,
                     int precision) {
    out << "dt,probe,f,p\n";
    for (const auto& rec : records) {
        for (std::size_t l = 0; l < rec.ladder.size(); ++l) {
            out << shortest(rec.ladder[l].dt) << ',' << shortest(rec.probe.value()) << ','
                << fixed(rec.ladder[l].value, precision) << ',';
            // the rate beside dt uses the 2dt / dt / dt/2 levels, so the
            // first and last rows have no rate
            if (l >= 1 && l + 1 < rec.ladder.size()) out << fixed(rec.rates[l - 1], 2);
            out << '\n';
        }
    }
}

void write_study_json(std::ostream& out, const RunConfig& cfg, const Solution& finest,
                      const std::vector<ConvergenceRecord>& records) {
    auto ladders = nlohmann::json::array();
    for (const auto& rec : records) {
        auto levels = nlohmann::json::array();
        for (const auto& level : rec.ladder)
            levels.push_back({{"intervals", level.intervals},
                              {"dt", level.dt},
                              {"f", level.value}});
        ladders.push_back({{"probe", probe_label(rec.probe)},
                           {"probe_value", rec.probe.value()},
                           {"levels", levels},
                           {"ratios", rec.ratios},
                           {"rates", rec.rates}});
    }
    nlohmann::json j{{"config", config_json(cfg)},
                     {"grid", grid_json(finest.grid)},
                     {"values", finest.values},
                     {"ladders", ladders}};
    out << j.dump(2) << '\n';
}

namespace {

struct CheckReport {
    bool all_passed = true;

    void line(std::ostream& out, const std::string& name, bool passed,
              const std::string& detail = {}) {
        out << name << ": " << (passed ? "PASS" : "FAIL");
        if (!detail.empty()) out << " (" << detail << ")";
        out << '\n';
        all_passed = all_passed && passed;
    }
};

}  // namespace

int run_validate(const RunConfig& cfg, std::ostream& out) {
    const double alpha = cfg.alpha;
    const std::size_t n = cfg.intervals == 0 ? 64 : cfg.intervals;
    const auto grid = make_grid(n, cfg.b);
    const auto ws = WeightSet::build(alpha, grid);
    CheckReport report;

    {
        bool ok = grid.node(0) == 0.0 && grid.node(n) == cfg.b;
        report.line(out, "grid_endpoints", ok);
    }
    {
        double lowest = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            for (double w : ws.left_row(i)) lowest = std::min(lowest, w);
        for (std::size_t k = 0; k <= n; ++k)
            for (double v : ws.right_column(k)) lowest = std::min(lowest, v);
        report.line(out, "weight_nonnegativity", lowest >= 0.0,
                    "min = " + shortest(lowest));
    }
    {
        double worst = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            long double sum = 0.0L;
            for (double w : ws.left_row(i)) sum += w;
            const double closed = 2.0 * ws.scale() * index_power(i, alpha);
            worst = std::max(worst, std::abs(static_cast<double>(sum) - closed) /
                                        std::max(closed, 1e-300));
        }
        report.line(out, "weight_row_sum", worst <= 1e-15, "rel = " + shortest(worst));
    }
    {
        bool mirror = true;
        for (std::size_t i = 0; i <= n && mirror; ++i)
            for (std::size_t j = i; j <= n; ++j)
                if (ws.right(i, j) != ws.left(n - i, n - j)) {
                    mirror = false;
                    break;
                }
        report.line(out, "weight_mirror", mirror);
    }
    {
        auto classic = WeightSet::build(1.0, grid);
        bool exact = true;
        const double half = grid.step() / 2.0;
        for (std::size_t i = 1; i <= n && exact; ++i) {
            if (classic.left(i, 0) != half || classic.left(i, i) != half) exact = false;
            for (std::size_t j = 1; j < i; ++j)
                if (classic.left(i, j) != grid.step()) exact = false;
        }
        report.line(out, "alpha_one_trapezoid", exact);
    }

    const auto composition = composition_matrix(ws);
    {
        bool zero = true;
        for (std::size_t k = 0; k <= n; ++k) zero = zero && composition(0, k) == 0.0;
        report.line(out, "composition_zero_row", zero);
    }
    {
        std::vector<double> phi(grid.point_count());
        for (std::size_t i = 0; i <= n; ++i) phi[i] = std::cos(7.0 * grid.node(i));
        auto nested = apply_left_integral(apply_right_integral(phi, ws), ws);
        auto direct = composition.apply(phi);
        double worst = 0.0, norm = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            worst = std::max(worst, std::abs(nested[i] - direct[i]));
            norm = std::max(norm, std::abs(phi[i]));
        }
        report.line(out, "composition_vs_nested",
                    worst <= 1e-12 * norm * static_cast<double>(n),
                    "max diff = " + shortest(worst));
    }
    {
        std::vector<double> ones(grid.point_count(), 1.0);
        auto g = apply_left_integral(ones, ws);
        double worst = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            const double closed = 2.0 * ws.scale() * index_power(i, alpha);
            worst = std::max(worst, std::abs(g[i] - closed));
        }
        report.line(out, "left_integral_constant", worst <= 1e-12,
                    "max diff = " + shortest(worst));
    }
    {
        const double got = direct_left_integral([](double) { return 1.0; }, alpha, cfg.b,
                                                OracleConfig{8 * n});
        const double closed = std::pow(cfg.b, alpha) / std::tgamma(1.0 + alpha);
        report.line(out, "oracle_constant", std::abs(got - closed) <= 1e-8,
                    "diff = " + shortest(std::abs(got - closed)));
    }
    {
        // product-rule error on a smooth integrand is O(dt^{1+alpha})
        std::vector<double> phi(grid.point_count());
        for (std::size_t i = 0; i <= n; ++i) phi[i] = std::cos(3.0 * grid.node(i));
        auto g = apply_left_integral(phi, ws);
        double worst = 0.0;
        OracleConfig oracle_cfg{std::max<std::size_t>(8 * n, 2048)};
        for (std::size_t i = 1; i <= n; ++i) {
            const double ref = direct_left_integral(
                [](double x) { return std::cos(3.0 * x); }, alpha, grid.node(i), oracle_cfg);
            worst = std::max(worst, std::abs(g[i] - ref));
        }
        const double bound = 3.0 * std::pow(grid.step(), 1.0 + alpha);
        report.line(out, "discrete_vs_oracle", worst <= bound,
                    "max diff = " + shortest(worst) + ", bound = " + shortest(bound));
    }
    {
        auto spec = make_problem(alpha, 0.0, PotentialExpr::constant(0.0), cfg.b,
                                 cfg.boundary_value);
        auto sol = solve_bvp(spec, n);
        double worst = 0.0;
        for (std::size_t i = 0; i <= n; ++i)
            worst = std::max(worst,
                             std::abs(sol.values[i] - power_law_solution(
                                                          alpha, cfg.b, cfg.boundary_value,
                                                          sol.grid.node(i))));
        report.line(out, "power_law_solve", worst <= 1e-12, "max err = " + shortest(worst));
    }
    if (cfg.lambda < 0.0) {
        // throws ResonantLambdaError out of run() when lambda is resonant
        auto spec = make_problem(1.0, cfg.lambda, PotentialExpr::constant(0.0), cfg.b,
                                 cfg.boundary_value);
        double errs[2] = {0.0, 0.0};
        std::size_t idx = 0;
        for (std::size_t levels : {n, 2 * n}) {
            auto sol = solve_bvp(spec, levels);
            double err = 0.0;
            for (std::size_t i = 0; i <= levels; ++i)
                err = std::max(err, std::abs(sol.values[i] -
                                             analytic_alpha1(cfg.lambda, cfg.b,
                                                             cfg.boundary_value,
                                                             sol.grid.node(i))));
            errs[idx++] = err;
        }
        const double ratio = errs[0] / errs[1];
        report.line(out, "classical_sine_solve", ratio > 3.0 && ratio < 5.0,
                    "error ratio per doubling = " + shortest(ratio));
    } else {
        report.line(out, "classical_sine_solve", true, "skipped: lambda >= 0");
    }

    return report.all_passed ? 0 : 2;
}

namespace {

std::ostream& select_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.output_path.empty()) return std::cout;
    file.open(cfg.output_path, std::ios::binary);
    if (!file) throw std::domain_error("cannot open output file '" + cfg.output_path + "'");
    return file;
}

int dispatch(const RunConfig& cfg) {
    std::ofstream file;
    std::ostream& out = select_output(cfg, file);

    switch (cfg.mode) {
        case Mode::solve: {
            auto sol = solve_bvp(to_problem(cfg), cfg.intervals);
            if (cfg.format == Format::csv)
                write_solve_csv(out, sol, cfg.precision);
            else
                write_solve_json(out, cfg, sol);
            break;
        }
        case Mode::study: {
            auto spec = to_problem(cfg);
            auto records = run_study(spec, cfg.n_list, cfg.probes);
            if (cfg.format == Format::csv) {
                write_study_csv(out, records, cfg.precision);
            } else {
                auto finest = solve_bvp(spec, cfg.n_list.back());
                write_study_json(out, cfg, finest, records);
            }
            break;
        }
        case Mode::validate:
            return run_validate(cfg, out);
    }
    out.flush();
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
    RunConfig cfg;
    std::string format_text = "csv";
    std::string probes_text = "1/4,1/2,3/4";
    std::string n_list_text;

    CLI::App app{"fractional Sturm-Liouville boundary-value solver"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool require_problem) {
        auto* a = cmd->add_option("--alpha", cfg.alpha, "fractional order in (0, 1]");
        auto* l = cmd->add_option("--lambda", cfg.lambda, "spectral parameter");
        if (require_problem) {
            a->required();
            l->required();
        } else {
            a->capture_default_str();
            l->capture_default_str();
        }
        cmd->add_option("--b", cfg.b, "domain length")->capture_default_str();
        cmd->add_option("--L", cfg.boundary_value, "right boundary value f(b)")
            ->capture_default_str();
        cmd->add_option("--output,-o", cfg.output_path, "output file (default: stdout)");
        cmd->add_option("--precision", cfg.precision, "printed decimal places")
            ->check(CLI::Range(0, 17))
            ->capture_default_str();
    };

    auto* solve = app.add_subcommand("solve", "solve one problem and emit t,f");
    add_common(solve, true);
    solve->add_option("--q", cfg.q_text, "potential q(t)")->capture_default_str();
    solve->add_option("--n", cfg.intervals, "subinterval count")->required();
    solve->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* study = app.add_subcommand("study", "grid-refinement convergence study");
    add_common(study, true);
    study->add_option("--q", cfg.q_text, "potential q(t)")->capture_default_str();
    study->add_option("--n-list", n_list_text, "doubling subinterval counts, e.g. 256,512,1024")
        ->required();
    study->add_option("--probes", probes_text, "probe fractions of the domain")
        ->capture_default_str();
    study->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    auto* validate = app.add_subcommand("validate", "run operator and solver spot checks");
    add_common(validate, false);
    validate->add_option("--n", cfg.intervals, "grid size for the checks (default 64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (solve->parsed()) cfg.mode = Mode::solve;
        if (study->parsed()) {
            cfg.mode = Mode::study;
            cfg.n_list = parse_n_list(n_list_text);
            cfg.probes = parse_probes(probes_text);
        }
        if (validate->parsed()) cfg.mode = Mode::validate;
        cfg.format = format_text == "json" ? Format::json : Format::csv;
        return dispatch(cfg);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace fracsl::cli
