// Copyright 2026 The jwmsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <variant>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "jwm/errors.h"
#include "jwm/measurement.h"
#include "jwm/oracle.h"
#include "jwm/predictability.h"
#include "jwm/wigner.h"

namespace jwm::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr const char *kWignerSchema = "jwmsim.wigner/1";
constexpr const char *kMarginalsSchema = "jwmsim.marginals/1";
constexpr const char *kPredictabilitySchema = "jwmsim.predictability/1";
constexpr const char *kAvgPredictabilitySchema = "jwmsim.avg_predictability/1";
constexpr const char *kVariancesSchema = "jwmsim.variances/1";
constexpr const char *kDiracSchema = "jwmsim.dirac/1";

using Target = std::variant<double *, int *, std::string *, std::uint64_t *, std::vector<double> *>;

// One long flag; the same name is the key in a JSON config file.
struct Key {
    std::string name;
    Target target;
    CLI::Option *option = nullptr;
    bool from_file = false;

    bool explicitly_set() const {
        return from_file || (option != nullptr && option->count() > 0);
    }
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ConfigError:
        case ErrorCode::IoError:
        case ErrorCode::InvalidGrid:
        case ErrorCode::InvalidWidth:
        case ErrorCode::DomainError:
            return kExitUsage;
        default:
            return kExitRegime;
    }
}

std::string num(double v) {
    return fmt::format("{:.17g}", v);
}

ojson config_json(const RunConfig &rc) {
    ojson j;
    j["gamma"] = rc.gamma;
    j["sigma"] = rc.sigma;
    j["sigma-x"] = rc.sigma_x;
    j["sigma-p"] = rc.sigma_p;
    j["x-probe"] = rc.x_probe;
    j["p-probe"] = rc.p_probe;
    j["q-reading"] = rc.q_reading;
    j["grid-n"] = rc.grid_n;
    j["grid-span"] = rc.grid_span;
    j["out"] = rc.out;
    j["psi-center"] = rc.psi_center;
    j["psi-width"] = rc.psi_width;
    j["psi-momentum"] = rc.psi_momentum;
    j["gamma-over-sigma"] = rc.gamma_over_sigma;
    j["sweep-n"] = rc.sweep_n;
    j["lattice-n"] = rc.lattice_n;
    j["lattice-span"] = rc.lattice_span;
    j["seed"] = rc.seed;
    j["random-draws"] = rc.random_draws;
    j["dirac-gamma-over-sigma"] = rc.dirac_gamma_over_sigma;
    j["dirac-sigma"] = rc.dirac_sigma;
    return j;
}

PointerConfig pointer_of(const RunConfig &rc) {
    return {rc.gamma, rc.sigma};
}

ProbeConfig probe_of(const RunConfig &rc) {
    return {rc.x_probe, rc.p_probe, rc.sigma_x, rc.sigma_p};
}

std::filesystem::path output_file(const RunConfig &rc, const std::string &name) {
    std::error_code ec;
    std::filesystem::create_directories(rc.out, ec);
    if (ec) {
        fail(ErrorCode::IoError, fmt::format("cannot create output directory '{}': {}", rc.out, ec.message()));
    }
    return std::filesystem::path(rc.out) / name;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        fail(ErrorCode::IoError, fmt::format("cannot write '{}'", path.string()));
    }
    f << text;
    if (!f) {
        fail(ErrorCode::IoError, fmt::format("write to '{}' failed", path.string()));
    }
}

// CSV files carry the schema and resolved config as leading '#' lines.
std::string csv_header(const char *schema, const RunConfig &rc, const std::vector<std::string> &columns) {
    std::string s = fmt::format("# schema: {}\n# config: {}\n", schema, config_json(rc).dump());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        s += (i == 0 ? "" : ",") + columns[i];
    }
    return s + "\n";
}

void csv_row(std::string &s, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) {
            s += ',';
        }
        s += num(v);
        first = false;
    }
    s += '\n';
}

ojson grid_json(const Grid1D &g) {
    ojson j;
    j["n"] = g.size();
    j["lo"] = g.lo();
    j["hi"] = g.hi();
    j["step"] = g.step();
    return j;
}

Grid1D display_grid(const RunConfig &rc) {
    return Grid1D::symmetric(static_cast<std::size_t>(rc.grid_n), rc.grid_span);
}

void cmd_figure1(const RunConfig &rc, std::ostream &out) {
    const PointerConfig cfg = pointer_of(rc);
    const ProbeConfig probe = probe_of(rc);
    const Grid1D grid = display_grid(rc);
    const WignerField field = jwm_wigner_closed(rc.q_reading, cfg, probe, grid, grid);
    const Marginals m = marginals_closed(rc.q_reading, cfg, probe, grid, grid);
    const double weight = std::pow(pointer_amplitude(rc.q_reading, rc.sigma), 2);

    std::size_t peak = 0;
    for (std::size_t k = 1; k < field.values.size(); ++k) {
        if (field.values[k] > field.values[peak]) {
            peak = k;
        }
    }
    ojson j;
    j["schema"] = kWignerSchema;
    j["config"] = config_json(rc);
    j["scale"] = weight;
    j["predictability"] = predictability_weak(rc.q_reading, cfg);
    j["x_grid"] = grid_json(field.x_grid);
    j["p_grid"] = grid_json(field.p_grid);
    j["min"] = field.min();
    j["max"] = field.max();
    j["argmax"] = {field.x_grid[peak / grid.size()], field.p_grid[peak % grid.size()]};
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        rows.push_back(std::vector<double>(field.values.begin() + static_cast<std::ptrdiff_t>(i * grid.size()),
                                           field.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * grid.size())));
    }
    j["values"] = std::move(rows);
    const auto wpath = output_file(rc, "wigner.json");
    write_text(wpath, j.dump() + "\n");

    // Marginals share the field's scale so that they equal its integrals.
    std::string csv = csv_header(kMarginalsSchema, rc, {"u", "Px", "Pp"});
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv_row(csv, {grid[i], weight * m.px[i], weight * m.pp[i]});
    }
    const auto mpath = output_file(rc, "marginals.csv");
    write_text(mpath, csv);
    out << fmt::format("wrote {} (min {:.6g}, max {:.6g})\nwrote {}\n", wpath.string(), field.min(), field.max(),
                       mpath.string());
}

void cmd_figure2(const RunConfig &rc, std::ostream &out) {
    const PointerConfig cfg = pointer_of(rc);
    cfg.validate();
    std::string a = csv_header(kPredictabilitySchema, rc,
                               {"q", "p_exact", "abs_p_exact", "density_hit", "density_miss"});
    for (double q : lattice_axis(static_cast<std::size_t>(rc.grid_n) + 1, -rc.grid_span * rc.sigma,
                                 rc.grid_span * rc.sigma)) {
        const double p = predictability_exact(q, cfg);
        csv_row(a, {q, p, std::abs(p), density_hit(cfg, q), density_miss(cfg, q)});
    }
    const auto apath = output_file(rc, "predictability.csv");
    write_text(apath, a);

    std::string b = csv_header(kAvgPredictabilitySchema, rc, {"gamma_over_sigma", "avg_predictability", "weak_limit"});
    for (double t : rc.gamma_over_sigma) {
        if (!(t >= 0.0)) {
            fail(ErrorCode::DomainError, fmt::format("gamma-over-sigma entry {} must be non-negative", t));
        }
        csv_row(b, {t, average_predictability({t * rc.sigma, rc.sigma}), t / std::sqrt(kPi)});
    }
    const auto bpath = output_file(rc, "avg_predictability.csv");
    write_text(bpath, b);
    out << fmt::format("wrote {}\nwrote {}\n", apath.string(), bpath.string());
}

void cmd_variances(const RunConfig &rc, std::ostream &out) {
    const PointerConfig cfg = pointer_of(rc);
    if (rc.sweep_n < 1) {
        fail(ErrorCode::DomainError, "sweep-n must be positive");
    }
    std::string csv = csv_header(kVariancesSchema, rc,
                                 {"sigma_x", "sigma_p", "P", "var_x", "var_p", "product", "avg_var_x", "avg_var_p",
                                  "avg_product"});
    const auto n = static_cast<std::size_t>(rc.sweep_n);
    for (double sp : lattice_axis(n, 0.05, 0.5)) {
        const ProbeConfig probe{0.0, 0.0, rc.sigma_x, sp};
        const VariancePair avg = averaged_variances(cfg, probe);
        for (double pred : lattice_axis(n, 0.0, 1.0)) {
            const VariancePair v = single_trial_variances_at(pred, probe);
            csv_row(csv, {rc.sigma_x, sp, pred, v.var_x, v.var_p, v.product(), avg.var_x, avg.var_p, avg.product()});
        }
    }
    const auto path = output_file(rc, "variances.csv");
    write_text(path, csv);
    out << fmt::format("wrote {}\n", path.string());
}

struct ScanPoint {
    double x;
    double p;
    double re_dirac;
    double analytic;
    double shift;
};

std::vector<ScanPoint> scan(const RunConfig &rc, const GaussianSpec &psi_spec, double gamma) {
    const PointerConfig cfg{gamma, rc.sigma};
    const auto n = static_cast<std::size_t>(rc.lattice_n);
    std::vector<ScanPoint> pts;
    for (double x : lattice_axis(n, psi_spec.center - rc.lattice_span, psi_spec.center + rc.lattice_span)) {
        for (double p : lattice_axis(n, psi_spec.phase_momentum - rc.lattice_span,
                                     psi_spec.phase_momentum + rc.lattice_span)) {
            const ProbeConfig probe{x, p, rc.sigma_x, rc.sigma_p};
            const double reach = std::max(std::abs(psi_spec.center) + 8.0 * psi_spec.width, std::abs(x) + 1.0);
            const WaveFunction1D psi = sample_gaussian(psi_spec, system_grid_for(probe, reach));
            pts.push_back({x, p, oracle::dirac_gaussian(psi_spec, x, p).real(),
                           oracle::dirac_readout_analytic(psi_spec, probe), mean_pointer_shift(psi, cfg, probe) / gamma});
        }
    }
    return pts;
}

// Relative error with the denominator floored at 1e-3 of the lattice peak, so
// points deep in the tail (both columns ~ 0) stay finite.
std::vector<double> scan_errors(const std::vector<ScanPoint> &pts) {
    double peak = 0.0;
    for (const ScanPoint &s : pts) {
        peak = std::max(peak, std::abs(s.analytic));
    }
    std::vector<double> err;
    for (const ScanPoint &s : pts) {
        err.push_back(std::abs(s.shift - s.analytic) / std::max(std::abs(s.analytic), 1e-3 * peak));
    }
    return err;
}

void cmd_dirac_scan(const RunConfig &rc, std::ostream &out) {
    if (rc.lattice_n < 1) {
        fail(ErrorCode::DomainError, "lattice-n must be positive");
    }
    const GaussianSpec psi_spec{rc.psi_center, rc.psi_width, rc.psi_momentum};
    if (!(psi_spec.width > 0.0)) {
        fail(ErrorCode::InvalidWidth, fmt::format("psi-width = {} must be positive", rc.psi_width));
    }
    const std::vector<ScanPoint> pts = scan(rc, psi_spec, rc.gamma);
    const std::vector<ScanPoint> half = scan(rc, psi_spec, 0.5 * rc.gamma);
    const std::vector<double> err = scan_errors(pts);
    const std::vector<double> err_half = scan_errors(half);
    const double worst = *std::max_element(err.begin(), err.end());
    const double worst_half = *std::max_element(err_half.begin(), err_half.end());

    ojson j;
    j["schema"] = kDiracSchema;
    j["config"] = config_json(rc);
    j["sigma_x"] = rc.sigma_x;
    j["sigma_p"] = rc.sigma_p;
    j["gamma_over_sigma"] = rc.gamma / rc.sigma;
    j["narrow_limit_factor"] = 2.0 * kDiracTotal * rc.sigma_x * rc.sigma_p;
    j["max_rel_error"] = worst;
    j["max_rel_error_half_gamma"] = worst_half;
    j["error_ratio_half_gamma"] = worst / worst_half;
    ojson lattice = ojson::array();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        ojson e;
        e["x"] = pts[k].x;
        e["p"] = pts[k].p;
        e["re_dirac"] = pts[k].re_dirac;
        e["overlap_analytic"] = pts[k].analytic;
        e["q_shift_over_gamma"] = pts[k].shift;
        e["rel_error"] = err[k];
        lattice.push_back(std::move(e));
    }
    j["lattice"] = std::move(lattice);
    const auto path = output_file(rc, "dirac.json");
    write_text(path, j.dump(2) + "\n");
    out << fmt::format("wrote {} (max relative error {:.3g}, {:.3g} at half gamma)\n", path.string(), worst,
                       worst_half);
}

int cmd_verify(const RunConfig &rc, std::ostream &out) {
    ojson j;
    j["seed"] = rc.seed;
    j["gamma"] = rc.gamma;
    j["sigma"] = rc.sigma;
    j["sigma-x"] = rc.sigma_x;
    j["sigma-p"] = rc.sigma_p;
    j["x-probe"] = rc.x_probe;
    j["p-probe"] = rc.p_probe;
    j["q-reading"] = rc.q_reading;
    j["dirac-gamma-over-sigma"] = rc.dirac_gamma_over_sigma;
    j["dirac-sigma"] = rc.dirac_sigma;
    j["random-draws"] = rc.random_draws;
    const std::vector<oracle::CheckResult> results = oracle::run_suite(oracle::parse_config(j.dump()));
    const auto path = output_file(rc, "oracle_report.json");
    oracle::write_report(results, path.string());

    std::size_t passed = 0;
    out << fmt::format("{:<36} {:>14} {:>14} {:>11}  {}\n", "check", "observed", "expected", "tolerance", "status");
    for (const oracle::CheckResult &r : results) {
        passed += r.passed ? 1 : 0;
        out << fmt::format("{:<36} {:>14.7g} {:>14.7g} {:>11.3g}  {}{}\n", r.name, r.observed, r.expected,
                           r.tolerance, r.passed ? "PASS" : "FAIL", r.detail.empty() ? "" : "  (" + r.detail + ")");
    }
    out << fmt::format("{}/{} checks passed; report written to {}\n", passed, results.size(), path.string());
    return oracle::all_passed(results) ? kExitOk : kExitOracle;
}

void assign(const Key &key, const nlohmann::json &value) {
    const auto bad = [&](const char *what) {
        fail(ErrorCode::ConfigError, fmt::format("config key '{}' must be {}", key.name, what));
    };
    std::visit(
        [&](auto *dst) {
            using T = std::remove_pointer_t<decltype(dst)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!value.is_number()) bad("a number");
                *dst = value.get<double>();
            } else if constexpr (std::is_same_v<T, int>) {
                if (!value.is_number_integer()) bad("an integer");
                *dst = value.get<int>();
            } else if constexpr (std::is_same_v<T, std::uint64_t>) {
                if (!value.is_number_unsigned()) bad("a non-negative integer");
                *dst = value.get<std::uint64_t>();
            } else if constexpr (std::is_same_v<T, std::string>) {
                if (!value.is_string()) bad("a string");
                *dst = value.get<std::string>();
            } else {
                if (!value.is_array()) bad("an array of numbers");
                dst->clear();
                for (const auto &v : value) {
                    if (!v.is_number()) bad("an array of numbers");
                    dst->push_back(v.get<double>());
                }
            }
        },
        key.target);
}

void apply_config_file(const std::string &path, std::vector<Key> &keys) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::ConfigError, fmt::format("cannot read config file '{}'", path));
    }
    std::stringstream buf;
    buf << in.rdbuf();
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(buf.str());
    } catch (const nlohmann::json::parse_error &e) {
        fail(ErrorCode::ConfigError, fmt::format("config file '{}' is not valid JSON: {}", path, e.what()));
    }
    if (!root.is_object()) {
        fail(ErrorCode::ConfigError, fmt::format("config file '{}' must hold a JSON object", path));
    }
    for (const auto &[name, value] : root.items()) {
        auto it = std::find_if(keys.begin(), keys.end(), [&](const Key &k) { return k.name == name; });
        if (it == keys.end()) {
            fail(ErrorCode::ConfigError, fmt::format("unknown config key '{}' in '{}'", name, path));
        }
        if (it->option != nullptr && it->option->count() > 0) {
            continue;  // flags override the file
        }
        assign(*it, value);
        it->from_file = true;
    }
}

bool is_set(const std::vector<Key> &keys, const std::string &name) {
    auto it = std::find_if(keys.begin(), keys.end(), [&](const Key &k) { return k.name == name; });
    return it != keys.end() && it->explicitly_set();
}

}  // namespace

std::vector<double> default_gamma_over_sigma() {
    std::vector<double> out{0.0, 0.01, 0.02};
    for (int k = 1; k <= 200; ++k) {
        out.push_back(k / 20.0);
    }
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig rc;
    rc.gamma_over_sigma = default_gamma_over_sigma();
    std::string config_path;

    CLI::App app{"Joint weak measurement of position and momentum: simulation, figure data and verification",
                 "jwmsim"};
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_windows_style_options(false);

    std::vector<Key> keys;
    auto add = [&](CLI::App *where, const std::string &name, auto *dst, const std::string &help) {
        CLI::Option *opt = where->add_option("--" + name, *dst, help);
        keys.push_back({name, dst, opt});
        return opt;
    };
    add(&app, "gamma", &rc.gamma, "coupling strength gamma")->capture_default_str();
    add(&app, "sigma", &rc.sigma, "pointer width sigma")->capture_default_str();
    add(&app, "sigma-x", &rc.sigma_x, "position projector width")->capture_default_str();
    add(&app, "sigma-p", &rc.sigma_p, "momentum projector width")->capture_default_str();
    add(&app, "x-probe", &rc.x_probe, "probe position x'")->capture_default_str();
    add(&app, "p-probe", &rc.p_probe, "probe momentum p'")->capture_default_str();
    add(&app, "q-reading", &rc.q_reading, "pointer reading q'")->capture_default_str();
    add(&app, "grid-n", &rc.grid_n, "display grid points (power of two)")->capture_default_str();
    add(&app, "grid-span", &rc.grid_span, "display grid half-span")->capture_default_str();
    add(&app, "out", &rc.out, "output directory")->capture_default_str();
    app.add_option("--config", config_path, "JSON config file with the same keys as the flags");

    CLI::App *baseline = app.add_subcommand("figure1", "Wigner field and marginals for one pointer reading");
    CLI::App *fig2 = app.add_subcommand("figure2", "predictability curve and averaged predictability sweep");
    add(fig2, "gamma-over-sigma", &rc.gamma_over_sigma, "gamma/sigma values for the averaged sweep");
    CLI::App *vars = app.add_subcommand("variances", "single-trial and averaged variance sweep");
    add(vars, "sweep-n", &rc.sweep_n, "points per sweep axis")->capture_default_str();
    CLI::App *dirac = app.add_subcommand("dirac-scan", "mean pointer shift over a probe lattice");
    add(dirac, "lattice-n", &rc.lattice_n, "points per lattice axis")->capture_default_str();
    add(dirac, "lattice-span", &rc.lattice_span, "lattice half-span around the state")->capture_default_str();
    add(dirac, "psi-center", &rc.psi_center, "system Gaussian centre")->capture_default_str();
    add(dirac, "psi-width", &rc.psi_width, "system Gaussian width")->capture_default_str();
    add(dirac, "psi-momentum", &rc.psi_momentum, "system Gaussian momentum")->capture_default_str();
    CLI::App *verify = app.add_subcommand("verify", "run the oracle suite and write oracle_report.json");
    add(verify, "seed", &rc.seed, "seed for randomised states")->capture_default_str();
    add(verify, "random-draws", &rc.random_draws, "randomised identity draws")->capture_default_str();
    add(verify, "dirac-gamma-over-sigma", &rc.dirac_gamma_over_sigma, "coupling for the readout check")
        ->capture_default_str();
    add(verify, "dirac-sigma", &rc.dirac_sigma, "projector widths for the readout check")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!config_path.empty()) {
            apply_config_file(config_path, keys);
        }
        if (dirac->parsed()) {
            // The readout needs a weak pointer and narrow projectors; the default
            // values are replaced unless the caller chose them.
            if (!is_set(keys, "gamma")) {
                rc.gamma = 0.05 * rc.sigma;
            }
            if (!is_set(keys, "sigma-x")) {
                rc.sigma_x = 0.1;
            }
            if (!is_set(keys, "sigma-p")) {
                rc.sigma_p = 0.1;
            }
        }
        pointer_of(rc).validate();
        probe_of(rc).validate();
        if (rc.grid_n < 8 || !std::has_single_bit(static_cast<unsigned>(rc.grid_n)) || !(rc.grid_span > 0.0)) {
            fail(ErrorCode::InvalidGrid,
                 fmt::format("grid-n = {} must be a power of two >= 8 and grid-span = {} positive", rc.grid_n,
                             rc.grid_span));
        }

        if (baseline->parsed()) {
            cmd_figure1(rc, out);
        } else if (fig2->parsed()) {
            cmd_figure2(rc, out);
        } else if (vars->parsed()) {
            cmd_variances(rc, out);
        } else if (dirac->parsed()) {
            cmd_dirac_scan(rc, out);
        } else if (verify->parsed()) {
            return cmd_verify(rc, out);
        }
    } catch (const Error &e) {
        err << fmt::format("jwmsim: {}\n", e.what());
        return exit_code_for(e.code());
    }
    return kExitOk;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    std::vector<const char *> argv;
    argv.push_back("jwmsim");
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace jwm::cli
