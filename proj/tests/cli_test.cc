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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace jwm::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
    const fs::path p = fs::temp_directory_path() / ("jwmsim_cli_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

// Data rows of a CSV, skipping '#' lines and the column header.
std::vector<std::vector<double>> csv_rows(const fs::path &p, std::string *header = nullptr) {
    std::ifstream in(p);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!seen_header) {
            seen_header = true;
            if (header != nullptr) {
                *header = line;
            }
            continue;
        }
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(Cli, figure1_defaults) {
    const fs::path dir = scratch("baseline");
    const Outcome o = invoke({"figure1", "--out", dir.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    const auto j = nlohmann::json::parse(slurp(dir / "wigner.json"));
    EXPECT_EQ(j["schema"], "jwmsim.wigner/1");
    EXPECT_DOUBLE_EQ(j["config"]["gamma"].get<double>(), 0.2);
    EXPECT_LT(j["min"].get<double>(), 0.0);
    const double step = j["x_grid"]["step"].get<double>();
    EXPECT_LE(std::abs(j["argmax"][0].get<double>()), step);
    EXPECT_LE(std::abs(j["argmax"][1].get<double>()), step);
    EXPECT_EQ(j["values"].size(), 256u);
    EXPECT_EQ(j["values"][0].size(), 256u);
    EXPECT_NEAR(j["scale"].get<double>(), std::exp(-4.0) / std::sqrt(M_PI), 1e-15);

    std::string header;
    const auto rows = csv_rows(dir / "marginals.csv", &header);
    EXPECT_EQ(header, "u,Px,Pp");
    ASSERT_EQ(rows.size(), 256u);
    const std::string text = slurp(dir / "marginals.csv");
    EXPECT_EQ(text.rfind("# schema: jwmsim.marginals/1\n# config: {", 0), 0u);
}

TEST(Cli, figure1_marginal_background) {
    const fs::path dir = scratch("baseline_bg");
    ASSERT_EQ(invoke({"figure1", "--grid-span", "16", "--grid-n", "512", "--out", dir.string()}).code, kExitOk);
    const auto rows = csv_rows(dir / "marginals.csv");
    // Px: narrow structure near x = 0 on top of a background of width ~ 1/sigma_p = 5.
    double centre = 0.0, at5 = 0.0, at1 = 0.0;
    for (const auto &r : rows) {
        if (std::abs(r[0]) < 0.04) centre = r[1];
        if (std::abs(r[0] - 5.0) < 0.04) at5 = r[1];
        if (std::abs(r[0] - 1.0) < 0.04) at1 = r[1];
    }
    EXPECT_GT(at5, 0.2 * at1);
    EXPECT_GT(centre, 1.2 * at1);
}

TEST(Cli, figure1_centre_reading_has_no_negativity) {
    const fs::path dir = scratch("baseline_q0");
    ASSERT_EQ(invoke({"figure1", "--q-reading", "0", "--out", dir.string()}).code, kExitOk);
    const auto j = nlohmann::json::parse(slurp(dir / "wigner.json"));
    EXPECT_GE(j["min"].get<double>(), -1e-12);
}

TEST(Cli, outputs_are_deterministic) {
    const fs::path a = scratch("det_a");
    const fs::path b = scratch("det_b");
    for (const char *cmd : {"figure1", "figure2", "variances"}) {
        ASSERT_EQ(invoke({cmd, "--out", a.string()}).code, kExitOk);
        ASSERT_EQ(invoke({cmd, "--out", b.string()}).code, kExitOk);
    }
    for (const char *f : {"wigner.json", "marginals.csv", "predictability.csv", "avg_predictability.csv",
                          "variances.csv"}) {
        // Identical apart from the output directory recorded in the config.
        std::string ta = slurp(a / f);
        std::string tb = slurp(b / f);
        for (std::string *t : {&ta, &tb}) {
            for (const std::string &d : {a.string(), b.string()}) {
                for (auto pos = t->find(d); pos != std::string::npos; pos = t->find(d)) {
                    t->replace(pos, d.size(), "DIR");
                }
            }
        }
        EXPECT_EQ(ta, tb) << f;
    }
}

TEST(Cli, figure2_panels) {
    const fs::path dir = scratch("fig2");
    ASSERT_EQ(invoke({"figure2", "--out", dir.string()}).code, kExitOk);
    std::string header;
    const auto a = csv_rows(dir / "predictability.csv", &header);
    EXPECT_EQ(header, "q,p_exact,abs_p_exact,density_hit,density_miss");
    bool saw_zero = false;
    for (const auto &r : a) {
        if (r[0] == 0.0) {
            saw_zero = true;
            EXPECT_EQ(r[2], 0.0);
            EXPECT_DOUBLE_EQ(r[3], r[4]);
        }
        EXPECT_NEAR(r[1], std::tanh(0.2 * r[0]), 1e-10);
    }
    EXPECT_TRUE(saw_zero);

    const auto b = csv_rows(dir / "avg_predictability.csv", &header);
    EXPECT_EQ(header, "gamma_over_sigma,avg_predictability,weak_limit");
    double p1 = 0, p2 = 0;
    for (const auto &r : b) {
        if (r[0] == 10.0) EXPECT_GE(r[1], 0.999);
        if (r[0] == 0.01) p1 = r[1];
        if (r[0] == 0.02) p2 = r[1];
    }
    EXPECT_NEAR((p2 - p1) / 0.01, 1.0 / std::sqrt(M_PI), 1e-3);
    EXPECT_EQ(b.back()[0], 10.0);
}

TEST(Cli, variances_sweep) {
    const fs::path dir = scratch("vars");
    ASSERT_EQ(invoke({"variances", "--out", dir.string()}).code, kExitOk);
    std::string header;
    const auto rows = csv_rows(dir / "variances.csv", &header);
    EXPECT_EQ(header, "sigma_x,sigma_p,P,var_x,var_p,product,avg_var_x,avg_var_p,avg_product");
    ASSERT_EQ(rows.size(), 100u);
    for (const auto &r : rows) {
        EXPECT_GE(r[5], 0.25 - 1e-12);
        EXPECT_NEAR(r[6], 2 * std::pow(r[0], 3) * r[1], 1e-6);
        EXPECT_LT(r[8], 0.25);
    }
}

TEST(Cli, dirac_scan_defaults) {
    const fs::path dir = scratch("dirac");
    const Outcome o = invoke({"dirac-scan", "--out", dir.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    const auto j = nlohmann::json::parse(slurp(dir / "dirac.json"));
    EXPECT_EQ(j["schema"], "jwmsim.dirac/1");
    EXPECT_DOUBLE_EQ(j["sigma_x"].get<double>(), 0.1);
    EXPECT_DOUBLE_EQ(j["gamma_over_sigma"].get<double>(), 0.05);
    EXPECT_EQ(j["lattice"].size(), 25u);
    EXPECT_LE(j["max_rel_error"].get<double>(), 0.01);
    EXPECT_NEAR(j["error_ratio_half_gamma"].get<double>(), 4.0, 0.5);
}

TEST(Cli, dirac_scan_far_tail) {
    const fs::path dir = scratch("dirac_tail");
    const Outcome o = invoke({"dirac-scan", "--lattice-n", "1", "--psi-center", "-5", "--out", dir.string()});
    ASSERT_EQ(o.code, kExitOk) << o.err;
    // Single probe at x' = 0 with the state centred 5 widths away.
    const auto j = nlohmann::json::parse(slurp(dir / "dirac.json"));
    const auto &pt = j["lattice"][0];
    EXPECT_DOUBLE_EQ(pt["x"].get<double>(), -5.0);
    const fs::path dir2 = scratch("dirac_tail2");
    ASSERT_EQ(invoke({"dirac-scan", "--lattice-n", "3", "--lattice-span", "5", "--out", dir2.string()}).code,
              kExitOk);
    const auto k = nlohmann::json::parse(slurp(dir2 / "dirac.json"));
    for (const auto &p : k["lattice"]) {
        if (std::abs(p["x"].get<double>()) == 5.0) {
            EXPECT_LT(std::abs(p["overlap_analytic"].get<double>()), 1e-5);
            EXPECT_LT(std::abs(p["q_shift_over_gamma"].get<double>()), 1e-5);
        }
    }
}

TEST(Cli, verify_writes_report) {
    const fs::path dir = scratch("verify");
    const Outcome o = invoke({"verify", "--out", dir.string()});
    EXPECT_EQ(o.code, kExitOk) << o.out;
    EXPECT_NE(o.out.find("checks passed"), std::string::npos);
    const auto j = nlohmann::json::parse(slurp(dir / "oracle_report.json"));
    EXPECT_TRUE(j.is_array());
}

TEST(Cli, verify_failure_exit_code) {
    const fs::path dir = scratch("verify_fail");
    const Outcome o = invoke({"verify", "--gamma", "0.5", "--random-draws", "2", "--out", dir.string()});
    EXPECT_EQ(o.code, kExitOracle);
    EXPECT_NE(o.out.find("FAIL"), std::string::npos);
}

TEST(Cli, regime_violation_names_parameter) {
    const fs::path dir = scratch("regime");
    const Outcome o = invoke({"figure1", "--sigma-x", "0.6", "--sigma-p", "0.5", "--out", dir.string()});
    EXPECT_EQ(o.code, kExitRegime);
    EXPECT_NE(o.err.find("sigma_x"), std::string::npos);
    EXPECT_EQ(invoke({"dirac-scan", "--gamma", "0.5", "--out", dir.string()}).code, kExitRegime);
}

TEST(Cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"figure1", "--bogus", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"figure1", "--gamma", "abc"}).code, kExitUsage);
    EXPECT_EQ(invoke({"figure1", "--grid-n", "100"}).code, kExitUsage);
    EXPECT_EQ(invoke({"figure1", "--config", "/nonexistent.json"}).code, kExitUsage);
    EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, unwritable_output_is_usage_error) {
    const fs::path blocker = scratch("blocker");
    std::ofstream(blocker) << "file";
    EXPECT_EQ(invoke({"figure1", "--out", (blocker / "sub").string()}).code, kExitUsage);
}

TEST(Cli, config_file_and_flag_override) {
    const fs::path dir = scratch("config");
    fs::create_directories(dir);
    std::ofstream(dir / "run.json") << R"({"gamma": 0.1, "q-reading": 0.5, "grid-n": 64})";
    ASSERT_EQ(invoke({"figure1", "--config", (dir / "run.json").string(), "--q-reading", "1.5", "--out",
                      dir.string()})
                  .code,
              kExitOk);
    const auto j = nlohmann::json::parse(slurp(dir / "wigner.json"));
    EXPECT_DOUBLE_EQ(j["config"]["gamma"].get<double>(), 0.1);
    EXPECT_DOUBLE_EQ(j["config"]["q-reading"].get<double>(), 1.5);
    EXPECT_EQ(j["config"]["grid-n"].get<int>(), 64);
    EXPECT_EQ(j["values"].size(), 64u);

    std::ofstream(dir / "bad.json") << R"({"gama": 0.1})";
    const Outcome o = invoke({"figure1", "--config", (dir / "bad.json").string()});
    EXPECT_EQ(o.code, kExitUsage);
    EXPECT_NE(o.err.find("gama"), std::string::npos);
}
