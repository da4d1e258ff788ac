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

#include "jwm/oracle.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "jwm/errors.h"

using namespace jwm;
using namespace jwm::oracle;

namespace {

const CheckResult &find(const std::vector<CheckResult> &rs, const std::string &name) {
    auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult &r) { return r.name == name; });
    if (it == rs.end()) {
        throw std::runtime_error("missing check " + name);
    }
    return *it;
}

const std::vector<CheckResult> &default_results() {
    static const std::vector<CheckResult> rs = run_suite(OracleConfig{});
    return rs;
}

}  // namespace

TEST(Oracle, default_config_passes) {
    for (const CheckResult &r : default_results()) {
        EXPECT_TRUE(r.passed) << r.name << " observed " << r.observed << " expected " << r.expected << " tol "
                              << r.tolerance << " " << r.detail;
        EXPECT_EQ(r.passed, std::abs(r.observed - r.expected) <= r.tolerance) << r.name;
    }
}

TEST(Oracle, averaged_variance_row) {
    const CheckResult &r = find(default_results(), "averaged_var_x_abs");
    EXPECT_NEAR(r.observed, 0.0032, 1e-6);
    EXPECT_DOUBLE_EQ(r.expected, 2 * std::pow(0.2, 4));
    EXPECT_DOUBLE_EQ(r.tolerance, 1e-6);
}

TEST(Oracle, sorted_and_covering_every_tag) {
    const auto &rs = default_results();
    EXPECT_TRUE(std::is_sorted(rs.begin(), rs.end(),
                               [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; }));
    for (const CheckResult &r : rs) {
        EXPECT_FALSE(r.name.starts_with("coverage_")) << r.name;
    }
    for (const std::string &t : required_tags()) {
        EXPECT_TRUE(std::any_of(rs.begin(), rs.end(), [&](const CheckResult &r) { return r.name.starts_with(t + "_"); }))
            << t;
    }
}

TEST(Oracle, weak_only_checks_fail_outside_weak_regime) {
    OracleConfig c;
    c.gamma = 0.5;
    c.dirac_gamma_over_sigma = 0.5;
    c.random_draws = 5;
    const std::vector<CheckResult> rs = run_suite(c);
    for (const char *name : {"closed_wigner_closed_vs_weyl_peak", "marginals_marginal_x_peak", "dirac_readout_max_rel"}) {
        const CheckResult &r = find(rs, name);
        EXPECT_FALSE(r.passed) << name;
        EXPECT_FALSE(r.detail.empty()) << name;
    }
    EXPECT_TRUE(find(rs, "projector_identity_max_abs").passed);
    EXPECT_FALSE(all_passed(rs));
}

TEST(Oracle, seed_changes_keep_outcomes) {
    OracleConfig c;
    c.seed = 99;
    const std::vector<CheckResult> rs = run_suite(c);
    const auto &base = default_results();
    ASSERT_EQ(rs.size(), base.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        EXPECT_EQ(rs[i].name, base[i].name);
        EXPECT_EQ(rs[i].passed, base[i].passed) << rs[i].name;
    }
}

TEST(Oracle, report_fields) {
    const auto j = nlohmann::json::parse(report_json(default_results()));
    ASSERT_TRUE(j.is_array());
    ASSERT_EQ(j.size(), default_results().size());
    const std::set<std::string> want{"name", "observed", "expected", "tolerance", "passed", "runtime_ms"};
    for (const auto &row : j) {
        std::set<std::string> keys;
        for (const auto &[k, v] : row.items()) {
            keys.insert(k);
        }
        EXPECT_EQ(keys, want);
        EXPECT_TRUE(row["runtime_ms"].is_number_integer());
        EXPECT_TRUE(row["passed"].is_boolean());
    }
}

TEST(Oracle, config_parsing) {
    const OracleConfig c = parse_config(R"({"seed": 5, "gamma": 0.1, "sigma-x": 0.15, "random-draws": 3,
                                            "grid-n": 512})");
    EXPECT_EQ(c.seed, 5u);
    EXPECT_DOUBLE_EQ(c.gamma, 0.1);
    EXPECT_DOUBLE_EQ(c.sigma_x, 0.15);
    EXPECT_EQ(c.random_draws, 3);
    for (const char *bad : {"{", "[1]", R"({"gama": 1})", R"({"gamma": "x"})", R"({"sigma": -1})",
                            R"({"random-draws": 0})"}) {
        try {
            parse_config(bad);
            ADD_FAILURE() << bad;
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), ErrorCode::ConfigError) << bad;
        }
    }
    try {
        load_config("/nonexistent/config.json");
        ADD_FAILURE();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::ConfigError);
    }
}

TEST(Oracle, gaussian_overlap_matches_quadrature) {
    const Grid1D g = Grid1D::symmetric(4096, 30.0);
    const GaussianSpec a{0.4, 0.7, -1.2};
    const GaussianSpec b{-0.9, 2.5, 0.6};
    const cplx num = inner(sample_gaussian(a, g), sample_gaussian(b, g));
    EXPECT_NEAR(std::abs(gaussian_overlap(a, b) - num), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(gaussian_overlap(a, a) - 1.0), 0.0, 1e-14);
}

TEST(Oracle, random_states_in_documented_ranges) {
    const auto states = random_gaussians(1, 200);
    EXPECT_EQ(states.size(), 200u);
    for (const GaussianSpec &s : states) {
        EXPECT_LE(std::abs(s.center), 1.0);
        EXPECT_GE(s.width, 0.5);
        EXPECT_LE(s.width, 2.0);
        EXPECT_LE(std::abs(s.phase_momentum), 1.0);
    }
    const auto again = random_gaussians(1, 200);
    EXPECT_EQ(again[17].center, states[17].center);
}
