#include "statcore/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.h"
#include "json.hpp"

using namespace statcore;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string program_path(const std::string &name) {
    return (statcore_test::data_dir() / "programs" / name).string();
}

std::string cost_path(const std::string &name) {
    return (statcore_test::data_dir() / "costs" / name).string();
}

}  // namespace

TEST(cli, format_vector_groups_by_four) {
    EXPECT_EQ(format_vector({1, -1, 1, -1, 1, -1, 1, -1}), "(1 -1 1 -1, 1 -1 1 -1)");
    EXPECT_EQ(format_vector({1, 0}), "(1 0)");
    EXPECT_EQ(format_vector({}), "()");
}

TEST(cli, run_xor_text) {
    Result r = cli({"run", program_path("xor.qwd")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("core      (1 -1 -1 1, -1 1 1 -1)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("spectrum  (0 0 0 0, 0 0 0 8)"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("factor    8"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("basis     111"), std::string::npos) << r.out;
}

TEST(cli, run_xor_structured) {
    Result r = cli({"run", program_path("xor.qwd"), "--format", "structured"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["core"], nlohmann::json({1, -1, -1, 1, -1, 1, 1, -1}));
    EXPECT_EQ(j["spectrum"], nlohmann::json({0, 0, 0, 0, 0, 0, 0, 8}));
    EXPECT_EQ(j["common_factor"], 8);
    EXPECT_EQ(j["spectral_report"]["basis_address"], "111");
    EXPECT_EQ(j["spectral_report"]["balanced"], true);

    Result again = cli({"run", program_path("xor.qwd"), "--format", "structured"});
    EXPECT_EQ(again.out, r.out);
}

TEST(cli, run_identity_and_single_not) {
    Result id = cli({"run", program_path("identity.qwd")});
    EXPECT_EQ(id.code, 0);
    EXPECT_NE(id.out.find("core      (0 1 0 0, 0 0 0 0)"), std::string::npos) << id.out;
    EXPECT_EQ(id.out.find("spectrum"), std::string::npos);

    Result one = cli({"run", program_path("single_not.qwd")});
    EXPECT_EQ(one.code, 0);
    EXPECT_NE(one.out.find("core      (1 0)"), std::string::npos) << one.out;
}

TEST(cli, run_warns_about_unpriced_steps) {
    Result r = cli({"run", program_path("and3.qwd")});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning: step 1"), std::string::npos) << r.err;
}

TEST(cli, run_parse_error_is_usage_error) {
    Result r = cli({"run", (statcore_test::data_dir() / "malformed/index_out_of_range.qwd").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find(":3:"), std::string::npos) << r.err;

    EXPECT_EQ(cli({"run", "/nonexistent/file.qwd"}).code, 2);
}

TEST(cli, run_respects_env_cap) {
    setenv("STATCORE_MAX_N", "2", 1);
    Result r = cli({"run", program_path("xor.qwd")});
    unsetenv("STATCORE_MAX_N");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("cap"), std::string::npos);

    setenv("STATCORE_MAX_N", "banana", 1);
    Result bad = cli({"run", program_path("xor.qwd")});
    unsetenv("STATCORE_MAX_N");
    EXPECT_EQ(bad.code, 2);
}

TEST(cli, classify_xor) {
    Result r = cli({"classify", "01,10"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("basis     111"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("balanced  yes"), std::string::npos);
    EXPECT_NE(r.out.find("affine    yes"), std::string::npos);
    EXPECT_NE(r.out.find("symmetric=yes"), std::string::npos);
    EXPECT_NE(r.out.find("agreement ok"), std::string::npos);
}

TEST(cli, classify_constant_and_neither) {
    Result zero = cli({"classify", "0000", "--format", "structured"});
    ASSERT_EQ(zero.code, 0);
    auto j = nlohmann::json::parse(zero.out);
    EXPECT_EQ(j["spectral"]["constant"], true);
    EXPECT_EQ(j["spectral"]["marker_entry"], 8);

    Result neither = cli({"classify", "0111,0001", "--format", "structured"});
    ASSERT_EQ(neither.code, 0);
    auto k = nlohmann::json::parse(neither.out);
    EXPECT_EQ(k["spectral"]["balanced"], true);
    EXPECT_EQ(k["spectral"]["single_basis"], false);
    EXPECT_EQ(k["truth"]["symmetric"], false);
    EXPECT_EQ(k["truth"]["anti_symmetric"], true);
    EXPECT_TRUE(k["disagreements"].empty());
}

TEST(cli, classify_rejects_malformed_table) {
    EXPECT_EQ(cli({"classify", "011"}).code, 2);
    EXPECT_EQ(cli({"classify", "01a1"}).code, 2);
}

TEST(cli, cost_default) {
    Result r = cli({"cost"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("transistors per word  226"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("address space bits    35"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("gate delay            320 ns"), std::string::npos) << r.out;

    Result s = cli({"cost", "--format", "structured"});
    auto j = nlohmann::json::parse(s.out);
    EXPECT_EQ(j["transistors_per_word"], 226);
    EXPECT_EQ(j["address_space_bits"], 35);
    EXPECT_EQ(j["gate_delay_ns"], 320.0);
}

TEST(cli, cost_config) {
    Result r = cli({"cost", "--config", cost_path("address16.cfg"), "--format", "structured"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out)["transistors_per_word"], 114);

    Result bad = cli({"cost", "--config", cost_path("negative_radius.cfg")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("wafer_radius"), std::string::npos);
}

TEST(cli, verify) {
    Result r = cli({"verify", "--seed", "1", "--trials", "200", "--max-n", "10"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out.rfind("PASS 200 trials", 0), 0u) << r.out;

    Result zero = cli({"verify", "--trials", "0"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_EQ(zero.out.rfind("PASS 0 trials", 0), 0u);

    EXPECT_EQ(cli({"verify", "--max-n", "40"}).code, 2);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({"run"}).code, 2);
    EXPECT_EQ(cli({"run", program_path("xor.qwd"), "--format", "yaml"}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}
