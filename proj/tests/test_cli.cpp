#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace charzero;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("charzero_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    CliRun run(const std::string& args) const {
        const fs::path out = dir_ / "stdout.txt";
        const std::string cmd = std::string("\"") + CHARZERO_CLI + "\" " + args + " > \"" + out.string() + "\" 2> \"" + (dir_ / "stderr.txt").string() + "\"";
        const int status = std::system(cmd.c_str());
        std::ifstream in(out);
        std::stringstream buf;
        buf << in.rdbuf();
        return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, GenerateAndProduct) {
    ASSERT_EQ(run("gen sym 5 -o " + path("s5.json")).code, 0);
    EXPECT_TRUE(validate(load_table(path("s5.json"))).ok());
    ASSERT_EQ(run("gen dihedral 16 -o " + path("d32.json")).code, 0);
    EXPECT_EQ(load_table(path("d32.json")).order, 32);
    ASSERT_EQ(run("gen product " + path("s5.json") + " " + path("d32.json") + " -o " + path("prod.json")).code, 0);
    EXPECT_EQ(load_table(path("prod.json")).order, 3840);
    ASSERT_EQ(run("gen abelian 2 4 -o " + path("ab.json")).code, 0);
    EXPECT_EQ(load_table(path("ab.json")).order, 8);
    ASSERT_EQ(run("gen cyclic 7 -o " + path("c7.json")).code, 0);
    EXPECT_EQ(load_table(path("c7.json")).order, 7);
}

TEST_F(CliTest, InvalidInputsExitTwo) {
    EXPECT_EQ(run("gen sym 0 -o " + path("x.json")).code, 2);
    EXPECT_EQ(run("gen sym five -o " + path("x.json")).code, 2);
    EXPECT_EQ(run("gen banana 3 -o " + path("x.json")).code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("analyze " + path("missing.json")).code, 2);
    EXPECT_EQ(run("verify " + path("missing.json") + " --checks nope").code, 2);
}

TEST_F(CliTest, AnalyzeReportsClasses) {
    ASSERT_EQ(run("gen sym 3 -o " + path("s3.json")).code, 0);
    const auto text = run("analyze " + path("s3.json"));
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("non-vanishing classes: g_(3)"), std::string::npos) << text.out;
    const auto json = run("analyze " + path("s3.json") + " --format json");
    const auto j = nlohmann::json::parse(json.out);
    EXPECT_EQ(j.at("nonvanishing_classes"), nlohmann::json::array({"g_(3)"}));
    EXPECT_EQ(j.at("k_min"), 1);

    ASSERT_EQ(run("gen dihedral 16 -o " + path("d32.json")).code, 0);
    const auto d = nlohmann::json::parse(run("analyze " + path("d32.json") + " --format json").out);
    EXPECT_EQ(d.at("delta_v_independence"), 3);

    ASSERT_EQ(run("gen abelian 2 2 -o " + path("v4.json")).code, 0);
    EXPECT_NE(run("analyze " + path("v4.json")).out.find("no nonlinear characters; H₀"), std::string::npos);
}

TEST_F(CliTest, ApproxIsOptIn) {
    ASSERT_EQ(run("gen dihedral 5 -o " + path("d10.json")).code, 0);
    EXPECT_EQ(run("analyze " + path("d10.json")).out.find("approximate"), std::string::npos);
    EXPECT_NE(run("analyze " + path("d10.json") + " --approx").out.find("0.6180"), std::string::npos);
}

TEST_F(CliTest, CoverThreshold) {
    ASSERT_EQ(run("gen sym 6 -o " + path("s6.json")).code, 0);
    EXPECT_EQ(run("cover " + path("s6.json") + " --max-k 2").code, 0);
    EXPECT_EQ(run("cover " + path("s6.json") + " --max-k 1").code, 1);
    EXPECT_NE(run("cover " + path("s6.json")).out.find("k_min: 2"), std::string::npos);
}

TEST_F(CliTest, GraphsWritten) {
    ASSERT_EQ(run("gen sym 5 -o " + path("s5.json")).code, 0);
    ASSERT_EQ(run("graphs " + path("s5.json") + " --out " + path("g") + " --dot").code, 0);
    for (const char* f : {"gamma_v.json", "delta_v.json", "theta.json", "gamma_v.dot", "delta_v.dot", "theta.dot"})
        EXPECT_TRUE(fs::exists(dir_ / "g" / f)) << f;
    ASSERT_EQ(run("graphs " + path("s5.json") + " --out " + path("h")).code, 0);
    EXPECT_FALSE(fs::exists(dir_ / "h" / "gamma_v.dot"));
}

TEST_F(CliTest, VerifyFixturesAndCorruption) {
    const auto fixtures = run(std::string("verify ") + CHARZERO_FIXTURE_DIR + " --checks covers --format json");
    EXPECT_EQ(fixtures.code, 0);
    const auto j = nlohmann::json::parse(fixtures.out);
    EXPECT_EQ(j.size(), 5u);
    for (const auto& rec : j) EXPECT_EQ(rec.at("status"), "ok") << rec.dump();

    auto t = build_symmetric(4);
    t.characters[2].values[1] = Cyclotomic(5);
    save_table(t, path("bad.json"));
    const auto bad = run("verify " + path("bad.json") + " --checks burnside");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.out.find("validate,error"), std::string::npos) << bad.out;
}

TEST_F(CliTest, VerifyFlagsExitOne) {
    auto t = build_symmetric(4);
    t.metadata.r_value = 1; // contradicts the computed k_min of 2
    save_table(t, path("s4.json"));
    const auto r = run("verify " + path("s4.json") + " --checks covers");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("k_min>r_value"), std::string::npos);
}

TEST_F(CliTest, ReportIsDeterministic) {
    ASSERT_EQ(run("gen sym 4 -o " + path("c/s4.json")).code, 2); // parent directory does not exist
    fs::create_directories(dir_ / "c");
    ASSERT_EQ(run("gen sym 4 -o " + path("c/s4.json")).code, 0);
    ASSERT_EQ(run("gen dihedral 6 -o " + path("c/d12.json")).code, 0);
    ASSERT_EQ(run("report " + path("c") + " -o " + path("r1.csv")).code, 0);
    ASSERT_EQ(run("report " + path("c") + " -o " + path("r2.csv")).code, 0);
    ASSERT_EQ(run("report " + path("c") + " -o " + path("r.json")).code, 0);
    std::ifstream a(path("r1.csv")), b(path("r2.csv"));
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_EQ(sa.str().substr(0, sa.str().find('\n')), "group,order,#classes,#nonlinear,k_min,witness_names,flags");
    std::ifstream js(path("r.json"));
    EXPECT_EQ(nlohmann::json::parse(js).size(), 2u);
}
