#include "levigauge/cli.hpp"

#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

namespace lg = levigauge;

namespace {

std::string spec_path(const std::string& name) {
    return std::string(SPEC_DIR) + "/" + name + ".json";
}

lg::RunConfig base_config(const std::string& name) {
    lg::RunConfig config;
    config.spec_path = spec_path(name);
    return config;
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& stem)
        : path(std::filesystem::temp_directory_path() /
               ("levi_gauge_test_" + stem + "_" + std::to_string(::getpid()) + ".json")) {}
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

TEST_CASE("analyze prints exact indices and curve bounds") {
    std::ostringstream out;
    std::ostringstream err;
    const int rc = lg::run_analyze(base_config("c4"), out, err);
    CHECK(rc == lg::kExitSuccess);
    const std::string text = out.str();
    CHECK(text.find("mode: t23") != std::string::npos);
    CHECK(text.find("gamma: 1/6 1/24 1/32") != std::string::npos);
    CHECK(text.find("branch: base pure mixed") != std::string::npos);
    CHECK(text.find("epsilon: 1/64") != std::string::npos);
    CHECK(text.find("multiplicity: 96") != std::string::npos);
    CHECK(text.find("alpha exponents: 16 4 1") != std::string::npos);
    CHECK(text.find("canonical (16,4,3): 32/3") != std::string::npos);
    CHECK(text.find("epsilon * lower_bound <= 1: yes") != std::string::npos);
    CHECK(err.str().empty());
}

TEST_CASE("analyze writes a partial document when asked") {
    TempFile tmp("analyze");
    lg::RunConfig config = base_config("bis23");
    config.out_path = tmp.path.string();
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(lg::run_analyze(config, out, err) == lg::kExitSuccess);
    const std::string bytes = slurp(tmp.path);
    const lg::Json doc = lg::Json::parse(bytes);
    CHECK(doc["schema"] == "levi-gauge/1");
    CHECK(doc["index"]["epsilon"] == "1/6");
    CHECK(doc.contains("curves"));
    CHECK_FALSE(doc.contains("verification"));
}

TEST_CASE("analyze reports missing specs as usage errors") {
    std::ostringstream out;
    std::ostringstream err;
    lg::RunConfig config;
    config.spec_path = "/nonexistent/spec.json";
    CHECK(lg::run_analyze(config, out, err) == lg::kExitUsageError);
    CHECK(err.str().find("error:") != std::string::npos);
}

TEST_CASE("mode t22 on an incompatible domain is a usage error") {
    std::ostringstream out;
    std::ostringstream err;
    lg::RunConfig config = base_config("c4");
    config.mode = lg::Mode::T22;
    CHECK(lg::run_analyze(config, out, err) == lg::kExitUsageError);
    CHECK(err.str().find("k_2") != std::string::npos);
}

TEST_CASE("curve command prints exact contact orders") {
    std::ostringstream out;
    std::ostringstream err;
    REQUIRE(lg::run_curve(base_config("c4"), "canonical", out, err) == lg::kExitSuccess);
    CHECK(out.str() == "curve: 16,4,3\ncontact: 32/3\n");

    std::ostringstream out2;
    REQUIRE(lg::run_curve(base_config("c4"), "3,1,0", out2, err) == lg::kExitSuccess);
    CHECK(out2.str() == "curve: 3,1,0\ncontact: 36\n");

    std::ostringstream out3;
    CHECK(lg::run_curve(base_config("c4"), "1,2", out3, err) == lg::kExitUsageError);
}

TEST_CASE("verify passes on the ball with the certifying amplitude") {
    lg::RunConfig config = base_config("ball");
    config.deltas = {1e-2, 1e-3, 1e-4};
    config.samples_per_delta = 200;
    config.c = 1.0 / 32.0;
    std::ostringstream out;
    std::ostringstream err;
    const int rc = lg::run_verify(config, out, err);
    CHECK(rc == lg::kExitSuccess);
    CHECK(out.str().find("verification PASSED") != std::string::npos);
    CHECK(out.str().find("fitted slope:") != std::string::npos);
}

TEST_CASE("verify fails honestly at the default amplitude") {
    lg::RunConfig config = base_config("ball");
    config.deltas = {1e-2, 1e-3, 1e-4};
    config.samples_per_delta = 200;
    std::ostringstream out;
    std::ostringstream err;
    const int rc = lg::run_verify(config, out, err);
    CHECK(rc == lg::kExitVerificationFailure);
    CHECK(out.str().find("verification FAILED") != std::string::npos);
    CHECK(out.str().find("nonpositive eigenvalue witness") != std::string::npos);
}

TEST_CASE("report requires an output path") {
    std::ostringstream out;
    std::ostringstream err;
    CHECK(lg::run_report(base_config("ball"), out, err) == lg::kExitUsageError);
}

TEST_CASE("report writes the full bundle") {
    TempFile tmp("report");
    lg::RunConfig config = base_config("bis23");
    config.deltas = {1e-2, 1e-3, 1e-4};
    config.samples_per_delta = 100;
    config.c = 1.0 / 32.0;
    config.out_path = tmp.path.string();
    std::ostringstream out;
    std::ostringstream err;
    const int rc = lg::run_report(config, out, err);
    CHECK(rc == lg::kExitSuccess);
    const lg::Json doc = lg::Json::parse(slurp(tmp.path));
    CHECK(doc["schema"] == "levi-gauge/1");
    CHECK(doc["verification"]["passed"] == true);
    CHECK(doc["curves"]["epsilon_consistency"] == true);
    CHECK(doc["index"]["epsilon"] == "1/6");
    CHECK(out.str().find("report written:") != std::string::npos);
}

TEST_CASE("report failures leave an error document behind") {
    TempFile tmp("report_error");
    lg::RunConfig config;
    config.spec_path = "/nonexistent/spec.json";
    config.out_path = tmp.path.string();
    std::ostringstream out;
    std::ostringstream err;
    CHECK(lg::run_report(config, out, err) == lg::kExitUsageError);
    const lg::Json doc = lg::Json::parse(slurp(tmp.path));
    CHECK(doc["schema"] == "levi-gauge/1");
    CHECK(doc.contains("error"));
}
