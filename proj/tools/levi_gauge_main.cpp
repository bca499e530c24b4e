#include "levigauge/cli.hpp"
#include "levigauge/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::vector<double> parse_deltas(const std::string& text) {
    std::vector<double> deltas;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            throw std::invalid_argument("empty delta entry in \"" + text + "\"");
        }
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("malformed delta \"" + token + "\"");
        }
        if (!(value > 0.0) || !(value < 1.0)) {
            throw std::invalid_argument("delta " + token + " must lie in (0, 1)");
        }
        deltas.push_back(value);
    }
    if (deltas.empty()) {
        throw std::invalid_argument("delta list is empty");
    }
    std::sort(deltas.begin(), deltas.end(), std::greater<double>());
    deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
    return deltas;
}

levigauge::Rational parse_alpha(const std::string& text) {
    try {
        levigauge::Rational value(text);
        if (value < 1) {
            throw std::invalid_argument("alpha must be at least 1");
        }
        return value;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed alpha \"" + text + "\" (use p or p/q)");
    }
}

struct CliOptions {
    std::string spec_path;
    std::string mode = "auto";
    std::string deltas;
    std::size_t samples = 2000;
    double radius = 0.5;
    double c = 0.25;
    std::string alpha = "1";
    std::uint64_t seed = 0;
    std::string norm = "unit";
    std::string out_path;
    std::string exponents;
};

void add_common_options(CLI::App* cmd, CliOptions& opt, bool with_verify_flags,
                        bool with_out = true) {
    cmd->add_option("--spec", opt.spec_path, "Path to the domain spec JSON file")->required();
    cmd->add_option("--mode", opt.mode,
                    "Index recursion mode: auto (default), t21, t22, or t23");
    if (with_verify_flags) {
        cmd->add_option("--deltas", opt.deltas,
                        "Comma-separated delta ladder in (0,1); sorted to decreasing order");
        cmd->add_option("--samples", opt.samples, "Strip samples per delta (default 2000)");
        cmd->add_option("--radius", opt.radius, "Tangential sampling radius (default 0.5)");
        cmd->add_option("--c", opt.c, "Cutoff amplitude c > 0 (default 0.25)");
        cmd->add_option("--alpha", opt.alpha, "Weight exponent alpha >= 1, rational p/q");
        cmd->add_option("--seed", opt.seed, "Sampling seed (default 0)");
        cmd->add_option("--norm", opt.norm, "Normalization: unit (default) or raw");
    }
    if (with_out) {
        cmd->add_option("--out", opt.out_path, "Write the JSON document to this path");
    }
}

levigauge::RunConfig build_config(const CliOptions& opt) {
    levigauge::RunConfig config;
    config.spec_path = opt.spec_path;
    config.mode = levigauge::parse_mode(opt.mode);
    config.deltas = opt.deltas.empty() ? levigauge::default_deltas() : parse_deltas(opt.deltas);
    config.samples_per_delta = opt.samples;
    config.radius = opt.radius;
    config.c = opt.c;
    config.alpha = parse_alpha(opt.alpha);
    config.seed = opt.seed;
    if (opt.norm == "unit") {
        config.normalization = levigauge::Normalization::UNIT_RANGE;
    } else if (opt.norm == "raw") {
        config.normalization = levigauge::Normalization::RAW;
    } else {
        throw std::invalid_argument("unknown normalization \"" + opt.norm +
                                    "\" (use unit or raw)");
    }
    config.out_path = opt.out_path;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"levi-gauge: exact subellipticity indices and certified "
                 "plurisubharmonic weight families for regular coordinate domains"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* analyze = app.add_subcommand("analyze", "Exact indices and curve bounds");
    add_common_options(analyze, opt, false);
    CLI::App* verify = app.add_subcommand("verify", "Delta-ladder Levi certification");
    add_common_options(verify, opt, true);
    CLI::App* curve = app.add_subcommand("curve", "Exact contact order of one curve");
    add_common_options(curve, opt, false, false);
    curve->add_option("--exponents", opt.exponents,
                      "Comma-separated curve exponents (0 = omitted) or \"canonical\"")
        ->required();
    CLI::App* report = app.add_subcommand("report", "Full bundle JSON document");
    add_common_options(report, opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return levigauge::kExitUsageError;
    }

    levigauge::RunConfig config;
    try {
        config = build_config(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return levigauge::kExitUsageError;
    }

    if (app.got_subcommand(analyze)) {
        return levigauge::run_analyze(config, std::cout, std::cerr);
    }
    if (app.got_subcommand(verify)) {
        return levigauge::run_verify(config, std::cout, std::cerr);
    }
    if (app.got_subcommand(curve)) {
        return levigauge::run_curve(config, opt.exponents, std::cout, std::cerr);
    }
    return levigauge::run_report(config, std::cout, std::cerr);
}
