/**
 * @file report.hpp
 * @brief JSON serialization of index, curve, and verification results, and
 *        the bundled report document ("levi-gauge/1" schema).
 *
 * All exact rationals serialize as strings "p/q" (or "p"); arbitrary
 * precision integers serialize as decimal strings. Given identical inputs
 * the emitted bytes are identical.
 */
#ifndef LEVIGAUGE_REPORT_HPP
#define LEVIGAUGE_REPORT_HPP

#include "levigauge/curves.hpp"
#include "levigauge/index.hpp"
#include "levigauge/verify.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace levigauge {

using Json = nlohmann::ordered_json;

/// Resolved run parameters shared by the CLI commands.
struct RunConfig {
    std::string spec_path;
    Mode mode = Mode::T23;
    std::vector<double> deltas;
    std::size_t samples_per_delta = 2000;
    double radius = 0.5;
    double c = 0.25;
    Rational alpha = Rational(1);
    std::uint64_t seed = 0;
    Normalization normalization = Normalization::UNIT_RANGE;
    std::string out_path;
};

Json config_to_json(const RunConfig& config);
Json spec_to_json(const DomainSpec& spec);
Json orders_to_json(const OrderData& orders);
Json index_to_json(const IndexReport& report);
Json type_report_to_json(const TypeReport& report);
Json verification_to_json(const VerificationReport& report);

/**
 * @brief Assembles the full bundle document.
 *
 * Top-level keys: schema, tool_version, spec, config, orders, index,
 * curves, verification, warnings.
 */
Json make_bundle_report(const DomainSpec& spec, const ValidatedDomain& vd,
                        const IndexReport& index, const TypeReport& curves,
                        const VerificationReport& verification, const RunConfig& config);

/// Canonical byte serialization (2-space indent, trailing newline).
std::string serialize_report(const Json& document);

/// Schema identifier emitted at the top level.
inline constexpr const char* kSchemaId = "levi-gauge/1";

/// Tool version emitted in reports.
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace levigauge

#endif  // LEVIGAUGE_REPORT_HPP
