/**
 * @file domain.hpp
 * @brief Loading, validation, and order extraction for regular coordinate
 *        domains.
 *
 * A regular coordinate domain in C^{n+1} is the set
 *   2 Re z_{n+1} + sum_j |f_j(z_1..z_j)|^2 < 0
 * where each f_j depends only on z_1..z_j, vanishes at 0, and contains a
 * pure power z_j^{m_j}. This module parses the JSON description, checks
 * those structural facts, and extracts the vanishing-order data that the
 * index and weight modules consume.
 */
#ifndef LEVIGAUGE_DOMAIN_HPP
#define LEVIGAUGE_DOMAIN_HPP

#include "levigauge/poly.hpp"

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace levigauge {

/// Parsed domain description: n tangential variables and the functions f_1..f_n.
struct DomainSpec {
    std::uint32_t n = 0;
    std::vector<Polynomial> functions;
    std::string label;
};

/// Raised when a spec document does not match the expected JSON shape.
class SpecLoadError : public std::runtime_error {
  public:
    explicit SpecLoadError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural validation failures; j and var are 1-based where present.
class ValidationError : public std::runtime_error {
  public:
    enum class Kind { NotTriangular, NoPurePower, NonzeroConstantTerm };

    ValidationError(Kind kind, std::uint32_t j, std::uint32_t var, const std::string& what)
        : std::runtime_error(what), kind_(kind), j_(j), var_(var) {}

    Kind kind() const { return kind_; }
    std::uint32_t function_index() const { return j_; }
    std::uint32_t variable_index() const { return var_; }

  private:
    Kind kind_;
    std::uint32_t j_;
    std::uint32_t var_;
};

/// Record of one l value lowered to its cap; indices are 1-based.
struct ClampWarning {
    std::uint32_t j = 0;
    std::uint32_t i = 0;
    std::uint32_t raw = 0;
    std::uint32_t clamped = 0;
};

/**
 * @brief Vanishing-order data of a validated domain.
 *
 * m[j] is the least pure power of z_{j+1} in f_{j+1}. With O_j the
 * remainder of f_j after removing that pure term, k[j] is the greatest
 * z_{j+1}-exponent of O_{j+1} that is <= m[j]-1 (0 when none), and
 * l[j][i] is the least positive z_{i+1}-exponent across O_{j+1} (empty
 * when the variable is absent), capped at m[i] with a recorded warning.
 */
struct OrderData {
    std::vector<std::uint32_t> m;
    std::vector<std::uint32_t> k;
    /// l[j] has j entries, for the variables before j (0-based storage).
    std::vector<std::vector<std::optional<std::uint32_t>>> l;
    std::vector<ClampWarning> clamp_warnings;
};

/**
 * @brief A spec that passed structural validation, with extracted orders.
 */
struct ValidatedDomain {
    DomainSpec spec;
    OrderData orders;
    /// Coefficient of the pure power z_j^{m_j} in f_j.
    std::vector<GaussianRational> leading_coeffs;
    /// Remainders O_j = f_j minus its pure z_j^{m_j} term.
    std::vector<Polynomial> remainders;
    /// Human-readable notices (for example a non-unit pure-power coefficient).
    std::vector<std::string> warnings;

    std::uint32_t n() const { return spec.n; }

    /// Defining function r = 2 Re z_{n+1} + sum |f_j|^2 at a point of C^{n+1}.
    double eval_r(std::span<const std::complex<double>> point) const;
};

/**
 * @brief Parses a JSON spec document {"n": uint, "functions": [str...]}.
 *
 * The optional "label" string is carried through. Throws SpecLoadError on
 * shape problems and on function parse failures (message includes the
 * function index).
 */
DomainSpec load_spec(std::string_view json_text);

/// Reads the file and delegates to load_spec.
DomainSpec load_spec_file(const std::string& path);

/**
 * @brief Extracts OrderData from a triangular spec with pure powers.
 *
 * Precondition: the checks performed by validate hold. Raw l values above
 * m[i] are clamped with a warning entry.
 */
OrderData extract_orders(const DomainSpec& spec);

/**
 * @brief Checks the structural invariants and extracts orders.
 *
 * Rejects functions using variables beyond their own index, functions with
 * constant terms, and functions without a pure power in their own variable.
 * A pure-power coefficient different from 1 produces a warning, not an
 * error; the extracted indices are scale invariant.
 */
ValidatedDomain validate(const DomainSpec& spec);

}  // namespace levigauge

#endif  // LEVIGAUGE_DOMAIN_HPP
