/**
 * @file index.hpp
 * @brief Exact computation of the gamma sequence, the subellipticity index
 *        epsilon = gamma_n / 2, the multiplicity, and the weight exponents
 *        alpha_j.
 *
 * Three recursion modes are supported, selected by the same tokens the CLI
 * uses:
 *  - t21: gamma_j = min_{i<j} gamma_i / m_j, which telescopes to
 *    1/(m_1...m_j). Valid for every domain.
 *  - t22: gamma_j = min over finite l_j^i of (l_j^i/m_j) gamma_i. Requires
 *    every remainder O_j to be free of own-variable powers below m_j
 *    (k_j = 0).
 *  - t23: per-coordinate hybrid. Coordinates with k_j != 0 use the t21
 *    step, the rest use the t22 step. This is the default ("auto").
 */
#ifndef LEVIGAUGE_INDEX_HPP
#define LEVIGAUGE_INDEX_HPP

#include "levigauge/domain.hpp"
#include "levigauge/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace levigauge {

/// Index recursion / weight construction mode.
enum class Mode { T21, T22, T23 };

/// CLI token for a mode ("t21", "t22", "t23").
std::string mode_token(Mode mode);

/// Parses "t21" / "t22" / "t23" / "auto" (auto maps to T23).
Mode parse_mode(const std::string& token);

/// Per-coordinate recursion step actually taken.
enum class Branch {
    BASE,   ///< First coordinate, gamma_1 = 1/m_1.
    PURE,   ///< gamma_j = min_{i<j} gamma_i / m_j.
    MIXED,  ///< gamma_j = min over finite l_j^i of (l_j^i/m_j) gamma_i.
};

/// Lower-case serialization of a branch tag.
std::string branch_token(Branch b);

/// Raised when mode t22 is requested but some k_j is nonzero; j is 1-based.
class ModeHypothesisViolated : public std::runtime_error {
  public:
    ModeHypothesisViolated(Mode mode, std::uint32_t j)
        : std::runtime_error("mode " + mode_token(mode) + " requires k_" + std::to_string(j) +
                             " = 0, but the remainder of f_" + std::to_string(j) +
                             " contains a low power of its own variable"),
          mode_(mode),
          j_(j) {}
    Mode mode() const { return mode_; }
    std::uint32_t function_index() const { return j_; }

  private:
    Mode mode_;
    std::uint32_t j_;
};

/**
 * @brief Exact index data for one domain and mode.
 *
 * Invariants, asserted during construction: 0 < gamma_j <= 1/m_j,
 * gamma_n >= 1/multiplicity, epsilon = gamma_n / 2, and
 * alpha_j = alpha * m_{j+1} * ... * m_n.
 */
struct IndexReport {
    Mode mode = Mode::T23;
    std::vector<Rational> gammas;
    Rational epsilon;
    Integer multiplicity;
    std::vector<Rational> alphas;
    std::vector<Branch> branch;
};

/// Product of the m_j.
Integer multiplicity(const OrderData& orders);

/**
 * @brief alpha_j = alpha * prod_{i>j} m_i for a base alpha >= 1.
 *
 * The defining identity (alpha_{j-1} - 1) - alpha_j (m_j - 1) = alpha_j - 1
 * is checked exactly. Throws std::invalid_argument for alpha < 1.
 */
std::vector<Rational> alpha_exponents(const OrderData& orders, const Rational& alpha);

/**
 * @brief Runs the gamma recursion for the requested mode.
 *
 * gamma_1 = 1/m_1 in every mode. A coordinate whose mixed step has no
 * finite l entry falls back to the pure step and is tagged PURE. Throws
 * ModeHypothesisViolated for t22 when some k_j != 0.
 */
IndexReport compute_gammas(const OrderData& orders, Mode mode, const Rational& alpha = Rational(1));

}  // namespace levigauge

#endif  // LEVIGAUGE_INDEX_HPP
