/**
 * @file curves.hpp
 * @brief Exact order-of-contact computation along monomial curves and
 *        contact-type bound reporting.
 *
 * A monomial curve sends the parameter t to (c_1(t), ..., c_n(t), 0) with
 * c_i(t) = t^{a_i} or c_i identically zero. The order of contact of the
 * boundary with the curve is ord_t(r o c) divided by the curve's own order
 * min_i ord_t(c_i); since the normal component is zero this reduces to
 * 2 min_j ord_t(f_j o c) over the same divisor, computed exactly.
 */
#ifndef LEVIGAUGE_CURVES_HPP
#define LEVIGAUGE_CURVES_HPP

#include "levigauge/domain.hpp"
#include "levigauge/index.hpp"
#include "levigauge/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace levigauge {

/**
 * @brief Monomial curve data: one exponent per tangential variable, with
 *        empty entries for components that are identically zero.
 *
 * At least one exponent must be present and every present exponent must be
 * positive. Exponents are not reduced by their gcd; contact orders are
 * invariant under common scaling.
 */
struct MonomialCurve {
    std::vector<std::optional<std::uint32_t>> exps;

    /// Least present exponent, the curve's own vanishing order.
    std::uint32_t base_order() const;

    /// Renders as comma-separated exponents with "0" for omitted slots.
    std::string to_string() const;
};

/// Validates and wraps an exponent list; throws std::invalid_argument when
/// no component is present or a present exponent is zero.
MonomialCurve make_curve(std::vector<std::optional<std::uint32_t>> exps);

/// Parses "a1,...,an" with "0" meaning an omitted component.
MonomialCurve parse_curve(const std::string& text, std::uint32_t n);

/**
 * @brief The curve with exponents proportional to (gamma_1, ..., gamma_n),
 *        scaled by the least common denominator to integers.
 *
 * The last exponent divides the others as gamma_i / gamma_n; the scale
 * factor is the least common multiple of the denominators.
 */
MonomialCurve canonical_curve(const IndexReport& index);

/**
 * @brief Exact contact order of the boundary with the curve, empty for the
 *        degenerate case where every f_j o c vanishes identically.
 */
std::optional<Rational> contact_order(std::span<const Polynomial> functions,
                                      const MonomialCurve& curve);

/// Convenience overload over a validated domain.
std::optional<Rational> contact_order(const ValidatedDomain& vd, const MonomialCurve& curve);

/// One evaluated curve with its label and contact order (empty = infinite).
struct CurveContact {
    std::string label;
    MonomialCurve curve;
    std::optional<Rational> contact;
};

/**
 * @brief Contact-type bounds from a batch of curves.
 *
 * lower_bound_D is the best finite contact found; upper_bound_D is twice
 * the multiplicity. epsilon_consistency records the exact comparison
 * epsilon * lower_bound_D <= 1, which must hold on every valid domain.
 */
struct TypeReport {
    Rational lower_bound_D;
    Integer upper_bound_D;
    std::vector<CurveContact> tested_curves;
    bool epsilon_consistency = false;
    std::vector<std::string> warnings;
};

/**
 * @brief Evaluates the canonical curve, the n coordinate axes, and any
 *        extra curves, and assembles the bound report.
 *
 * Infinite contacts are excluded from the lower bound and recorded as
 * warnings; such curves would contradict the finite-type geometry of these
 * domains and deserve investigation.
 */
TypeReport type_report(const ValidatedDomain& vd, const IndexReport& index,
                       const std::vector<MonomialCurve>& extra_curves = {});

}  // namespace levigauge

#endif  // LEVIGAUGE_CURVES_HPP
