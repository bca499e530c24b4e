/**
 * @file poly.hpp
 * @brief Exact sparse multivariate polynomial algebra over Gaussian rationals.
 *
 * Provides parsing from a small ASCII grammar, holomorphic (Wirtinger)
 * differentiation, complex evaluation, composition with monomial curves,
 * and the exponent scans that drive the order extraction of the domain
 * module.
 */
#ifndef LEVIGAUGE_POLY_HPP
#define LEVIGAUGE_POLY_HPP

#include "levigauge/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace levigauge {

/// Exponent vector of a monomial; length equals the variable count.
using Monomial = std::vector<std::uint32_t>;

/// Largest representable exponent, in variables and in the curve parameter.
inline constexpr std::uint64_t kMaxExponent = 2147483647ULL;

/// Raised when a parsed or derived exponent would exceed kMaxExponent.
class ExponentOverflow : public std::runtime_error {
  public:
    explicit ExponentOverflow(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed polynomial text; position is a 0-based byte offset.
class PolyParseError : public std::runtime_error {
  public:
    PolyParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/**
 * @brief Sparse polynomial in n_vars complex variables with exact
 *        Gaussian-rational coefficients.
 *
 * Terms are kept in a map from exponent vector to nonzero coefficient;
 * the zero polynomial is the empty map. All arithmetic is exact.
 */
class Polynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational>;

    /// Constructs the zero polynomial in the given number of variables.
    explicit Polynomial(std::uint32_t n_vars) : n_vars_(n_vars) {}

    /// Builds a single-term polynomial.
    static Polynomial monomial(std::uint32_t n_vars, Monomial exps, GaussianRational coeff);

    std::uint32_t n_vars() const { return n_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Adds coeff to the term at exps, erasing the term if the sum is zero.
    void add_term(const Monomial& exps, const GaussianRational& coeff);

    /// Coefficient at exps, zero when the term is absent.
    GaussianRational coefficient(const Monomial& exps) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a -= b;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    /// Multiplies every coefficient by an exact scalar.
    Polynomial scaled(const GaussianRational& s) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
    }

    /// Evaluates at a complex point; coefficients convert to floating
    /// point at the last step. The point length must equal n_vars.
    std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

    /// Evaluates exactly at a Gaussian-rational point.
    GaussianRational evaluate_exact(std::span<const GaussianRational> point) const;

    /**
     * @brief Canonical text form, re-parseable by parse_poly.
     *
     * Terms appear in lexicographic exponent order, joined by " + " and
     * " - "; unit coefficients on non-constant monomials are omitted.
     */
    std::string to_string() const;

  private:
    std::uint32_t n_vars_;
    TermMap terms_;
};

/**
 * @brief Polynomial in the single curve parameter, produced by composing a
 *        Polynomial with a monomial curve.
 */
class UnivariatePolynomial {
  public:
    using TermMap = std::map<std::uint32_t, GaussianRational>;

    UnivariatePolynomial() = default;

    void add_term(std::uint32_t exp, const GaussianRational& coeff);
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest exponent with nonzero coefficient; empty for the zero polynomial.
    std::optional<std::uint32_t> min_order() const;

    /// Derivative with respect to the curve parameter.
    UnivariatePolynomial derivative() const;

    /// Multiplication by t^k.
    UnivariatePolynomial times_power(std::uint32_t k) const;

    UnivariatePolynomial scaled(const GaussianRational& s) const;

    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend bool operator==(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Canonical text form with variable "t".
    std::string to_string() const;

  private:
    TermMap terms_;
};

/**
 * @brief Parses polynomial text over variables z1..z{n_vars}.
 *
 * Grammar (whitespace insignificant):
 *   expr     := ['+'|'-'] term (('+'|'-') term)*
 *   term     := coeff | [coeff '*'] factor ('*' factor)*
 *   factor   := var ['^' uint]
 *   var      := 'z' uint                     (1-based index)
 *   coeff    := rational | '(' rational [('+'|'-') rational 'i'] ')'
 *             | rational 'i'
 *   rational := int ['/' uint]
 *
 * Throws PolyParseError (with byte position) on malformed input or unknown
 * variables, and ExponentOverflow for exponents beyond kMaxExponent.
 */
Polynomial parse_poly(std::string_view text, std::uint32_t n_vars);

/**
 * @brief Exact holomorphic derivative d^order/dz_var^order.
 *
 * Order 0 returns the input unchanged; var is 0-based.
 */
Polynomial wirtinger_derivative(const Polynomial& p, std::uint32_t var, std::uint32_t order);

/**
 * @brief Substitutes z_i := t^{exps[i]}, dropping variables marked omitted.
 *
 * A monomial containing an omitted variable contributes nothing. Exact
 * cancellation between terms is preserved. Throws ExponentOverflow when a
 * substituted degree exceeds kMaxExponent.
 */
UnivariatePolynomial compose_monomial_curve(
    const Polynomial& p, const std::vector<std::optional<std::uint32_t>>& exps);

/**
 * @brief Exponent statistics of one variable across the support of a
 *        polynomial.
 *
 * pure_min is the least d such that z_var^d appears with no other variable;
 * min_positive is the least positive exponent of z_var over terms containing
 * it. Both are empty when no qualifying term exists.
 */
struct SupportOrders {
    std::optional<std::uint32_t> pure_min;
    std::optional<std::uint32_t> min_positive;
    /// Sorted distinct positive exponents of the variable over the support.
    std::vector<std::uint32_t> positive_exponents;

    /// Greatest positive exponent that is <= bound, or 0 when none exists.
    std::uint32_t max_below(std::uint32_t bound) const;
};

/// Scans the support of p for the exponent statistics of variable var (0-based).
SupportOrders support_orders(const Polynomial& p, std::uint32_t var);

}  // namespace levigauge

#endif  // LEVIGAUGE_POLY_HPP
