/**
 * @file weights.hpp
 * @brief Delta-parameterized bounded weight families with closed-form
 *        values, gradients, and complex Hessians, plus the convex ramp used
 *        to globalize them.
 *
 * For a validated domain with index data, the weight at scale delta is
 *
 *   phi^delta = -log((delta - r)/delta)
 *             + sum_j sum_{h=1}^{H_j} (1/|log a_jh|) log(|d^h_{z_j} f_j|^2 + a_jh)
 *             + c sum_j chi(s_j) log(1 + s_j)
 *
 * with a_jh = delta^{(m_j-h) gamma_j} / |log delta|^{(m_j-h) alpha_j},
 * s_j = |z_j|^2 / delta^{gamma_j}, and per-coordinate ladder depths H_j
 * depending on the mode (t21: m_j - 1, t22: 0, t23: k_j). All first and
 * second Wirtinger derivatives are assembled from exact symbolic derivative
 * caches; no numerical differentiation is involved.
 */
#ifndef LEVIGAUGE_WEIGHTS_HPP
#define LEVIGAUGE_WEIGHTS_HPP

#include "levigauge/domain.hpp"
#include "levigauge/index.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace levigauge {

/// Value and first two derivatives of a scalar function at a point.
struct ScalarJet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/**
 * @brief Smooth cutoff chi: identically 1 for t <= 1, identically 0 for
 *        t >= 2, monotone in between.
 *
 * Realized as g(2-t) / (g(2-t) + g(t-1)) with g(s) = exp(-1/s) for s > 0
 * and 0 otherwise. Returns value, first, and second derivative.
 */
ScalarJet smooth_cutoff(double t);

/**
 * @brief Convex C^2 ramp theta: identically 0 for t <= 2 e^{-2}, affine
 *        t - C for t >= e^{-1}, with theta' rising smoothly from 0 to 1.
 *
 * The affine branch returns d1 == 1.0 and d2 == 0.0 exactly, so callers
 * can detect the affine zone bitwise. C equals theta_offset().
 */
ScalarJet smooth_theta(double t);

/// Lower edge of the theta ramp, 2 e^{-2}.
double theta_ramp_lower();

/// Upper edge of the theta ramp, e^{-1}.
double theta_ramp_upper();

/// The additive constant C of the affine branch, (2 e^{-2} + e^{-1}) / 2.
double theta_offset();

/// Output scaling of the weight family.
enum class Normalization {
    RAW,         ///< The formula above, unscaled.
    UNIT_RANGE,  ///< Affine rescale (phi + log 2 + K) / B into [0, 1].
};

/// Free parameters of the weight construction.
struct WeightParams {
    double c = 0.25;
    Rational alpha = Rational(1);
    Mode mode = Mode::T23;
    Normalization normalization = Normalization::UNIT_RANGE;
};

/// Raised when the weight is evaluated where delta - r <= 0.
class NonPositiveLogArgument : public std::runtime_error {
  public:
    explicit NonPositiveLogArgument(const std::string& what) : std::runtime_error(what) {}
};

/// Hermitian complex Hessian of the weight at a point.
struct LeviForm {
    Eigen::VectorXcd point;
    Eigen::MatrixXcd matrix;
};

/// Value, Wirtinger gradient, Hessian, and defining-function value at a point.
struct WeightEvaluation {
    double value = 0.0;
    Eigen::VectorXcd gradient;
    Eigen::MatrixXcd hessian;
    double r = 0.0;
};

/// Which branch of theta the globalized weight used at a point.
enum class GlobalZone {
    ZERO,        ///< theta plateau, value and Hessian identically zero.
    TRANSITION,  ///< theta ramp.
    AFFINE,      ///< theta affine branch, value psi - C, Hessian of psi.
};

/// Token for a zone ("zero", "transition", "affine").
std::string zone_token(GlobalZone z);

/// Globalized weight theta(psi) with psi = e^{2r/delta} + e^{-2} phi_unit.
struct GlobalEvaluation {
    double value = 0.0;
    LeviForm hessian;
    double psi = 0.0;
    GlobalZone zone = GlobalZone::ZERO;
    /// Hessian of psi itself, before composing with theta.
    Eigen::MatrixXcd psi_hessian;
    /// The underlying unit-normalized weight evaluation.
    WeightEvaluation weight;
};

/**
 * @brief Immutable weight family over a validated domain.
 *
 * Construction precomputes every needed symbolic derivative of the f_j
 * and compiles them for fast complex evaluation. Evaluation members are
 * const and safe for concurrent use.
 */
class WeightFamily {
  public:
    WeightFamily(ValidatedDomain vd, IndexReport index, WeightParams params);

    const ValidatedDomain& domain() const { return vd_; }
    const IndexReport& index() const { return index_; }
    const WeightParams& params() const { return params_; }

    std::uint32_t n() const { return vd_.spec.n; }

    /// Ladder depth H_j for coordinate j (0-based).
    std::uint32_t h_range(std::uint32_t j) const { return hrange_[j]; }

    /// Sum of the ladder depths.
    double K() const { return K_; }

    /// Analytic range bound B = log 2 + K + c n log 3 of |phi + log 2 + K|.
    double B() const { return B_; }

    /// gamma_j as a double (0-based j).
    double gamma(std::uint32_t j) const { return gamma_[j]; }

    /// alpha_j as a double (0-based j).
    double alpha_exp(std::uint32_t j) const { return alphaj_[j]; }

    /// Weight value at a point of C^{n+1}, per the configured normalization.
    double eval_weight(double delta, const Eigen::VectorXcd& point) const;

    /// Weight value without normalization.
    double eval_weight_raw(double delta, const Eigen::VectorXcd& point) const;

    /// Value, gradient, and Hessian in one pass, per the configured
    /// normalization. The Hessian is exactly Hermitian by construction.
    WeightEvaluation eval_full(double delta, const Eigen::VectorXcd& point) const;

    /// The Hessian alone, wrapped with its evaluation point.
    LeviForm levi_form(double delta, const Eigen::VectorXcd& point) const;

    /**
     * @brief Globalized weight theta(psi).
     *
     * Requires UNIT_RANGE normalization; the zone containments of the
     * construction rely on the weight taking values in [0, 1]. In the
     * plateau zone value and Hessian are exactly zero; in the affine zone
     * the value is psi - theta_offset() and the Hessian equals the Hessian
     * of psi entrywise.
     */
    GlobalEvaluation eval_global(double delta, const Eigen::VectorXcd& point) const;

    /// Number of cached derivative-ladder terms across all coordinates.
    std::size_t bterm_count() const { return bterms_.size(); }

    /// Static data of one ladder term.
    struct BTermInfo {
        std::uint32_t j = 0;  ///< 0-based coordinate.
        std::uint32_t h = 0;  ///< Derivative order, 1 <= h <= H_j.
    };
    BTermInfo bterm_info(std::size_t idx) const;

    /// Cached symbolic derivative d^h_{z_j} f_j of ladder term idx.
    const Polynomial& bterm_poly(std::size_t idx) const;

    /// Value of the ladder-term polynomial at a point (first n coordinates).
    std::complex<double> eval_bterm(std::size_t idx, const Eigen::VectorXcd& point) const;

    /// Value of d/dz_i of the ladder-term polynomial (i < n).
    std::complex<double> eval_bterm_grad(std::size_t idx, std::uint32_t i,
                                         const Eigen::VectorXcd& point) const;

    /// Value of f_k at a point.
    std::complex<double> eval_f(std::uint32_t k, const Eigen::VectorXcd& point) const;

    /// Value of d/dz_i f_k at a point (i < n).
    std::complex<double> eval_df(std::uint32_t k, std::uint32_t i,
                                 const Eigen::VectorXcd& point) const;

    /// |log a_jh| / |log delta| for ladder term idx, a diagnostic for how
    /// far the ladder scale strays from the plain log delta scale.
    double log_star_ratio(std::size_t idx, double delta) const;

    /// r, its gradient, and its Hessian at a point.
    struct RParts {
        double r = 0.0;
        Eigen::VectorXcd grad;
        Eigen::MatrixXcd hess;
    };
    RParts r_parts(const Eigen::VectorXcd& point) const;

  private:
    struct CompiledPoly {
        struct Term {
            std::complex<double> coeff;
            Monomial exps;
        };
        std::vector<Term> terms;
        std::complex<double> eval(const Eigen::VectorXcd& z) const;
    };

    struct BTerm {
        std::uint32_t j = 0;
        std::uint32_t h = 0;
        double m_minus_h = 0.0;
        Polynomial poly;
        CompiledPoly compiled;
        std::vector<CompiledPoly> grads;
    };

    static CompiledPoly compile(const Polynomial& p);

    WeightEvaluation eval_impl(double delta, const Eigen::VectorXcd& point,
                               bool with_derivatives, double* raw_value_out) const;

    ValidatedDomain vd_;
    IndexReport index_;
    WeightParams params_;
    std::vector<double> gamma_;
    std::vector<double> alphaj_;
    std::vector<std::uint32_t> hrange_;
    double K_ = 0.0;
    double B_ = 0.0;
    std::vector<CompiledPoly> f_;
    std::vector<std::vector<CompiledPoly>> df_;
    std::vector<BTerm> bterms_;
};

}  // namespace levigauge

#endif  // LEVIGAUGE_WEIGHTS_HPP
