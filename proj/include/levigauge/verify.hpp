/**
 * @file verify.hpp
 * @brief Numerical certification engine: strip sampling, minimum Levi
 *        eigenvalues over a delta ladder, scaling-exponent fits,
 *        boundedness and global plurisubharmonicity checks, and the
 *        per-term diagnostic decomposition.
 *
 * The strip at scale delta is S_delta = {z : -delta < r(z) < 0}. The
 * certification target is that the smallest eigenvalue of the weight's
 * Levi form over strip samples stays positive and scales like
 * delta^{-2 epsilon}; the fitted log-log slope is compared against the
 * exact target 2 epsilon = gamma_n.
 */
#ifndef LEVIGAUGE_VERIFY_HPP
#define LEVIGAUGE_VERIFY_HPP

#include "levigauge/weights.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace levigauge {

/// How sample depths -r are distributed in (0, delta).
enum class DepthDistribution {
    UNIFORM,  ///< Uniform in depth.
    LOG,      ///< Log-uniform over three decades, clustered toward the boundary.
};

/// Deterministic batch of strip points for one delta.
struct StripSample {
    std::vector<Eigen::VectorXcd> points;
    double delta = 0.0;
    double radius = 0.0;
    std::uint64_t seed = 0;
    DepthDistribution depth = DepthDistribution::LOG;
};

/**
 * @brief Draws n_samples low-discrepancy points of S_delta.
 *
 * Tangential coordinates are drawn from the polydisc of the given radius,
 * the depth from the chosen distribution, and Re z_{n+1} is solved so the
 * point lands at that depth; every emitted point is re-checked to satisfy
 * -delta < r < 0 in floating arithmetic. Identical arguments produce
 * identical point lists.
 */
StripSample sample_strip(const ValidatedDomain& vd, double delta, std::size_t n_samples,
                         double radius, std::uint64_t seed,
                         DepthDistribution depth = DepthDistribution::LOG);

class EmptySample : public std::runtime_error {
  public:
    EmptySample() : std::runtime_error("empty strip sample") {}
};

class NonFiniteHessian : public std::runtime_error {
  public:
    explicit NonFiniteHessian(Eigen::VectorXcd point)
        : std::runtime_error("non-finite Levi form entries"), point_(std::move(point)) {}
    const Eigen::VectorXcd& point() const { return point_; }

  private:
    Eigen::VectorXcd point_;
};

/// Smallest eigenvalue of a Hermitian matrix (self-test entry point).
double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian);

/// Per-delta minimum Levi eigenvalue statistics over a strip sample.
struct RungStats {
    double delta = 0.0;
    std::size_t n_samples = 0;
    double min_eig = 0.0;
    /// First percentile of the per-point smallest eigenvalues (nearest rank).
    double q01_eig = 0.0;
    /// The sampled point attaining the minimum, a reproducible witness.
    Eigen::VectorXcd argmin;
};

/// Scans a sample; throws EmptySample or NonFiniteHessian.
RungStats min_levi_eigen(const WeightFamily& wf, const StripSample& sample);

class TooFewDeltas : public std::runtime_error {
  public:
    TooFewDeltas() : std::runtime_error("scaling fit needs at least 3 deltas") {}
};

/// Raised by fit_exponent when a rung's minimum eigenvalue is not positive;
/// carries the witness rung so the failure is reproducible.
class NonPositiveEigen : public std::runtime_error {
  public:
    explicit NonPositiveEigen(RungStats witness)
        : std::runtime_error("minimum Levi eigenvalue is not positive at delta = " +
                             std::to_string(witness.delta)),
          witness_(std::move(witness)) {}
    const RungStats& witness() const { return witness_; }

  private:
    RungStats witness_;
};

/// Least-squares fit of log(min_eig) against log(1/delta).
struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

FitResult fit_exponent(const std::vector<RungStats>& rungs);

/// Per-delta boundedness data.
struct BoundedRung {
    double delta = 0.0;
    double sup_abs_raw = 0.0;
    double unit_min = 0.0;
    double unit_max = 0.0;
};

/// Boundedness check over a delta ladder.
struct BoundedReport {
    std::vector<BoundedRung> rungs;
    /// Set when sup |phi_raw| exceeds the analytic bound B, which would
    /// indicate an implementation bug.
    bool exceeds_analytic_bound = false;
    /// Set when the sup grows by more than a factor 2 along the ladder,
    /// which would contradict uniform boundedness.
    bool growth_flag = false;
};

BoundedReport check_bounded(const WeightFamily& wf, const std::vector<double>& deltas,
                            std::size_t n_samples, double radius, std::uint64_t seed);

/// One recorded negativity or containment failure of the global check.
struct PshViolation {
    Eigen::VectorXcd point;
    double lambda_min = 0.0;
    GlobalZone zone = GlobalZone::TRANSITION;
    double psi = 0.0;
    std::string detail;
};

/// Aggregate statistics for one sampling zone of the global check.
struct PshZoneStats {
    std::size_t count = 0;
    double psi_min = 0.0;
    double psi_max = 0.0;
    double lambda_min = 0.0;
};

/**
 * @brief Result of the three-zone global plurisubharmonicity check.
 *
 * Zone "inner" samples depths below delta/2, where theta must sit in its
 * affine branch and the global Hessian must dominate e^{-2} times the unit
 * weight Hessian. Zone "outer" samples depths of at least delta, where
 * value and Hessian must vanish identically. Zone "transition" negativity
 * is recorded as data, not as failure.
 */
struct PshGlobalReport {
    double delta = 0.0;
    PshZoneStats inner;
    PshZoneStats transition;
    PshZoneStats outer;
    std::vector<PshViolation> violations;
    bool outer_exactly_zero = true;
    bool inner_affine_identity = true;
    /// Worst of lambda_min(global) - e^{-2} lambda_min(unit weight) over
    /// inner-zone samples.
    double inner_worst_gap = 0.0;
};

PshGlobalReport check_psh_global(const WeightFamily& wf, double delta, std::size_t n_samples,
                                 double radius, std::uint64_t seed);

/**
 * @brief Diagnostic decomposition at one point and tangential direction u.
 *
 * A[j] = delta^{-1} |sum_i dz_i f_j u_i|^2,
 * B[j][h-1] = delta^{-(m_j-h) gamma_j} |sum_i dz_i (d^h_{z_j} f_j) u_i|^2,
 * C[j] = the cutoff term's Levi form on u divided by c, and
 * D[j] = A[j] + sum_h B[j][h-1] + c C[j]. comparison[j] holds
 * delta^{-gamma_j} |u_j|^2 for eyeballing the expected domination.
 */
struct TermDecomposition {
    std::vector<double> A;
    std::vector<std::vector<double>> B;
    std::vector<double> C;
    std::vector<double> D;
    std::vector<double> comparison;
};

/// Requires |u| = 1 (checked to 1e-9) and a strip point.
TermDecomposition decompose_terms(const WeightFamily& wf, double delta,
                                  const Eigen::VectorXcd& point, const Eigen::VectorXcd& u);

/**
 * @brief Compares closed-form Hessians against Richardson-extrapolated
 *        central finite differences of the weight value at sampled strip
 *        points; returns the worst relative entry error.
 *
 * The step is min(1e-4 max(1, |z|_inf), (delta - r)/200), uniform over all
 * real coordinates. n_points = 0 returns 0.
 */
double fd_self_test(const WeightFamily& wf, double delta, std::size_t n_points,
                    std::uint64_t seed);

/// Ladder configuration of the full verification pipeline.
struct VerificationConfig {
    std::vector<double> deltas;
    std::size_t samples_per_delta = 2000;
    double radius = 0.5;
    std::uint64_t seed = 0;
    DepthDistribution depth = DepthDistribution::LOG;
    /// Sample count of the global three-zone check, run at the largest delta.
    std::size_t psh_samples = 300;
};

/// Everything the verify command reports for one domain and mode.
struct VerificationReport {
    std::vector<RungStats> per_delta;
    std::optional<FitResult> fit;
    /// Exact target slope 2 epsilon = gamma_n.
    Rational target_slope;
    BoundedReport bounded;
    PshGlobalReport psh;
    std::optional<RungStats> nonpositive_witness;
    bool all_eigen_positive = false;
    bool slope_ok = false;
    bool passed = false;
};

/// Runs sample, eigen scan, fit, boundedness, and the global check.
VerificationReport run_verification(const WeightFamily& wf, const VerificationConfig& config);

/// The default delta ladder {1e-2, 1e-2.5, ..., 1e-5}.
std::vector<double> default_deltas();

}  // namespace levigauge

#endif  // LEVIGAUGE_VERIFY_HPP
