#include "levigauge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace levigauge {

namespace {

std::vector<std::uint32_t> first_primes(std::size_t count) {
    std::vector<std::uint32_t> primes;
    primes.reserve(count);
    std::uint32_t candidate = 2;
    while (primes.size() < count) {
        bool is_prime = true;
        for (std::uint32_t p : primes) {
            if (p * p > candidate) {
                break;
            }
            if (candidate % p == 0) {
                is_prime = false;
                break;
            }
        }
        if (is_prime) {
            primes.push_back(candidate);
        }
        ++candidate;
    }
    return primes;
}

/// Radical-inverse (Halton) value of index i in the given base.
double halton(std::uint64_t i, std::uint32_t base) {
    double f = 1.0;
    double result = 0.0;
    while (i > 0) {
        f /= base;
        result += f * static_cast<double>(i % base);
        i /= base;
    }
    return result;
}

/**
 * Core quasi-random draw shared by the strip and zone samplers. depth_of
 * maps the depth coordinate u in [0,1) to a target depth t > 0; accept
 * receives the recomputed r value. Emits identical points for identical
 * arguments.
 */
template <typename DepthFn, typename AcceptFn>
std::vector<Eigen::VectorXcd> draw_points(const ValidatedDomain& vd, std::size_t n_samples,
                                          double radius, std::uint64_t index_offset,
                                          DepthFn&& depth_of, AcceptFn&& accept) {
    const std::uint32_t n = vd.n();
    const std::vector<std::uint32_t> primes = first_primes(2 * static_cast<std::size_t>(n) + 2);
    std::vector<Eigen::VectorXcd> points;
    points.reserve(n_samples);
    const std::uint64_t max_attempts = 1000 * static_cast<std::uint64_t>(n_samples) + 1000;
    std::vector<double> u(2 * static_cast<std::size_t>(n) + 2, 0.0);
    for (std::uint64_t k = 1; points.size() < n_samples && k <= max_attempts; ++k) {
        for (std::size_t q = 0; q < u.size(); ++q) {
            u[q] = halton(index_offset + k, primes[q]);
        }
        Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n + 1);
        for (std::uint32_t i = 0; i < n; ++i) {
            const double rad = radius * std::sqrt(u[2 * i]);
            const double ang = 2.0 * std::numbers::pi * u[2 * i + 1];
            z[i] = std::complex<double>(rad * std::cos(ang), rad * std::sin(ang));
        }
        const double t = depth_of(u[2 * n]);
        double sum_sq = 0.0;
        for (const Polynomial& f : vd.spec.functions) {
            sum_sq += std::norm(f.evaluate(std::span<const std::complex<double>>(z.data(), n)));
        }
        const double re_last = (-t - sum_sq) / 2.0;
        const double im_last = radius * (2.0 * u[2 * n + 1] - 1.0);
        z[n] = std::complex<double>(re_last, im_last);
        const double r = 2.0 * re_last + sum_sq;
        if (accept(r)) {
            points.push_back(std::move(z));
        }
    }
    if (points.size() < n_samples) {
        throw std::runtime_error("strip sampler failed to reach the requested count");
    }
    return points;
}

void check_sampling_args(double delta, double radius) {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    if (!(radius > 0.0) || !(radius <= 1.0)) {
        throw std::invalid_argument("radius must lie in (0, 1]");
    }
}

}  // namespace

StripSample sample_strip(const ValidatedDomain& vd, double delta, std::size_t n_samples,
                         double radius, std::uint64_t seed, DepthDistribution depth) {
    check_sampling_args(delta, radius);
    StripSample sample;
    sample.delta = delta;
    sample.radius = radius;
    sample.seed = seed;
    sample.depth = depth;
    const auto depth_of = [delta, depth](double u) {
        if (depth == DepthDistribution::LOG) {
            return delta * std::pow(10.0, -3.0 * u);
        }
        return delta * std::max(u, 1e-12);
    };
    const auto accept = [delta](double r) { return -delta < r && r < 0.0; };
    sample.points = draw_points(vd, n_samples, radius, seed * 1000003ULL, depth_of, accept);
    return sample;
}

double smallest_eigenvalue(const Eigen::MatrixXcd& hermitian) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian,
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("Hermitian eigenvalue computation failed");
    }
    return solver.eigenvalues()(0);
}

RungStats min_levi_eigen(const WeightFamily& wf, const StripSample& sample) {
    if (sample.points.empty()) {
        throw EmptySample();
    }
    RungStats stats;
    stats.delta = sample.delta;
    stats.n_samples = sample.points.size();
    std::vector<double> eigs;
    eigs.reserve(sample.points.size());
    bool first = true;
    for (const Eigen::VectorXcd& z : sample.points) {
        const Eigen::MatrixXcd H = wf.eval_full(sample.delta, z).hessian;
        if (!H.allFinite()) {
            throw NonFiniteHessian(z);
        }
        const double lambda = smallest_eigenvalue(H);
        eigs.push_back(lambda);
        if (first || lambda < stats.min_eig) {
            stats.min_eig = lambda;
            stats.argmin = z;
            first = false;
        }
    }
    std::sort(eigs.begin(), eigs.end());
    const std::size_t rank =
        std::max<std::size_t>(1, static_cast<std::size_t>(
                                     std::ceil(0.01 * static_cast<double>(eigs.size()))));
    stats.q01_eig = eigs[std::min(rank, eigs.size()) - 1];
    return stats;
}

FitResult fit_exponent(const std::vector<RungStats>& rungs) {
    if (rungs.size() < 3) {
        throw TooFewDeltas();
    }
    for (const RungStats& rung : rungs) {
        if (!(rung.min_eig > 0.0)) {
            throw NonPositiveEigen(rung);
        }
    }
    const std::size_t n = rungs.size();
    double mean_x = 0.0;
    double mean_y = 0.0;
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = std::log(1.0 / rungs[i].delta);
        ys[i] = std::log(rungs[i].min_eig);
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) {
        throw TooFewDeltas();
    }
    FitResult fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    const double ss_res = syy - fit.slope * sxy;
    fit.r_squared = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
    return fit;
}

BoundedReport check_bounded(const WeightFamily& wf, const std::vector<double>& deltas,
                            std::size_t n_samples, double radius, std::uint64_t seed) {
    BoundedReport report;
    report.rungs.reserve(deltas.size());
    for (double delta : deltas) {
        StripSample sample = sample_strip(wf.domain(), delta, n_samples, radius, seed);
        BoundedRung rung;
        rung.delta = delta;
        bool first = true;
        for (const Eigen::VectorXcd& z : sample.points) {
            const double raw = wf.eval_weight_raw(delta, z);
            const double unit = (raw + std::log(2.0) + wf.K()) / wf.B();
            if (first) {
                rung.sup_abs_raw = std::abs(raw);
                rung.unit_min = unit;
                rung.unit_max = unit;
                first = false;
            } else {
                rung.sup_abs_raw = std::max(rung.sup_abs_raw, std::abs(raw));
                rung.unit_min = std::min(rung.unit_min, unit);
                rung.unit_max = std::max(rung.unit_max, unit);
            }
        }
        if (rung.sup_abs_raw > wf.B()) {
            report.exceeds_analytic_bound = true;
        }
        report.rungs.push_back(rung);
    }
    double sup_min = 0.0;
    double sup_max = 0.0;
    bool first = true;
    for (const BoundedRung& rung : report.rungs) {
        if (first) {
            sup_min = rung.sup_abs_raw;
            sup_max = rung.sup_abs_raw;
            first = false;
        } else {
            sup_min = std::min(sup_min, rung.sup_abs_raw);
            sup_max = std::max(sup_max, rung.sup_abs_raw);
        }
    }
    if (!first && sup_min > 0.0 && sup_max > 2.0 * sup_min) {
        report.growth_flag = true;
    }
    return report;
}

PshGlobalReport check_psh_global(const WeightFamily& wf, double delta, std::size_t n_samples,
                                 double radius, std::uint64_t seed) {
    check_sampling_args(delta, radius);
    PshGlobalReport report;
    report.delta = delta;
    const ValidatedDomain& vd = wf.domain();
    const double em2 = std::exp(-2.0);

    struct ZonePlan {
        GlobalZone expected;
        PshZoneStats* stats;
        std::vector<Eigen::VectorXcd> points;
    };
    ZonePlan zones[3] = {{GlobalZone::AFFINE, &report.inner, {}},
                         {GlobalZone::TRANSITION, &report.transition, {}},
                         {GlobalZone::ZERO, &report.outer, {}}};

    zones[0].points = draw_points(
        vd, n_samples, radius, (seed * 3 + 0) * 1000003ULL,
        [delta](double u) { return 0.5 * delta * std::pow(10.0, -3.0 * u); },
        [delta](double r) { return -0.5 * delta < r && r < 0.0; });
    zones[1].points = draw_points(
        vd, n_samples, radius, (seed * 3 + 1) * 1000003ULL,
        [delta](double u) { return delta * (1.0 + u) / 2.0; },
        [delta](double r) { return -delta < r && r <= -0.5 * delta; });
    zones[2].points = draw_points(
        vd, n_samples, radius, (seed * 3 + 2) * 1000003ULL,
        [delta](double u) { return delta * std::pow(50.0, u); },
        [delta](double r) { return r <= -delta; });

    double worst_gap = 0.0;
    bool first_gap = true;
    for (int zi = 0; zi < 3; ++zi) {
        ZonePlan& zone = zones[zi];
        for (const Eigen::VectorXcd& z : zone.points) {
            const GlobalEvaluation ge = wf.eval_global(delta, z);
            const double lambda = smallest_eigenvalue(ge.hessian.matrix);
            const double scale = ge.hessian.matrix.cwiseAbs().maxCoeff();

            PshZoneStats& stats = *zone.stats;
            if (stats.count == 0) {
                stats.psi_min = ge.psi;
                stats.psi_max = ge.psi;
                stats.lambda_min = lambda;
            } else {
                stats.psi_min = std::min(stats.psi_min, ge.psi);
                stats.psi_max = std::max(stats.psi_max, ge.psi);
                stats.lambda_min = std::min(stats.lambda_min, lambda);
            }
            ++stats.count;

            if (lambda < -1e-9 * (1.0 + scale)) {
                report.violations.push_back(PshViolation{
                    z, lambda, ge.zone, ge.psi,
                    "negative Levi eigenvalue in the " + zone_token(ge.zone) + " branch"});
            }
            if (zi == 2) {
                const bool zero_zone = ge.zone == GlobalZone::ZERO && ge.value == 0.0 &&
                                       (ge.hessian.matrix.array() == 0.0).all();
                if (!zero_zone) {
                    report.outer_exactly_zero = false;
                    report.violations.push_back(PshViolation{
                        z, lambda, ge.zone, ge.psi,
                        "outer zone point is not on the zero plateau"});
                }
            }
            if (zi == 0) {
                bool affine_ok = ge.zone == GlobalZone::AFFINE &&
                                 ge.value == ge.psi - theta_offset();
                if (affine_ok) {
                    affine_ok = (ge.hessian.matrix.array() == ge.psi_hessian.array()).all();
                }
                if (!affine_ok) {
                    report.inner_affine_identity = false;
                    report.violations.push_back(PshViolation{
                        z, lambda, ge.zone, ge.psi,
                        "inner zone point is not on the affine branch"});
                }
                const double unit_lambda = smallest_eigenvalue(ge.weight.hessian);
                const double gap = lambda - em2 * unit_lambda;
                if (first_gap || gap < worst_gap) {
                    worst_gap = gap;
                    first_gap = false;
                }
            }
        }
    }
    report.inner_worst_gap = worst_gap;
    return report;
}

TermDecomposition decompose_terms(const WeightFamily& wf, double delta,
                                  const Eigen::VectorXcd& point, const Eigen::VectorXcd& u) {
    const std::uint32_t n = wf.n();
    if (point.size() != static_cast<Eigen::Index>(n) + 1) {
        throw std::invalid_argument("point must have n+1 coordinates");
    }
    if (u.size() != static_cast<Eigen::Index>(n)) {
        throw std::invalid_argument("direction must have n tangential components");
    }
    if (std::abs(u.norm() - 1.0) > 1e-9) {
        throw std::invalid_argument("direction must be a unit vector");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    const double r = wf.domain().eval_r(
        std::span<const std::complex<double>>(point.data(), point.size()));
    if (!(delta - r > 0.0)) {
        throw NonPositiveLogArgument("decomposition undefined where delta - r <= 0");
    }

    const double ld = std::log(delta);
    TermDecomposition out;
    out.A.resize(n, 0.0);
    out.B.resize(n);
    out.C.resize(n, 0.0);
    out.D.resize(n, 0.0);
    out.comparison.resize(n, 0.0);

    for (std::uint32_t j = 0; j < n; ++j) {
        std::complex<double> df_dot(0.0, 0.0);
        for (std::uint32_t i = 0; i < n; ++i) {
            df_dot += wf.eval_df(j, i, point) * u[i];
        }
        out.A[j] = std::norm(df_dot) / delta;
        out.B[j].assign(wf.h_range(j), 0.0);

        const double dj = std::exp(wf.gamma(j) * ld);
        const double s = std::norm(point[j]) / dj;
        const ScalarJet chi = smooth_cutoff(s);
        const double L1 = 1.0 / (1.0 + s);
        const double F1 = chi.d1 * std::log1p(s) + chi.value * L1;
        const double F2 = chi.d2 * std::log1p(s) + 2.0 * chi.d1 * L1 - chi.value * L1 * L1;
        out.C[j] = (F1 + s * F2) / dj * std::norm(u[j]);
        out.comparison[j] = std::norm(u[j]) / dj;
    }
    for (std::size_t idx = 0; idx < wf.bterm_count(); ++idx) {
        const WeightFamily::BTermInfo info = wf.bterm_info(idx);
        std::complex<double> dg_dot(0.0, 0.0);
        for (std::uint32_t i = 0; i < n; ++i) {
            dg_dot += wf.eval_bterm_grad(idx, i, point) * u[i];
        }
        const double mh = static_cast<double>(wf.domain().orders.m[info.j] - info.h);
        const double scale = std::exp(-mh * wf.gamma(info.j) * ld);
        out.B[info.j][info.h - 1] = scale * std::norm(dg_dot);
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        double sum_b = 0.0;
        for (double b : out.B[j]) {
            sum_b += b;
        }
        out.D[j] = out.A[j] + sum_b + wf.params().c * out.C[j];
    }
    return out;
}

double fd_self_test(const WeightFamily& wf, double delta, std::size_t n_points,
                    std::uint64_t seed) {
    if (n_points == 0) {
        return 0.0;
    }
    const StripSample sample = sample_strip(wf.domain(), delta, n_points, 0.5, seed);
    const std::uint32_t dim = wf.n() + 1;

    double worst = 0.0;
    for (const Eigen::VectorXcd& z : sample.points) {
        const WeightEvaluation full = wf.eval_full(delta, z);
        double z_inf = 0.0;
        for (std::uint32_t i = 0; i < dim; ++i) {
            z_inf = std::max(z_inf, std::abs(z[i]));
        }
        const double w = delta - full.r;
        const double h = std::min(1e-4 * std::max(1.0, z_inf), w / 200.0);

        const auto value_at = [&](std::uint32_t coord, double step_a, std::uint32_t coord_b,
                                  double step_b) {
            Eigen::VectorXcd p = z;
            const auto bump_coord = [&p](std::uint32_t c, double step) {
                const std::uint32_t idx = c / 2;
                std::complex<double> v = p[idx];
                if (c % 2 == 0) {
                    v += std::complex<double>(step, 0.0);
                } else {
                    v += std::complex<double>(0.0, step);
                }
                p[idx] = v;
            };
            bump_coord(coord, step_a);
            bump_coord(coord_b, step_b);
            return wf.eval_weight(delta, p);
        };
        const double center = wf.eval_weight(delta, z);

        const auto second_diff = [&](std::uint32_t a, std::uint32_t b, double step) {
            if (a == b) {
                return (value_at(a, step, a, 0.0) - 2.0 * center + value_at(a, -step, a, 0.0)) /
                       (step * step);
            }
            return (value_at(a, step, b, step) - value_at(a, step, b, -step) -
                    value_at(a, -step, b, step) + value_at(a, -step, b, -step)) /
                   (4.0 * step * step);
        };
        const auto refined = [&](std::uint32_t a, std::uint32_t b) {
            return (4.0 * second_diff(a, b, h / 2.0) - second_diff(a, b, h)) / 3.0;
        };

        Eigen::MatrixXcd fd = Eigen::MatrixXcd::Zero(dim, dim);
        for (std::uint32_t i = 0; i < dim; ++i) {
            for (std::uint32_t j = i; j < dim; ++j) {
                const double dxx = refined(2 * i, 2 * j);
                const double dyy = refined(2 * i + 1, 2 * j + 1);
                const double dxy = refined(2 * i, 2 * j + 1);
                const double dyx = refined(2 * i + 1, 2 * j);
                const std::complex<double> entry =
                    0.25 * std::complex<double>(dxx + dyy, dxy - dyx);
                fd(i, j) = entry;
                if (j != i) {
                    fd(j, i) = std::conj(entry);
                }
            }
        }
        const double scale = std::max(1.0, full.hessian.cwiseAbs().maxCoeff());
        const double err = (fd - full.hessian).cwiseAbs().maxCoeff() / scale;
        worst = std::max(worst, err);
    }
    return worst;
}

std::vector<double> default_deltas() {
    std::vector<double> deltas;
    deltas.reserve(7);
    for (int k = 0; k < 7; ++k) {
        deltas.push_back(std::pow(10.0, -2.0 - 0.5 * static_cast<double>(k)));
    }
    return deltas;
}

VerificationReport run_verification(const WeightFamily& wf, const VerificationConfig& config) {
    VerificationReport report;
    std::vector<double> deltas = config.deltas;
    if (deltas.empty()) {
        deltas = default_deltas();
    }
    std::sort(deltas.begin(), deltas.end(), std::greater<double>());

    for (double delta : deltas) {
        StripSample sample = sample_strip(wf.domain(), delta, config.samples_per_delta,
                                          config.radius, config.seed, config.depth);
        report.per_delta.push_back(min_levi_eigen(wf, sample));
    }

    report.all_eigen_positive = true;
    for (const RungStats& rung : report.per_delta) {
        if (!(rung.min_eig > 0.0)) {
            report.all_eigen_positive = false;
            if (!report.nonpositive_witness) {
                report.nonpositive_witness = rung;
            }
        }
    }

    report.target_slope = wf.index().gammas.back();
    if (report.per_delta.size() >= 3 && report.all_eigen_positive) {
        report.fit = fit_exponent(report.per_delta);
    }
    report.slope_ok =
        report.fit && report.fit->slope >= 0.9 * rational_to_double(report.target_slope);

    report.bounded = check_bounded(wf, deltas, config.samples_per_delta, config.radius,
                                   config.seed);
    report.psh = check_psh_global(wf, deltas.front(), config.psh_samples, config.radius,
                                  config.seed);

    bool psh_ok = report.psh.outer_exactly_zero && report.psh.inner_affine_identity;
    for (const PshViolation& v : report.psh.violations) {
        if (v.zone != GlobalZone::TRANSITION) {
            psh_ok = false;
        }
    }
    report.passed = report.all_eigen_positive && report.slope_ok && psh_ok &&
                    !report.bounded.exceeds_analytic_bound && !report.bounded.growth_flag;
    return report;
}

}  // namespace levigauge
