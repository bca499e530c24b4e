#include "levigauge/weights.hpp"

#include <cmath>
#include <utility>

namespace levigauge {

namespace {

double bump(double s) { return s > 0.0 ? std::exp(-1.0 / s) : 0.0; }
double bump_d1(double s) { return s > 0.0 ? std::exp(-1.0 / s) / (s * s) : 0.0; }
double bump_d2(double s) {
    return s > 0.0 ? std::exp(-1.0 / s) * (1.0 - 2.0 * s) / (s * s * s * s) : 0.0;
}

/// Monotone blend sigma(x) = bump(x) / (bump(x) + bump(1-x)), 0 at 0, 1 at 1.
double sigma(double x) {
    const double a = bump(x);
    const double b = bump(1.0 - x);
    return a / (a + b);
}

double sigma_d1(double x) {
    const double a = bump(x);
    const double b = bump(1.0 - x);
    const double den = a + b;
    return (bump_d1(x) * b + a * bump_d1(1.0 - x)) / (den * den);
}

/// Composite Simpson integral of sigma over [0, x].
double sigma_integral(double x) {
    constexpr int kIntervals = 1024;
    const double h = x / kIntervals;
    double acc = sigma(0.0) + sigma(x);
    for (int i = 1; i < kIntervals; ++i) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * sigma(i * h);
    }
    return acc * h / 3.0;
}

/// F(s) = chi(s) log(1+s) and two derivatives, the cutoff summand shape.
ScalarJet cutoff_log_jet(double s) {
    const ScalarJet chi = smooth_cutoff(s);
    const double L = std::log1p(s);
    const double L1 = 1.0 / (1.0 + s);
    const double L2 = -L1 * L1;
    ScalarJet out;
    out.value = chi.value * L;
    out.d1 = chi.d1 * L + chi.value * L1;
    out.d2 = chi.d2 * L + 2.0 * chi.d1 * L1 + chi.value * L2;
    return out;
}

std::complex<double> complex_power(std::complex<double> base, std::uint32_t exp) {
    std::complex<double> result(1.0, 0.0);
    while (exp > 0) {
        if (exp & 1U) {
            result *= base;
        }
        exp >>= 1U;
        if (exp > 0) {
            base *= base;
        }
    }
    return result;
}

/// Adds scale * v v^* so that the result stays exactly Hermitian: the
/// diagonal receives real values and mirrored entries are exact conjugates.
void add_scaled_outer(Eigen::MatrixXcd& mat, const Eigen::VectorXcd& v, double scale) {
    const Eigen::Index n = v.size();
    for (Eigen::Index i = 0; i < n; ++i) {
        mat(i, i) += std::complex<double>(scale * std::norm(v[i]), 0.0);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const std::complex<double> val = scale * v[i] * std::conj(v[j]);
            mat(i, j) += val;
            mat(j, i) += std::conj(val);
        }
    }
}

}  // namespace

ScalarJet smooth_cutoff(double t) {
    if (t <= 1.0) {
        return ScalarJet{1.0, 0.0, 0.0};
    }
    if (t >= 2.0) {
        return ScalarJet{0.0, 0.0, 0.0};
    }
    const double a = bump(2.0 - t);
    const double b = bump(t - 1.0);
    const double ap = -bump_d1(2.0 - t);
    const double bp = bump_d1(t - 1.0);
    const double app = bump_d2(2.0 - t);
    const double bpp = bump_d2(t - 1.0);
    const double den = a + b;
    const double num = ap * b - a * bp;
    const double num_p = app * b - a * bpp;
    ScalarJet out;
    out.value = a / den;
    out.d1 = num / (den * den);
    out.d2 = (num_p * den - 2.0 * num * (ap + bp)) / (den * den * den);
    return out;
}

double theta_ramp_lower() { return 2.0 * std::exp(-2.0); }

double theta_ramp_upper() { return std::exp(-1.0); }

double theta_offset() { return 0.5 * (theta_ramp_lower() + theta_ramp_upper()); }

ScalarJet smooth_theta(double t) {
    const double lo = theta_ramp_lower();
    const double hi = theta_ramp_upper();
    if (t <= lo) {
        return ScalarJet{0.0, 0.0, 0.0};
    }
    if (t >= hi) {
        return ScalarJet{t - theta_offset(), 1.0, 0.0};
    }
    const double width = hi - lo;
    const double x = (t - lo) / width;
    ScalarJet out;
    out.value = width * sigma_integral(x);
    out.d1 = sigma(x);
    out.d2 = sigma_d1(x) / width;
    return out;
}

std::string zone_token(GlobalZone z) {
    switch (z) {
        case GlobalZone::ZERO:
            return "zero";
        case GlobalZone::TRANSITION:
            return "transition";
        case GlobalZone::AFFINE:
            return "affine";
    }
    return "zero";
}

std::complex<double> WeightFamily::CompiledPoly::eval(const Eigen::VectorXcd& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (const Term& term : terms) {
        std::complex<double> v = term.coeff;
        for (std::size_t i = 0; i < term.exps.size(); ++i) {
            if (term.exps[i] != 0) {
                v *= complex_power(z[static_cast<Eigen::Index>(i)], term.exps[i]);
            }
        }
        acc += v;
    }
    return acc;
}

WeightFamily::CompiledPoly WeightFamily::compile(const Polynomial& p) {
    CompiledPoly out;
    out.terms.reserve(p.terms().size());
    for (const auto& [exps, coeff] : p.terms()) {
        out.terms.push_back(CompiledPoly::Term{coeff.to_complex(), exps});
    }
    return out;
}

WeightFamily::WeightFamily(ValidatedDomain vd, IndexReport index, WeightParams params)
    : vd_(std::move(vd)), index_(std::move(index)), params_(std::move(params)) {
    if (!(params_.c > 0.0)) {
        throw std::invalid_argument("cutoff amplitude c must be positive");
    }
    if (index_.mode != params_.mode) {
        throw std::invalid_argument("index report mode differs from weight params mode");
    }
    const std::uint32_t n = vd_.spec.n;
    if (index_.gammas.size() != n) {
        throw std::invalid_argument("index report does not match the domain dimension");
    }

    gamma_.resize(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        gamma_[j] = rational_to_double(index_.gammas[j]);
    }
    const std::vector<Rational> alphas = alpha_exponents(vd_.orders, params_.alpha);
    alphaj_.resize(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        alphaj_[j] = rational_to_double(alphas[j]);
    }

    hrange_.resize(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        switch (params_.mode) {
            case Mode::T21:
                hrange_[j] = vd_.orders.m[j] - 1;
                break;
            case Mode::T22:
                hrange_[j] = 0;
                break;
            case Mode::T23:
                hrange_[j] = vd_.orders.k[j];
                break;
        }
    }
    K_ = 0.0;
    for (std::uint32_t h : hrange_) {
        K_ += h;
    }
    B_ = std::log(2.0) + K_ + params_.c * static_cast<double>(n) * std::log(3.0);

    f_.reserve(n);
    df_.resize(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        f_.push_back(compile(vd_.spec.functions[k]));
        df_[k].reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            df_[k].push_back(compile(wirtinger_derivative(vd_.spec.functions[k], i, 1)));
        }
    }
    for (std::uint32_t j = 0; j < n; ++j) {
        for (std::uint32_t h = 1; h <= hrange_[j]; ++h) {
            BTerm bt{j, h, static_cast<double>(vd_.orders.m[j] - h),
                     wirtinger_derivative(vd_.spec.functions[j], j, h), {}, {}};
            bt.compiled = compile(bt.poly);
            bt.grads.reserve(n);
            for (std::uint32_t i = 0; i < n; ++i) {
                bt.grads.push_back(compile(wirtinger_derivative(bt.poly, i, 1)));
            }
            bterms_.push_back(std::move(bt));
        }
    }
}

WeightFamily::BTermInfo WeightFamily::bterm_info(std::size_t idx) const {
    const BTerm& bt = bterms_.at(idx);
    return BTermInfo{bt.j, bt.h};
}

const Polynomial& WeightFamily::bterm_poly(std::size_t idx) const {
    return bterms_.at(idx).poly;
}

std::complex<double> WeightFamily::eval_bterm(std::size_t idx,
                                              const Eigen::VectorXcd& point) const {
    return bterms_.at(idx).compiled.eval(point);
}

std::complex<double> WeightFamily::eval_bterm_grad(std::size_t idx, std::uint32_t i,
                                                   const Eigen::VectorXcd& point) const {
    return bterms_.at(idx).grads.at(i).eval(point);
}

std::complex<double> WeightFamily::eval_f(std::uint32_t k, const Eigen::VectorXcd& point) const {
    return f_.at(k).eval(point);
}

std::complex<double> WeightFamily::eval_df(std::uint32_t k, std::uint32_t i,
                                           const Eigen::VectorXcd& point) const {
    return df_.at(k).at(i).eval(point);
}

double WeightFamily::log_star_ratio(std::size_t idx, double delta) const {
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    const BTerm& bt = bterms_.at(idx);
    const double ld = std::log(delta);
    const double lld = std::log(std::abs(ld));
    const double log_a = bt.m_minus_h * (gamma_[bt.j] * ld - alphaj_[bt.j] * lld);
    return std::abs(log_a) / std::abs(ld);
}

WeightFamily::RParts WeightFamily::r_parts(const Eigen::VectorXcd& point) const {
    const std::uint32_t n = vd_.spec.n;
    if (point.size() != static_cast<Eigen::Index>(n) + 1) {
        throw std::invalid_argument("point must have n+1 coordinates");
    }
    RParts out;
    out.grad = Eigen::VectorXcd::Zero(n + 1);
    out.hess = Eigen::MatrixXcd::Zero(n + 1, n + 1);
    double sumsq = 0.0;
    Eigen::VectorXcd deriv_col = Eigen::VectorXcd::Zero(n + 1);
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::complex<double> fk = f_[k].eval(point);
        sumsq += std::norm(fk);
        for (std::uint32_t i = 0; i < n; ++i) {
            deriv_col[i] = df_[k][i].eval(point);
            out.grad[i] += std::conj(fk) * deriv_col[i];
        }
        add_scaled_outer(out.hess, deriv_col, 1.0);
    }
    out.grad[n] = std::complex<double>(1.0, 0.0);
    out.r = 2.0 * point[static_cast<Eigen::Index>(n)].real() + sumsq;
    return out;
}

WeightEvaluation WeightFamily::eval_impl(double delta, const Eigen::VectorXcd& point,
                                         bool with_derivatives, double* raw_value_out) const {
    const std::uint32_t n = vd_.spec.n;
    if (point.size() != static_cast<Eigen::Index>(n) + 1) {
        throw std::invalid_argument("point must have n+1 coordinates");
    }
    if (!(delta > 0.0) || !(delta < 1.0)) {
        throw std::invalid_argument("delta must lie in (0, 1)");
    }
    const double ld = std::log(delta);
    const double lld = std::log(std::abs(ld));

    std::vector<std::complex<double>> fv(n);
    double sumsq = 0.0;
    for (std::uint32_t k = 0; k < n; ++k) {
        fv[k] = f_[k].eval(point);
        sumsq += std::norm(fv[k]);
    }
    const double r = 2.0 * point[static_cast<Eigen::Index>(n)].real() + sumsq;
    const double w = delta - r;
    if (!(w > 0.0)) {
        throw NonPositiveLogArgument("weight undefined where delta - r <= 0 (delta = " +
                                     std::to_string(delta) + ", r = " + std::to_string(r) + ")");
    }

    WeightEvaluation out;
    out.r = r;
    double value = -std::log(w / delta);
    Eigen::VectorXcd grad;
    Eigen::MatrixXcd hess;
    if (with_derivatives) {
        grad = Eigen::VectorXcd::Zero(n + 1);
        hess = Eigen::MatrixXcd::Zero(n + 1, n + 1);

        Eigen::VectorXcd grad_r = Eigen::VectorXcd::Zero(n + 1);
        Eigen::VectorXcd deriv_col = Eigen::VectorXcd::Zero(n + 1);
        Eigen::MatrixXcd hess_r = Eigen::MatrixXcd::Zero(n + 1, n + 1);
        for (std::uint32_t k = 0; k < n; ++k) {
            for (std::uint32_t i = 0; i < n; ++i) {
                deriv_col[i] = df_[k][i].eval(point);
                grad_r[i] += std::conj(fv[k]) * deriv_col[i];
            }
            add_scaled_outer(hess_r, deriv_col, 1.0);
        }
        grad_r[n] = std::complex<double>(1.0, 0.0);

        grad = grad_r / w;
        hess = hess_r / w;
        add_scaled_outer(hess, grad_r, 1.0 / (w * w));
    }

    Eigen::VectorXcd bterm_grad;
    if (with_derivatives && !bterms_.empty()) {
        bterm_grad = Eigen::VectorXcd::Zero(n + 1);
    }
    for (const BTerm& bt : bterms_) {
        const double log_a = bt.m_minus_h * (gamma_[bt.j] * ld - alphaj_[bt.j] * lld);
        const double a = std::exp(log_a);
        const double L = std::abs(log_a);
        if (!(L > 0.0)) {
            throw std::domain_error("derivative ladder scale degenerates at this delta");
        }
        const std::complex<double> gv = bt.compiled.eval(point);
        const double q = std::norm(gv) + a;
        value += std::log(q) / L;
        if (with_derivatives) {
            for (std::uint32_t i = 0; i < n; ++i) {
                bterm_grad[i] = bt.grads[i].eval(point);
            }
            bterm_grad[n] = std::complex<double>(0.0, 0.0);
            grad += (std::conj(gv) / (q * L)) * bterm_grad;
            add_scaled_outer(hess, bterm_grad, a / (q * q * L));
        }
    }

    for (std::uint32_t j = 0; j < n; ++j) {
        const double dj = std::exp(gamma_[j] * ld);
        const double s = std::norm(point[j]) / dj;
        const ScalarJet F = cutoff_log_jet(s);
        value += params_.c * F.value;
        if (with_derivatives) {
            grad[j] += params_.c * F.d1 * std::conj(point[j]) / dj;
            hess(j, j) += std::complex<double>(params_.c * (F.d1 + s * F.d2) / dj, 0.0);
        }
    }

    if (raw_value_out != nullptr) {
        *raw_value_out = value;
    }
    if (params_.normalization == Normalization::UNIT_RANGE) {
        value = (value + std::log(2.0) + K_) / B_;
        if (with_derivatives) {
            grad /= B_;
            hess /= B_;
        }
    }
    out.value = value;
    if (with_derivatives) {
        out.gradient = std::move(grad);
        out.hessian = std::move(hess);
    }
    return out;
}

double WeightFamily::eval_weight(double delta, const Eigen::VectorXcd& point) const {
    return eval_impl(delta, point, false, nullptr).value;
}

double WeightFamily::eval_weight_raw(double delta, const Eigen::VectorXcd& point) const {
    double raw = 0.0;
    eval_impl(delta, point, false, &raw);
    return raw;
}

WeightEvaluation WeightFamily::eval_full(double delta, const Eigen::VectorXcd& point) const {
    return eval_impl(delta, point, true, nullptr);
}

LeviForm WeightFamily::levi_form(double delta, const Eigen::VectorXcd& point) const {
    LeviForm out;
    out.point = point;
    out.matrix = eval_full(delta, point).hessian;
    return out;
}

GlobalEvaluation WeightFamily::eval_global(double delta, const Eigen::VectorXcd& point) const {
    if (params_.normalization != Normalization::UNIT_RANGE) {
        throw std::logic_error("globalization requires the unit-range normalization");
    }
    const std::uint32_t n = vd_.spec.n;
    WeightEvaluation we = eval_full(delta, point);
    RParts rp = r_parts(point);

    const double scale_exp = std::exp(2.0 * we.r / delta);
    const double em2 = std::exp(-2.0);
    const double psi = scale_exp + em2 * we.value;

    Eigen::VectorXcd dpsi = (scale_exp * 2.0 / delta) * rp.grad + em2 * we.gradient;
    Eigen::MatrixXcd hpsi = (scale_exp * 2.0 / delta) * rp.hess + em2 * we.hessian;
    add_scaled_outer(hpsi, rp.grad, scale_exp * 4.0 / (delta * delta));

    GlobalEvaluation out;
    out.psi = psi;
    out.psi_hessian = std::move(hpsi);
    out.weight = std::move(we);
    out.hessian.point = point;

    if (psi <= theta_ramp_lower()) {
        out.zone = GlobalZone::ZERO;
        out.value = 0.0;
        out.hessian.matrix = Eigen::MatrixXcd::Zero(n + 1, n + 1);
        return out;
    }
    const ScalarJet th = smooth_theta(psi);
    out.value = th.value;
    if (psi >= theta_ramp_upper()) {
        out.zone = GlobalZone::AFFINE;
        out.hessian.matrix = out.psi_hessian;
        return out;
    }
    out.zone = GlobalZone::TRANSITION;
    out.hessian.matrix = th.d1 * out.psi_hessian;
    add_scaled_outer(out.hessian.matrix, dpsi, th.d2);
    return out;
}

}  // namespace levigauge
