#include "levigauge/curves.hpp"

#include <algorithm>
#include <sstream>

namespace levigauge {

std::uint32_t MonomialCurve::base_order() const {
    std::uint32_t best = 0;
    for (const auto& e : exps) {
        if (e && (best == 0 || *e < best)) {
            best = *e;
        }
    }
    return best;
}

std::string MonomialCurve::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i > 0) {
            out << ",";
        }
        out << (exps[i] ? *exps[i] : 0U);
    }
    return out.str();
}

MonomialCurve make_curve(std::vector<std::optional<std::uint32_t>> exps) {
    bool any = false;
    for (const auto& e : exps) {
        if (e) {
            if (*e == 0) {
                throw std::invalid_argument("curve exponents must be positive; use 0 only to omit a component");
            }
            any = true;
        }
    }
    if (!any) {
        throw std::invalid_argument("curve must have at least one nonzero component");
    }
    return MonomialCurve{std::move(exps)};
}

MonomialCurve parse_curve(const std::string& text, std::uint32_t n) {
    std::vector<std::optional<std::uint32_t>> exps;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t begin = token.find_first_not_of(" \t");
        std::size_t end = token.find_last_not_of(" \t");
        if (begin == std::string::npos) {
            throw std::invalid_argument("empty curve component in \"" + text + "\"");
        }
        token = token.substr(begin, end - begin + 1);
        if (token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
            throw std::invalid_argument("curve component \"" + token + "\" is not a small non-negative integer");
        }
        const unsigned long value = std::stoul(token);
        if (value == 0) {
            exps.emplace_back(std::nullopt);
        } else {
            exps.emplace_back(static_cast<std::uint32_t>(value));
        }
    }
    if (exps.size() != n) {
        throw std::invalid_argument("curve \"" + text + "\" must list exactly " +
                                    std::to_string(n) + " exponents");
    }
    return make_curve(std::move(exps));
}

MonomialCurve canonical_curve(const IndexReport& index) {
    const std::size_t n = index.gammas.size();
    if (n == 0) {
        throw std::invalid_argument("index report is empty");
    }
    std::vector<Rational> ratios(n);
    Integer lcd = 1;
    for (std::size_t i = 0; i < n; ++i) {
        ratios[i] = index.gammas[i] / index.gammas[n - 1];
        lcd = boost::multiprecision::lcm(lcd, boost::multiprecision::denominator(ratios[i]));
    }
    std::vector<std::optional<std::uint32_t>> exps(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Rational scaled = ratios[i] * Rational(lcd);
        const Integer value = boost::multiprecision::numerator(scaled);
        if (value <= 0 || value > Integer(kMaxExponent)) {
            throw ExponentOverflow("canonical curve exponent out of range");
        }
        exps[i] = static_cast<std::uint32_t>(value.convert_to<std::uint64_t>());
    }
    return make_curve(std::move(exps));
}

std::optional<Rational> contact_order(std::span<const Polynomial> functions,
                                      const MonomialCurve& curve) {
    const std::uint32_t base = curve.base_order();
    if (base == 0) {
        throw std::invalid_argument("curve has no nonzero component");
    }
    std::optional<std::uint32_t> min_ord;
    for (const Polynomial& f : functions) {
        UnivariatePolynomial composed = compose_monomial_curve(f, curve.exps);
        std::optional<std::uint32_t> ord = composed.min_order();
        if (ord && (!min_ord || *ord < *min_ord)) {
            min_ord = ord;
        }
    }
    if (!min_ord) {
        return std::nullopt;
    }
    return Rational(2) * Rational(*min_ord) / Rational(base);
}

std::optional<Rational> contact_order(const ValidatedDomain& vd, const MonomialCurve& curve) {
    return contact_order(std::span<const Polynomial>(vd.spec.functions), curve);
}

TypeReport type_report(const ValidatedDomain& vd, const IndexReport& index,
                       const std::vector<MonomialCurve>& extra_curves) {
    TypeReport report;
    report.upper_bound_D = Integer(2) * index.multiplicity;

    std::vector<CurveContact> batch;
    batch.push_back(CurveContact{"canonical", canonical_curve(index), std::nullopt});
    for (std::uint32_t i = 0; i < vd.n(); ++i) {
        std::vector<std::optional<std::uint32_t>> exps(vd.n());
        exps[i] = 1;
        batch.push_back(CurveContact{"axis-" + std::to_string(i + 1),
                                     make_curve(std::move(exps)), std::nullopt});
    }
    for (std::size_t i = 0; i < extra_curves.size(); ++i) {
        batch.push_back(CurveContact{"extra-" + std::to_string(i + 1), extra_curves[i],
                                     std::nullopt});
    }

    std::optional<Rational> best;
    for (CurveContact& entry : batch) {
        entry.contact = contact_order(vd, entry.curve);
        if (entry.contact) {
            if (!best || *entry.contact > *best) {
                best = entry.contact;
            }
        } else {
            report.warnings.push_back("curve " + entry.curve.to_string() +
                                      " has infinite contact order; it lies inside the " +
                                      "zero variety of every boundary function");
        }
    }
    report.tested_curves = std::move(batch);
    report.lower_bound_D = best ? *best : Rational(0);
    report.epsilon_consistency = index.epsilon * report.lower_bound_D <= 1;
    return report;
}

}  // namespace levigauge
