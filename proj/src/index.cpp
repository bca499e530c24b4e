#include "levigauge/index.hpp"

#include <cassert>
#include <limits>

namespace levigauge {

std::string mode_token(Mode mode) {
    switch (mode) {
        case Mode::T21:
            return "t21";
        case Mode::T22:
            return "t22";
        case Mode::T23:
            return "t23";
    }
    return "t23";
}

Mode parse_mode(const std::string& token) {
    if (token == "t21") {
        return Mode::T21;
    }
    if (token == "t22") {
        return Mode::T22;
    }
    if (token == "t23" || token == "auto") {
        return Mode::T23;
    }
    throw std::invalid_argument("unknown mode token: " + token);
}

std::string branch_token(Branch b) {
    switch (b) {
        case Branch::BASE:
            return "base";
        case Branch::PURE:
            return "pure";
        case Branch::MIXED:
            return "mixed";
    }
    return "base";
}

Integer multiplicity(const OrderData& orders) {
    Integer product = 1;
    for (std::uint32_t m_j : orders.m) {
        product *= m_j;
    }
    return product;
}

std::vector<Rational> alpha_exponents(const OrderData& orders, const Rational& alpha) {
    if (alpha < 1) {
        throw std::invalid_argument("alpha must be at least 1");
    }
    const std::size_t n = orders.m.size();
    std::vector<Rational> alphas(n);
    Rational tail = alpha;
    for (std::size_t jj = n; jj-- > 0;) {
        alphas[jj] = tail;
        tail *= orders.m[jj];
    }
    for (std::size_t jj = 1; jj < n; ++jj) {
        const Rational lhs = (alphas[jj - 1] - 1) - alphas[jj] * (orders.m[jj] - 1);
        assert(lhs == alphas[jj] - 1);
        (void)lhs;
    }
    return alphas;
}

namespace {

Rational pure_step(const std::vector<Rational>& gammas, std::uint32_t m_j) {
    Rational best = gammas[0];
    for (const Rational& g : gammas) {
        if (g < best) {
            best = g;
        }
    }
    return best / m_j;
}

/// Mixed step over the finite cross orders; empty optional when every
/// l entry of this row is infinite.
std::optional<Rational> mixed_step(const std::vector<Rational>& gammas,
                                   const std::vector<std::optional<std::uint32_t>>& l_row,
                                   std::uint32_t m_j) {
    std::optional<Rational> best;
    for (std::size_t ii = 0; ii < l_row.size(); ++ii) {
        if (!l_row[ii]) {
            continue;
        }
        Rational candidate = (Rational(*l_row[ii]) * gammas[ii]) / m_j;
        if (!best || candidate < *best) {
            best = candidate;
        }
    }
    return best;
}

}  // namespace

IndexReport compute_gammas(const OrderData& orders, Mode mode, const Rational& alpha) {
    const std::size_t n = orders.m.size();
    if (n == 0) {
        throw std::invalid_argument("order data is empty");
    }
    if (mode == Mode::T22) {
        for (std::size_t jj = 1; jj < n; ++jj) {
            if (orders.k[jj] != 0) {
                throw ModeHypothesisViolated(mode, static_cast<std::uint32_t>(jj + 1));
            }
        }
    }

    IndexReport report;
    report.mode = mode;
    report.gammas.reserve(n);
    report.branch.reserve(n);
    report.gammas.emplace_back(Rational(1) / orders.m[0]);
    report.branch.push_back(Branch::BASE);

    for (std::size_t jj = 1; jj < n; ++jj) {
        const std::uint32_t m_j = orders.m[jj];
        bool use_pure = false;
        switch (mode) {
            case Mode::T21:
                use_pure = true;
                break;
            case Mode::T22:
                use_pure = false;
                break;
            case Mode::T23:
                use_pure = orders.k[jj] != 0;
                break;
        }
        if (use_pure) {
            report.gammas.push_back(pure_step(report.gammas, m_j));
            report.branch.push_back(Branch::PURE);
        } else {
            std::optional<Rational> mixed = mixed_step(report.gammas, orders.l[jj], m_j);
            if (mixed) {
                report.gammas.push_back(*mixed);
                report.branch.push_back(Branch::MIXED);
            } else {
                report.gammas.push_back(pure_step(report.gammas, m_j));
                report.branch.push_back(Branch::PURE);
            }
        }
    }

    report.epsilon = report.gammas.back() / 2;
    report.multiplicity = multiplicity(orders);
    report.alphas = alpha_exponents(orders, alpha);

    const Rational inv_mult = Rational(1) / Rational(report.multiplicity);
    for (std::size_t jj = 0; jj < n; ++jj) {
        assert(report.gammas[jj] > 0);
        assert(report.gammas[jj] * orders.m[jj] <= 1);
        (void)jj;
    }
    assert(report.gammas.back() >= inv_mult);
    (void)inv_mult;
    return report;
}

}  // namespace levigauge
