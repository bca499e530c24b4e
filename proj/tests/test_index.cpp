#include "levigauge/index.hpp"

#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

namespace lg = levigauge;

namespace {

lg::OrderData orders_of(const std::vector<std::string>& funcs) {
    lg::DomainSpec spec;
    spec.n = static_cast<std::uint32_t>(funcs.size());
    for (const std::string& text : funcs) {
        spec.functions.push_back(lg::parse_poly(text, spec.n));
    }
    return lg::validate(spec).orders;
}

lg::Rational rat(int num, int den = 1) { return lg::Rational(num, den); }

}  // namespace

TEST_CASE("mode tokens round trip") {
    CHECK(lg::parse_mode("t21") == lg::Mode::T21);
    CHECK(lg::parse_mode("t22") == lg::Mode::T22);
    CHECK(lg::parse_mode("t23") == lg::Mode::T23);
    CHECK(lg::parse_mode("auto") == lg::Mode::T23);
    CHECK(lg::mode_token(lg::Mode::T21) == "t21");
    CHECK(lg::mode_token(lg::Mode::T22) == "t22");
    CHECK(lg::mode_token(lg::Mode::T23) == "t23");
    CHECK_THROWS_AS(lg::parse_mode("t24"), std::invalid_argument);
    CHECK(lg::branch_token(lg::Branch::BASE) == "base");
    CHECK(lg::branch_token(lg::Branch::PURE) == "pure");
    CHECK(lg::branch_token(lg::Branch::MIXED) == "mixed");
}

TEST_CASE("multiplicity is the order product") {
    CHECK(lg::multiplicity(orders_of({"z1"})) == 1);
    CHECK(lg::multiplicity(orders_of({"z1^2", "z2^3 + z1^2"})) == 6);
    CHECK(lg::multiplicity(orders_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"})) == 96);
}

TEST_CASE("hybrid recursion on the mixed corpus domain") {
    const lg::OrderData orders = orders_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::IndexReport rep = lg::compute_gammas(orders, lg::Mode::T23);
    REQUIRE(rep.gammas.size() == 3);
    CHECK(rep.gammas[0] == rat(1, 6));
    CHECK(rep.gammas[1] == rat(1, 24));
    CHECK(rep.gammas[2] == rat(1, 32));
    CHECK(rep.epsilon == rat(1, 64));
    CHECK(rep.multiplicity == 96);
    REQUIRE(rep.branch.size() == 3);
    CHECK(rep.branch[0] == lg::Branch::BASE);
    CHECK(rep.branch[1] == lg::Branch::PURE);
    CHECK(rep.branch[2] == lg::Branch::MIXED);
}

TEST_CASE("pure recursion telescopes to the multiplicity") {
    const lg::OrderData orders = orders_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::IndexReport rep = lg::compute_gammas(orders, lg::Mode::T21);
    CHECK(rep.gammas[0] == rat(1, 6));
    CHECK(rep.gammas[1] == rat(1, 24));
    CHECK(rep.gammas[2] == rat(1, 96));
    CHECK(rep.epsilon == rat(1, 192));
    for (std::size_t j = 1; j < rep.branch.size(); ++j) {
        CHECK(rep.branch[j] == lg::Branch::PURE);
    }
}

TEST_CASE("coupling-driven recursion rejects low own powers") {
    const lg::OrderData orders = orders_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    try {
        lg::compute_gammas(orders, lg::Mode::T22);
        FAIL("expected a mode hypothesis violation");
    } catch (const lg::ModeHypothesisViolated& e) {
        CHECK(e.mode() == lg::Mode::T22);
        CHECK(e.function_index() == 2U);
    }
}

TEST_CASE("coupling-driven recursion on a clean chain") {
    const lg::OrderData orders = orders_of({"z1^2", "z2^3 + z1^2", "z3^4 + z2^3"});
    const lg::IndexReport rep = lg::compute_gammas(orders, lg::Mode::T22);
    CHECK(rep.gammas[0] == rat(1, 2));
    CHECK(rep.gammas[1] == rat(1, 3));
    CHECK(rep.gammas[2] == rat(1, 4));
    CHECK(rep.epsilon == rat(1, 8));
    CHECK(rep.branch[1] == lg::Branch::MIXED);
    CHECK(rep.branch[2] == lg::Branch::MIXED);

    const lg::IndexReport hybrid = lg::compute_gammas(orders, lg::Mode::T23);
    CHECK(hybrid.gammas == rep.gammas);
}

TEST_CASE("missing coupling falls back to the pure step") {
    const lg::OrderData orders = orders_of({"z1^2", "z2^3"});
    const lg::IndexReport rep = lg::compute_gammas(orders, lg::Mode::T22);
    CHECK(rep.gammas[1] == rat(1, 6));
    CHECK(rep.branch[1] == lg::Branch::PURE);
}

TEST_CASE("two-step chains reproduce known indices") {
    struct Case {
        std::vector<std::string> funcs;
        lg::Rational gamma_n;
    };
    const Case cases[] = {
        {{"z1^2", "z2^2 + z1^2"}, rat(1, 2)},
        {{"z1^2", "z2^3 + z1^2"}, rat(1, 3)},
        {{"z1^2", "z2^4 + z1^2"}, rat(1, 4)},
        {{"z1^3", "z2^3 + z1^3"}, rat(1, 3)},
        {{"z1^3", "z2^4 + z1^3"}, rat(1, 4)},
        {{"z1^2", "z2^2 + z1^2", "z3^2 + z2^2"}, rat(1, 2)},
        {{"z1^2", "z2^3 + z1^2", "z3^4 + z2^3"}, rat(1, 4)},
    };
    for (const Case& c : cases) {
        const lg::IndexReport rep = lg::compute_gammas(orders_of(c.funcs), lg::Mode::T23);
        CHECK(rep.gammas.back() == c.gamma_n);
        CHECK(rep.epsilon == c.gamma_n / 2);
    }
}

TEST_CASE("gamma bounds hold on every corpus domain") {
    const std::vector<std::vector<std::string>> corpus = {
        {"z1"},
        {"z1^2", "z2^3 + z1^2"},
        {"z1^2", "z2^2 + z1^2", "z3^2 + z2^2"},
        {"z1^2", "z2^3 + z1^2", "z3^4 + z2^3"},
        {"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"},
    };
    for (const auto& funcs : corpus) {
        const lg::OrderData orders = orders_of(funcs);
        for (lg::Mode mode : {lg::Mode::T21, lg::Mode::T23}) {
            const lg::IndexReport rep = lg::compute_gammas(orders, mode);
            const lg::Integer mult = lg::multiplicity(orders);
            CHECK(rep.gammas.back() >= lg::Rational(1) / lg::Rational(mult));
            for (std::size_t j = 0; j < rep.gammas.size(); ++j) {
                CHECK(rep.gammas[j] > 0);
                CHECK(rep.gammas[j] <= lg::Rational(1, orders.m[j]));
            }
        }
    }
}

TEST_CASE("alpha exponents satisfy the telescoping identity") {
    const lg::OrderData orders = orders_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const std::vector<lg::Rational> unit = lg::alpha_exponents(orders, rat(1));
    REQUIRE(unit.size() == 3);
    CHECK(unit[0] == rat(16));
    CHECK(unit[1] == rat(4));
    CHECK(unit[2] == rat(1));

    const std::vector<lg::Rational> scaled = lg::alpha_exponents(orders, rat(3, 2));
    CHECK(scaled[0] == rat(24));
    CHECK(scaled[2] == rat(3, 2));
    for (std::size_t j = 1; j < scaled.size(); ++j) {
        const lg::Rational lhs = (scaled[j - 1] - 1) - scaled[j] * rat(orders.m[j] - 1);
        CHECK(lhs == scaled[j] - 1);
    }

    CHECK_THROWS_AS(lg::alpha_exponents(orders, rat(1, 2)), std::invalid_argument);
}

TEST_CASE("default alpha argument is one") {
    const lg::OrderData orders = orders_of({"z1^2", "z2^3 + z1^2"});
    const lg::IndexReport rep = lg::compute_gammas(orders, lg::Mode::T23);
    REQUIRE(rep.alphas.size() == 2);
    CHECK(rep.alphas[0] == rat(3));
    CHECK(rep.alphas[1] == rat(1));
}
