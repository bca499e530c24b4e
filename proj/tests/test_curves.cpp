#include "levigauge/curves.hpp"

#include "doctest.h"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lg = levigauge;

namespace {

lg::ValidatedDomain domain_of(const std::vector<std::string>& funcs) {
    lg::DomainSpec spec;
    spec.n = static_cast<std::uint32_t>(funcs.size());
    for (const std::string& text : funcs) {
        spec.functions.push_back(lg::parse_poly(text, spec.n));
    }
    return lg::validate(spec);
}

using OptExp = std::optional<std::uint32_t>;

}  // namespace

TEST_CASE("curve construction and rendering") {
    const lg::MonomialCurve c = lg::make_curve({OptExp{3}, std::nullopt, OptExp{1}});
    CHECK(c.base_order() == 1U);
    CHECK(c.to_string() == "3,0,1");
    CHECK_THROWS_AS(lg::make_curve({std::nullopt, std::nullopt}), std::invalid_argument);
    CHECK_THROWS_AS(lg::make_curve({OptExp{0}}), std::invalid_argument);
}

TEST_CASE("curve parsing") {
    const lg::MonomialCurve c = lg::parse_curve("16, 4, 3", 3);
    REQUIRE(c.exps.size() == 3);
    CHECK(c.exps[0] == 16U);
    CHECK(c.exps[1] == 4U);
    CHECK(c.exps[2] == 3U);
    CHECK(lg::parse_curve("1,0", 2).exps[1] == std::nullopt);
    CHECK_THROWS_AS(lg::parse_curve("1,2", 3), std::invalid_argument);
    CHECK_THROWS_AS(lg::parse_curve("1,x", 2), std::invalid_argument);
    CHECK_THROWS_AS(lg::parse_curve("0,0", 2), std::invalid_argument);
    CHECK_THROWS_AS(lg::parse_curve("", 1), std::invalid_argument);
}

TEST_CASE("canonical curve from gamma ratios") {
    const lg::ValidatedDomain c4 = domain_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::IndexReport idx = lg::compute_gammas(c4.orders, lg::Mode::T23);
    const lg::MonomialCurve curve = lg::canonical_curve(idx);
    CHECK(curve.to_string() == "16,4,3");

    const lg::ValidatedDomain bis = domain_of({"z1^2", "z2^3 + z1^2"});
    const lg::IndexReport bidx = lg::compute_gammas(bis.orders, lg::Mode::T23);
    CHECK(lg::canonical_curve(bidx).to_string() == "3,2");

    const lg::ValidatedDomain ball = domain_of({"z1"});
    const lg::IndexReport ballidx = lg::compute_gammas(ball.orders, lg::Mode::T23);
    CHECK(lg::canonical_curve(ballidx).to_string() == "1");
}

TEST_CASE("contact orders on the mixed corpus domain") {
    const lg::ValidatedDomain c4 = domain_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::MonomialCurve canonical = lg::parse_curve("16,4,3", 3);
    const std::optional<lg::Rational> contact = lg::contact_order(c4, canonical);
    REQUIRE(contact.has_value());
    CHECK(*contact == lg::Rational(32, 3));

    CHECK(lg::contact_order(c4, lg::parse_curve("1,0,0", 3)) == lg::Rational(2));
    CHECK(lg::contact_order(c4, lg::parse_curve("0,1,0", 3)) == lg::Rational(6));
    CHECK(lg::contact_order(c4, lg::parse_curve("0,0,1", 3)) == lg::Rational(8));
}

TEST_CASE("contact picks up exact cancellation") {
    const lg::ValidatedDomain c4 = domain_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::MonomialCurve aligned = lg::parse_curve("3,1,0", 3);
    const std::optional<lg::Rational> contact = lg::contact_order(c4, aligned);
    REQUIRE(contact.has_value());
    CHECK(*contact == lg::Rational(36));
}

TEST_CASE("contact orders are scale invariant") {
    const lg::ValidatedDomain bis = domain_of({"z1^2", "z2^3 + z1^2"});
    const std::optional<lg::Rational> once = lg::contact_order(bis, lg::parse_curve("3,2", 2));
    const std::optional<lg::Rational> twice = lg::contact_order(bis, lg::parse_curve("6,4", 2));
    const std::optional<lg::Rational> thrice = lg::contact_order(bis, lg::parse_curve("9,6", 2));
    REQUIRE(once.has_value());
    CHECK(*once == lg::Rational(6));
    CHECK(once == twice);
    CHECK(once == thrice);
}

TEST_CASE("identically vanishing composition reports no contact") {
    const std::vector<lg::Polynomial> funcs = {lg::parse_poly("z2^4 - z1*z2", 2)};
    const std::optional<lg::Rational> contact =
        lg::contact_order(funcs, lg::parse_curve("3,1", 2));
    CHECK_FALSE(contact.has_value());
}

TEST_CASE("type report bounds on the coupled chain") {
    const lg::ValidatedDomain bis = domain_of({"z1^2", "z2^3 + z1^2"});
    const lg::IndexReport idx = lg::compute_gammas(bis.orders, lg::Mode::T23);
    const lg::TypeReport rep = lg::type_report(bis, idx);
    CHECK(rep.lower_bound_D == lg::Rational(6));
    CHECK(rep.upper_bound_D == 12);
    CHECK(rep.epsilon_consistency);
    CHECK(rep.warnings.empty());
    REQUIRE(rep.tested_curves.size() == 3);
    CHECK(rep.tested_curves[0].label == "canonical");
    CHECK(rep.tested_curves[0].curve.to_string() == "3,2");
    CHECK(rep.tested_curves[0].contact == lg::Rational(6));
    CHECK(rep.tested_curves[1].contact == lg::Rational(4));
    CHECK(rep.tested_curves[2].contact == lg::Rational(6));
}

TEST_CASE("type report on the mixed corpus domain") {
    const lg::ValidatedDomain c4 = domain_of({"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"});
    const lg::IndexReport idx = lg::compute_gammas(c4.orders, lg::Mode::T23);
    const lg::TypeReport no_extra = lg::type_report(c4, idx);
    CHECK(no_extra.lower_bound_D == lg::Rational(32, 3));

    const lg::TypeReport rep =
        lg::type_report(c4, idx, {lg::parse_curve("3,1,0", 3)});
    CHECK(rep.upper_bound_D == 192);
    CHECK(rep.lower_bound_D == lg::Rational(36));
    CHECK(rep.epsilon_consistency);
    REQUIRE(rep.tested_curves.size() == 5);
    CHECK(rep.tested_curves[4].label == "extra-1");
    CHECK(rep.tested_curves[4].contact == lg::Rational(36));
}

TEST_CASE("epsilon consistency is the exact product comparison") {
    const std::vector<std::vector<std::string>> corpus = {
        {"z1"},
        {"z1^2", "z2^3 + z1^2"},
        {"z1^2", "z2^2 + z1^2", "z3^2 + z2^2"},
        {"z1^2", "z2^3 + z1^2", "z3^4 + z2^3"},
        {"z1^6", "z2^4 - z1*z2", "z3^4 - z2^3 + z1"},
    };
    for (const auto& funcs : corpus) {
        const lg::ValidatedDomain vd = domain_of(funcs);
        const lg::IndexReport idx = lg::compute_gammas(vd.orders, lg::Mode::T23);
        const lg::TypeReport rep = lg::type_report(vd, idx);
        CHECK(rep.epsilon_consistency);
        CHECK(idx.epsilon * rep.lower_bound_D <= 1);
    }
}
