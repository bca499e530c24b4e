#include "levigauge/poly.hpp"

#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

namespace lg = levigauge;

namespace {

lg::GaussianRational gr(int re, int im = 0) {
    return lg::GaussianRational(lg::Rational(re), lg::Rational(im));
}

lg::Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    return lg::Rational(num(rng), den(rng));
}

lg::GaussianRational random_coeff(std::mt19937_64& rng) {
    return {random_rational(rng), random_rational(rng)};
}

lg::Polynomial random_poly(std::mt19937_64& rng, std::uint32_t n_vars) {
    std::uniform_int_distribution<int> n_terms(0, 4);
    std::uniform_int_distribution<std::uint32_t> exp(0, 3);
    lg::Polynomial p(n_vars);
    const int count = n_terms(rng);
    for (int t = 0; t < count; ++t) {
        lg::Monomial mono(n_vars, 0);
        for (std::uint32_t v = 0; v < n_vars; ++v) {
            mono[v] = exp(rng);
        }
        p.add_term(mono, random_coeff(rng));
    }
    return p;
}

std::vector<lg::GaussianRational> random_point(std::mt19937_64& rng, std::uint32_t n_vars) {
    std::vector<lg::GaussianRational> point;
    point.reserve(n_vars);
    for (std::uint32_t v = 0; v < n_vars; ++v) {
        point.push_back(random_coeff(rng));
    }
    return point;
}

}  // namespace

TEST_CASE("parse single monomial") {
    const lg::Polynomial p = lg::parse_poly("z1^6", 3);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({6, 0, 0}) == gr(1));
}

TEST_CASE("parse sum with signs") {
    const lg::Polynomial p = lg::parse_poly("z3^4 - z2^3 + z1", 3);
    CHECK(p.term_count() == 3);
    CHECK(p.coefficient({0, 0, 4}) == gr(1));
    CHECK(p.coefficient({0, 3, 0}) == gr(-1));
    CHECK(p.coefficient({1, 0, 0}) == gr(1));
}

TEST_CASE("parse complex literal coefficient") {
    const lg::Polynomial p = lg::parse_poly("(1/2+1/2i)*z1*z2^2", 2);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient({1, 2}) ==
          lg::GaussianRational(lg::Rational(1, 2), lg::Rational(1, 2)));
}

TEST_CASE("parse accepts imaginary shorthand and products") {
    CHECK(lg::parse_poly("2i*z1", 1).coefficient({1}) == gr(0, 2));
    CHECK(lg::parse_poly("-z1*z2", 2).coefficient({1, 1}) == gr(-1));
    CHECK(lg::parse_poly("3/2*z1^2*z1", 1).coefficient({3}) ==
          lg::GaussianRational(lg::Rational(3, 2)));
    CHECK(lg::parse_poly("z1 - z1", 1).is_zero());
}

TEST_CASE("parse reports error positions") {
    CHECK_THROWS_AS(lg::parse_poly("z1 + + z2", 2), lg::PolyParseError);
    CHECK_THROWS_AS(lg::parse_poly("z5", 2), lg::PolyParseError);
    CHECK_THROWS_AS(lg::parse_poly("", 2), lg::PolyParseError);
    CHECK_THROWS_AS(lg::parse_poly("z1^", 2), lg::PolyParseError);
    CHECK_THROWS_AS(lg::parse_poly("1/0*z1", 1), lg::PolyParseError);
    try {
        lg::parse_poly("z1 @ z2", 2);
        FAIL("expected a parse error");
    } catch (const lg::PolyParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("parse rejects oversized exponents") {
    CHECK_THROWS_AS(lg::parse_poly("z1^2147483648", 1), lg::ExponentOverflow);
    CHECK_NOTHROW(lg::parse_poly("z1^2147483647", 1));
    CHECK_THROWS_AS(lg::parse_poly("z1^2000000000*z1^2000000000", 1), lg::ExponentOverflow);
}

TEST_CASE("wirtinger derivative power rule") {
    CHECK(lg::wirtinger_derivative(lg::parse_poly("z1^6", 3), 0, 1) ==
          lg::parse_poly("6*z1^5", 3));
    CHECK(lg::wirtinger_derivative(lg::parse_poly("z2^4 - z1*z2", 3), 1, 1) ==
          lg::parse_poly("4*z2^3 - z1", 3));
    CHECK(lg::wirtinger_derivative(lg::parse_poly("z3^4", 3), 2, 2) ==
          lg::parse_poly("12*z3^2", 3));
}

TEST_CASE("wirtinger derivative identity and annihilation") {
    const lg::Polynomial p = lg::parse_poly("z1^2*z2 + 3*z2^2", 2);
    CHECK(lg::wirtinger_derivative(p, 0, 0) == p);
    CHECK(lg::wirtinger_derivative(p, 0, 3).is_zero());
    CHECK(lg::wirtinger_derivative(p, 1, 3).is_zero());
}

TEST_CASE("complex evaluation") {
    using cd = std::complex<double>;
    const std::vector<cd> one_plus_i{cd(1.0, 1.0)};
    CHECK(lg::parse_poly("z1^2", 1).evaluate(one_plus_i) == cd(0.0, 2.0));
    CHECK(lg::Polynomial(2).evaluate(std::vector<cd>{cd(3, 0), cd(4, 0)}) == cd(0.0, 0.0));
    CHECK(lg::parse_poly("z2^4 - z1*z2", 2).evaluate(std::vector<cd>{cd(2, 0), cd(1, 0)}) ==
          cd(-1.0, 0.0));
}

TEST_CASE("monomial curve composition") {
    using Exps = std::vector<std::optional<std::uint32_t>>;
    const lg::UnivariatePolynomial cancel =
        lg::compose_monomial_curve(lg::parse_poly("z2^4 - z1*z2", 2), Exps{3, 1});
    CHECK(cancel.is_zero());
    CHECK_FALSE(cancel.min_order().has_value());

    const lg::UnivariatePolynomial doubled =
        lg::compose_monomial_curve(lg::parse_poly("z2^3 + z1^2", 2), Exps{3, 2});
    CHECK(doubled.terms().size() == 1);
    CHECK(doubled.terms().at(6) == gr(2));

    const lg::UnivariatePolynomial sub =
        lg::compose_monomial_curve(lg::parse_poly("z1", 1), Exps{5});
    CHECK(sub.terms().at(5) == gr(1));
    CHECK(sub.min_order() == 5U);

    const lg::UnivariatePolynomial omitted =
        lg::compose_monomial_curve(lg::parse_poly("z2^4 - z1*z2", 2), Exps{std::nullopt, 2});
    CHECK(omitted.terms().size() == 1);
    CHECK(omitted.terms().at(8) == gr(1));
}

TEST_CASE("support order scans") {
    const lg::SupportOrders f2 = lg::support_orders(lg::parse_poly("z2^4 - z1*z2", 2), 1);
    CHECK(f2.pure_min == 4U);
    CHECK(f2.min_positive == 1U);
    CHECK(f2.max_below(3) == 1U);

    const lg::SupportOrders f3 = lg::support_orders(lg::parse_poly("z3^4 - z2^3 + z1", 3), 2);
    CHECK(f3.pure_min == 4U);
    CHECK(f3.min_positive == 4U);
    CHECK(f3.max_below(3) == 0U);

    const lg::SupportOrders absent = lg::support_orders(lg::parse_poly("z1^6", 2), 1);
    CHECK_FALSE(absent.pure_min.has_value());
    CHECK_FALSE(absent.min_positive.has_value());
    CHECK(absent.max_below(100) == 0U);
}

TEST_CASE("ring laws on randomized polynomials") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 1000; ++iter) {
        const std::uint32_t n_vars = 2;
        const lg::Polynomial p = random_poly(rng, n_vars);
        const lg::Polynomial q = random_poly(rng, n_vars);
        const auto point = random_point(rng, n_vars);
        const lg::GaussianRational pv = p.evaluate_exact(point);
        const lg::GaussianRational qv = q.evaluate_exact(point);
        CHECK((p + q).evaluate_exact(point) == pv + qv);
        CHECK((p - q).evaluate_exact(point) == pv - qv);
        CHECK((p * q).evaluate_exact(point) == pv * qv);
    }
}

TEST_CASE("print parse round trip") {
    std::mt19937_64 rng(991);
    for (int iter = 0; iter < 200; ++iter) {
        const lg::Polynomial p = random_poly(rng, 3);
        const lg::Polynomial back = lg::parse_poly(p.to_string(), 3);
        CHECK(back == p);
    }
    const char* cases[] = {"z1^2", "z2^3 + z1^2", "z3^4 - z2^3 + z1",
                           "(1/2+1/2i)*z1*z2^2 - 3*z3", "0", "-z1 + 2i*z2"};
    for (const char* text : cases) {
        const lg::Polynomial p = lg::parse_poly(text, 3);
        CHECK(lg::parse_poly(p.to_string(), 3) == p);
    }
}

TEST_CASE("composition chain rule") {
    std::mt19937_64 rng(777);
    using Exps = std::vector<std::optional<std::uint32_t>>;
    const Exps curves[] = {Exps{2, 3, std::nullopt}, Exps{1, 1, 1}, Exps{std::nullopt, 4, 1}};
    for (int iter = 0; iter < 200; ++iter) {
        const lg::Polynomial p = random_poly(rng, 3);
        for (const Exps& curve : curves) {
            const lg::UnivariatePolynomial lhs =
                lg::compose_monomial_curve(p, curve).derivative();
            lg::UnivariatePolynomial rhs;
            for (std::uint32_t i = 0; i < 3; ++i) {
                if (!curve[i]) {
                    continue;
                }
                const lg::UnivariatePolynomial part =
                    lg::compose_monomial_curve(lg::wirtinger_derivative(p, i, 1), curve);
                rhs += part.times_power(*curve[i] - 1)
                           .scaled(lg::GaussianRational(lg::Rational(*curve[i])));
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("pure order matches derivative vanishing") {
    const lg::Polynomial f = lg::parse_poly("z2^4 - z1*z2", 2);
    const lg::SupportOrders so = lg::support_orders(f, 1);
    REQUIRE(so.pure_min.has_value());
    const std::vector<lg::GaussianRational> origin(2, lg::GaussianRational());
    const lg::Polynomial d4 = lg::wirtinger_derivative(f, 1, *so.pure_min);
    CHECK_FALSE(d4.evaluate_exact(origin).is_zero());
    const lg::Polynomial d3 = lg::wirtinger_derivative(f, 1, *so.pure_min - 1);
    CHECK(d3.evaluate_exact(origin).is_zero());
}

TEST_CASE("univariate operations") {
    lg::UnivariatePolynomial u;
    u.add_term(2, gr(3));
    u.add_term(5, gr(-1));
    CHECK(u.min_order() == 2U);

    const lg::UnivariatePolynomial du = u.derivative();
    CHECK(du.terms().at(1) == gr(6));
    CHECK(du.terms().at(4) == gr(-5));

    const lg::UnivariatePolynomial shifted = u.times_power(3);
    CHECK(shifted.terms().at(5) == gr(3));
    CHECK(shifted.terms().at(8) == gr(-1));

    const lg::UnivariatePolynomial scaled = u.scaled(gr(0, 1));
    CHECK(scaled.terms().at(2) == gr(0, 3));

    lg::UnivariatePolynomial cancel;
    cancel.add_term(2, gr(-3));
    cancel += u;
    CHECK(cancel.terms().count(2) == 0);
    CHECK(cancel.terms().size() == 1);

    CHECK(u.to_string() == "3*t^2 - t^5");
    CHECK(lg::UnivariatePolynomial().to_string() == "0");
}
