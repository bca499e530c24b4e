#include "levigauge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

namespace levigauge {

namespace {

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

GaussianRational exact_power(const GaussianRational& base, std::uint32_t exp) {
    GaussianRational result(Rational(1), Rational(0));
    GaussianRational b = base;
    while (exp > 0) {
        if (exp & 1U) {
            result *= b;
        }
        exp >>= 1U;
        if (exp > 0) {
            b *= b;
        }
    }
    return result;
}

}  // namespace

Polynomial Polynomial::monomial(std::uint32_t n_vars, Monomial exps, GaussianRational coeff) {
    if (exps.size() != n_vars) {
        throw std::invalid_argument("monomial exponent vector length mismatch");
    }
    Polynomial p(n_vars);
    p.add_term(exps, coeff);
    return p;
}

void Polynomial::add_term(const Monomial& exps, const GaussianRational& coeff) {
    if (exps.size() != n_vars_) {
        throw std::invalid_argument("term exponent vector length mismatch");
    }
    if (coeff.is_zero()) {
        return;
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

GaussianRational Polynomial::coefficient(const Monomial& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? GaussianRational(Rational(0)) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.n_vars_ != n_vars_) {
        throw std::invalid_argument("polynomial variable count mismatch");
    }
    for (const auto& [exps, coeff] : o.terms_) {
        add_term(exps, coeff);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.n_vars_ != n_vars_) {
        throw std::invalid_argument("polynomial variable count mismatch");
    }
    for (const auto& [exps, coeff] : o.terms_) {
        add_term(exps, -coeff);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_vars_ != b.n_vars_) {
        throw std::invalid_argument("polynomial variable count mismatch");
    }
    Polynomial out(a.n_vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Monomial exps(a.n_vars_);
            for (std::uint32_t i = 0; i < a.n_vars_; ++i) {
                std::uint64_t sum = std::uint64_t(ea[i]) + std::uint64_t(eb[i]);
                if (sum > kMaxExponent) {
                    throw ExponentOverflow("product exponent exceeds " +
                                           std::to_string(kMaxExponent));
                }
                exps[i] = static_cast<std::uint32_t>(sum);
            }
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const GaussianRational& s) const {
    Polynomial out(n_vars_);
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [exps, coeff] : terms_) {
        out.terms_.emplace(exps, coeff * s);
    }
    return out;
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> point) const {
    if (point.size() != n_vars_) {
        throw std::invalid_argument("evaluation point length mismatch");
    }
    std::complex<double> total(0.0, 0.0);
    for (const auto& [exps, coeff] : terms_) {
        std::complex<double> term = coeff.to_complex();
        for (std::uint32_t i = 0; i < n_vars_; ++i) {
            if (exps[i] != 0) {
                term *= complex_power(point[i], exps[i]);
            }
        }
        total += term;
    }
    return total;
}

GaussianRational Polynomial::evaluate_exact(std::span<const GaussianRational> point) const {
    if (point.size() != n_vars_) {
        throw std::invalid_argument("evaluation point length mismatch");
    }
    GaussianRational total(Rational(0), Rational(0));
    for (const auto& [exps, coeff] : terms_) {
        GaussianRational term = coeff;
        for (std::uint32_t i = 0; i < n_vars_; ++i) {
            if (exps[i] != 0) {
                term *= exact_power(point[i], exps[i]);
            }
        }
        total += term;
    }
    return total;
}

namespace {

bool is_constant_monomial(const Monomial& exps) {
    return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
}

std::string monomial_to_string(const Monomial& exps) {
    std::string out;
    for (std::uint32_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "z" + std::to_string(i + 1);
        if (exps[i] > 1) {
            out += "^" + std::to_string(exps[i]);
        }
    }
    return out;
}

/// Appends one printed term; sign handling differs for the leading term.
void append_term(std::string& out, const Monomial& exps, const GaussianRational& coeff,
                 bool leading) {
    const bool constant = is_constant_monomial(exps);
    if (!coeff.is_real()) {
        if (!leading) {
            out += " + ";
        }
        out += coeff.to_string();
        if (!constant) {
            out += "*" + monomial_to_string(exps);
        }
        return;
    }
    const bool negative = coeff.re < 0;
    Rational mag = negative ? Rational(-coeff.re) : coeff.re;
    if (leading) {
        if (negative) {
            out += "-";
        }
    } else {
        out += negative ? " - " : " + ";
    }
    if (constant) {
        out += rational_to_string(mag);
        return;
    }
    if (mag != 1) {
        out += rational_to_string(mag) + "*";
    }
    out += monomial_to_string(exps);
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool leading = true;
    for (const auto& [exps, coeff] : terms_) {
        append_term(out, exps, coeff, leading);
        leading = false;
    }
    return out;
}

void UnivariatePolynomial::add_term(std::uint32_t exp, const GaussianRational& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

std::optional<std::uint32_t> UnivariatePolynomial::min_order() const {
    if (terms_.empty()) {
        return std::nullopt;
    }
    return terms_.begin()->first;
}

UnivariatePolynomial UnivariatePolynomial::derivative() const {
    UnivariatePolynomial out;
    for (const auto& [exp, coeff] : terms_) {
        if (exp == 0) {
            continue;
        }
        out.add_term(exp - 1, coeff * Rational(exp));
    }
    return out;
}

UnivariatePolynomial UnivariatePolynomial::times_power(std::uint32_t k) const {
    UnivariatePolynomial out;
    for (const auto& [exp, coeff] : terms_) {
        std::uint64_t shifted = std::uint64_t(exp) + std::uint64_t(k);
        if (shifted > kMaxExponent) {
            throw ExponentOverflow("shifted exponent exceeds " + std::to_string(kMaxExponent));
        }
        out.add_term(static_cast<std::uint32_t>(shifted), coeff);
    }
    return out;
}

UnivariatePolynomial UnivariatePolynomial::scaled(const GaussianRational& s) const {
    UnivariatePolynomial out;
    if (s.is_zero()) {
        return out;
    }
    for (const auto& [exp, coeff] : terms_) {
        out.terms_.emplace(exp, coeff * s);
    }
    return out;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& o) {
    for (const auto& [exp, coeff] : o.terms_) {
        add_term(exp, coeff);
    }
    return *this;
}

std::string UnivariatePolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool leading = true;
    for (const auto& [exp, coeff] : terms_) {
        const bool constant = (exp == 0);
        std::string mono = constant ? "" : (exp == 1 ? "t" : "t^" + std::to_string(exp));
        if (!coeff.is_real()) {
            out += leading ? "" : " + ";
            out += coeff.to_string();
            if (!constant) {
                out += "*" + mono;
            }
        } else {
            const bool negative = coeff.re < 0;
            Rational mag = negative ? Rational(-coeff.re) : coeff.re;
            if (leading) {
                if (negative) {
                    out += "-";
                }
            } else {
                out += negative ? " - " : " + ";
            }
            if (constant) {
                out += rational_to_string(mag);
            } else {
                if (mag != 1) {
                    out += rational_to_string(mag) + "*";
                }
                out += mono;
            }
        }
        leading = false;
    }
    return out;
}

namespace {

/// Recursive-descent parser over the polynomial grammar.
class PolyParser {
  public:
    PolyParser(std::string_view text, std::uint32_t n_vars) : text_(text), n_vars_(n_vars) {}

    Polynomial parse() {
        Polynomial out(n_vars_);
        skip_ws();
        if (at_end()) {
            fail("empty polynomial text");
        }
        int sign = 1;
        if (peek() == '+') {
            ++pos_;
        } else if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        parse_term(out, sign);
        skip_ws();
        while (!at_end()) {
            char sep = peek();
            if (sep == '+') {
                sign = 1;
            } else if (sep == '-') {
                sign = -1;
            } else {
                fail("expected '+' or '-' between terms");
            }
            ++pos_;
            parse_term(out, sign);
            skip_ws();
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool try_consume(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!try_consume(c)) {
            fail(std::string("expected '") + c + "' " + what);
        }
    }

    bool peek_is(char c) {
        skip_ws();
        return !at_end() && peek() == c;
    }

    bool peek_is_digit() {
        skip_ws();
        return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
    }

    std::string digit_run() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected digits");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    /// Unsigned integer for variable indices and exponents; values beyond
    /// 19 digits saturate so the caller's range check rejects them.
    std::uint64_t small_uint() {
        std::string digits = digit_run();
        if (digits.size() > 19) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        return std::stoull(digits);
    }

    Rational parse_rational(bool allow_sign) {
        skip_ws();
        bool negative = false;
        if (allow_sign && !at_end() && (peek() == '+' || peek() == '-')) {
            negative = (peek() == '-');
            ++pos_;
        }
        Integer num(digit_run());
        Integer den(1);
        if (try_consume('/')) {
            den = Integer(digit_run());
            if (den == 0) {
                fail("zero denominator");
            }
        }
        if (negative) {
            num = -num;
        }
        return Rational(num, den);
    }

    GaussianRational parse_coeff() {
        if (try_consume('(')) {
            Rational re = parse_rational(true);
            if (try_consume(')')) {
                return GaussianRational(re);
            }
            skip_ws();
            if (at_end() || (peek() != '+' && peek() != '-')) {
                fail("expected ')' or a signed imaginary part");
            }
            bool im_negative = (peek() == '-');
            ++pos_;
            Rational im = parse_rational(false);
            if (im_negative) {
                im = -im;
            }
            expect('i', "after the imaginary part");
            expect(')', "closing the coefficient");
            return {re, im};
        }
        Rational value = parse_rational(false);
        if (try_consume('i')) {
            return {Rational(0), value};
        }
        return GaussianRational(value);
    }

    /// factor := 'z' uint ['^' uint]; accumulates into exps.
    void parse_factor(Monomial& exps) {
        skip_ws();
        if (at_end() || peek() != 'z') {
            fail("expected a variable");
        }
        std::size_t var_pos = pos_;
        ++pos_;
        std::uint64_t idx = small_uint();
        if (idx == 0 || idx > n_vars_) {
            throw PolyParseError("unknown variable z" + std::to_string(idx), var_pos);
        }
        std::uint64_t exp = 1;
        if (try_consume('^')) {
            exp = small_uint();
            if (exp > kMaxExponent) {
                throw ExponentOverflow("exponent exceeds " + std::to_string(kMaxExponent));
            }
        }
        std::uint64_t sum = std::uint64_t(exps[idx - 1]) + exp;
        if (sum > kMaxExponent) {
            throw ExponentOverflow("accumulated exponent exceeds " +
                                   std::to_string(kMaxExponent));
        }
        exps[idx - 1] = static_cast<std::uint32_t>(sum);
    }

    void parse_term(Polynomial& out, int sign) {
        GaussianRational coeff(Rational(1), Rational(0));
        Monomial exps(n_vars_, 0);
        bool saw_coeff = false;
        bool saw_factor = false;
        if (peek_is_digit() || peek_is('(')) {
            coeff = parse_coeff();
            saw_coeff = true;
        }
        if (saw_coeff) {
            if (try_consume('*')) {
                parse_factor(exps);
                saw_factor = true;
            }
        } else {
            parse_factor(exps);
            saw_factor = true;
        }
        if (saw_factor) {
            while (try_consume('*')) {
                parse_factor(exps);
            }
        }
        skip_ws();
        if (!at_end() && peek() != '+' && peek() != '-') {
            fail("unexpected character in term");
        }
        if (sign < 0) {
            coeff = -coeff;
        }
        out.add_term(exps, coeff);
    }

    std::string_view text_;
    std::uint32_t n_vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::uint32_t n_vars) {
    if (n_vars == 0) {
        throw std::invalid_argument("polynomial needs at least one variable");
    }
    return PolyParser(text, n_vars).parse();
}

Polynomial wirtinger_derivative(const Polynomial& p, std::uint32_t var, std::uint32_t order) {
    if (var >= p.n_vars()) {
        throw std::invalid_argument("derivative variable out of range");
    }
    if (order == 0) {
        return p;
    }
    Polynomial out(p.n_vars());
    for (const auto& [exps, coeff] : p.terms()) {
        std::uint32_t e = exps[var];
        if (e < order) {
            continue;
        }
        Integer factor(1);
        for (std::uint32_t q = 0; q < order; ++q) {
            factor *= Integer(e - q);
        }
        Monomial shifted = exps;
        shifted[var] = e - order;
        out.add_term(shifted, coeff * Rational(factor));
    }
    return out;
}

UnivariatePolynomial compose_monomial_curve(
    const Polynomial& p, const std::vector<std::optional<std::uint32_t>>& exps) {
    if (exps.size() != p.n_vars()) {
        throw std::invalid_argument("curve exponent list length mismatch");
    }
    UnivariatePolynomial out;
    for (const auto& [mono, coeff] : p.terms()) {
        std::uint64_t degree = 0;
        bool omitted = false;
        for (std::uint32_t i = 0; i < p.n_vars(); ++i) {
            if (mono[i] == 0) {
                continue;
            }
            if (!exps[i].has_value()) {
                omitted = true;
                break;
            }
            degree += std::uint64_t(mono[i]) * std::uint64_t(*exps[i]);
            if (degree > kMaxExponent) {
                throw ExponentOverflow("curve composition degree exceeds " +
                                       std::to_string(kMaxExponent));
            }
        }
        if (omitted) {
            continue;
        }
        out.add_term(static_cast<std::uint32_t>(degree), coeff);
    }
    return out;
}

std::uint32_t SupportOrders::max_below(std::uint32_t bound) const {
    std::uint32_t best = 0;
    for (std::uint32_t e : positive_exponents) {
        if (e > bound) {
            break;
        }
        best = e;
    }
    return best;
}

SupportOrders support_orders(const Polynomial& p, std::uint32_t var) {
    if (var >= p.n_vars()) {
        throw std::invalid_argument("support variable out of range");
    }
    SupportOrders out;
    for (const auto& [exps, coeff] : p.terms()) {
        std::uint32_t e = exps[var];
        if (e == 0) {
            continue;
        }
        if (!out.min_positive || e < *out.min_positive) {
            out.min_positive = e;
        }
        bool pure = true;
        for (std::uint32_t i = 0; i < p.n_vars(); ++i) {
            if (i != var && exps[i] != 0) {
                pure = false;
                break;
            }
        }
        if (pure && (!out.pure_min || e < *out.pure_min)) {
            out.pure_min = e;
        }
        out.positive_exponents.push_back(e);
    }
    std::sort(out.positive_exponents.begin(), out.positive_exponents.end());
    out.positive_exponents.erase(
        std::unique(out.positive_exponents.begin(), out.positive_exponents.end()),
        out.positive_exponents.end());
    return out;
}

}  // namespace levigauge
