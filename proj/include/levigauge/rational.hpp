/**
 * @file rational.hpp
 * @brief Exact rational and Gaussian-rational scalar types.
 *
 * All symbolic computation in the library (coefficients, indices, contact
 * orders) runs over these types. Floating point enters only at evaluation
 * boundaries.
 */
#ifndef LEVIGAUGE_RATIONAL_HPP
#define LEVIGAUGE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

namespace levigauge {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical reduced form
/// (gcd(num, den) = 1, den > 0) by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Renders an arbitrary-precision integer in decimal.
std::string integer_to_string(const Integer& n);

/// Converts a rational to the nearest double.
double rational_to_double(const Rational& r);

/**
 * @brief Complex number with exact rational real and imaginary parts.
 *
 * Canonical form is inherited from Rational. Supports the ring operations
 * needed for polynomial algebra plus conversion to std::complex<double>.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianRational(Rational real) : re(std::move(real)), im(0) {}
    GaussianRational(int real) : re(real), im(0) {}  // NOLINT(google-explicit-constructor)

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conjugate() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational nre = re * o.re - im * o.im;
        Rational nim = re * o.im + im * o.re;
        re = std::move(nre);
        im = std::move(nim);
        return *this;
    }
    GaussianRational& operator*=(const Rational& s) {
        re *= s;
        im *= s;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
        a += b;
        return a;
    }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
        a -= b;
        return a;
    }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
        a *= b;
        return a;
    }
    friend GaussianRational operator*(GaussianRational a, const Rational& s) {
        a *= s;
        return a;
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// Nearest double-precision complex value.
    std::complex<double> to_complex() const;

    /**
     * @brief Canonical text form.
     *
     * Real values print as "p/q" (or "p"). Values with nonzero imaginary
     * part print parenthesized as "(a+bi)" or "(a-bi)", which the
     * polynomial parser accepts back verbatim.
     */
    std::string to_string() const;
};

}  // namespace levigauge

#endif  // LEVIGAUGE_RATIONAL_HPP
