#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "coev/errors.hpp"

namespace coev {

// Exact arithmetic end to end: whether a measure value is zero must be
// decidable without tolerances, so nothing in the measure path touches
// floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts. Entry type
/// of decoherence matrices.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    explicit ComplexRational(Rational real) : re(std::move(real)), im(0) {}

    ComplexRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    ComplexRational& operator+=(const ComplexRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend ComplexRational operator*(const Rational& s, const ComplexRational& a) {
        return {s * a.re, s * a.im};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Parses the exact forms "p", "-p", "p/q" (optional sign on the numerator,
/// q a positive integer). Anything else — decimal points, exponents, spaces,
/// a zero denominator — is a ParseError, never rounded.
Rational parse_rational(std::string_view text);

/// Inverse of parse_rational: "p" when the denominator is 1, else "p/q" in
/// lowest terms with the sign on the numerator.
std::string format_rational(const Rational& value);

}  // namespace coev
