#include "coev/rational.hpp"

#include <cctype>

namespace coev {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }

    std::string_view num = rest;
    std::string_view den;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = rest.substr(0, slash);
        den = rest.substr(slash + 1);
        if (!all_digits(den)) {
            throw ParseError("invalid rational \"" + std::string(text) +
                             "\": denominator must be a positive integer");
        }
    }
    if (!all_digits(num)) {
        throw ParseError("invalid rational \"" + std::string(text) +
                         "\": expected p, -p or p/q with integer parts");
    }

    BigInt n{std::string(num)};
    BigInt d = den.empty() ? BigInt(1) : BigInt{std::string(den)};
    if (d == 0) {
        throw ParseError("invalid rational \"" + std::string(text) + "\": zero denominator");
    }
    if (negative) n = -n;
    return Rational(n, d);  // cpp_rational normalizes to lowest terms
}

std::string format_rational(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

}  // namespace coev
