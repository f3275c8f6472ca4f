#include "csitdof/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace csitdof {

namespace {

bool is_integer_literal(std::string_view text) {
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    }
    if (text.front() == '+') {
        text.remove_prefix(1);
    }
    return mpz_class(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    const mpz_class num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
    }
    const mpz_class den = parse_integer(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) {
    return value.get_str(10);
}

std::string to_decimal(const Rational& value, int places) {
    mpz_class scale = 1;
    for (int i = 0; i < places; ++i) {
        scale *= 10;
    }
    const bool negative = sgn(value) < 0;
    const Rational magnitude = abs(value);
    // round half away from zero
    mpz_class scaled = (magnitude.get_num() * scale * 2 + magnitude.get_den()) / (magnitude.get_den() * 2);
    const mpz_class whole = scaled / scale;
    const mpz_class frac = scaled % scale;

    std::ostringstream out;
    if (negative && scaled != 0) {
        out << '-';
    }
    out << whole.get_str();
    if (places > 0) {
        std::string digits = frac.get_str();
        out << '.' << std::string(static_cast<std::size_t>(places) - digits.size(), '0') << digits;
    }
    return out.str();
}

Rational harmonic_sum(unsigned from, unsigned to) {
    Rational sum = 0;
    for (unsigned i = from; i <= to; ++i) {
        sum += Rational(1, i);
    }
    return sum;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum += a[i] * b[i];
    }
    return sum;
}

std::string to_string(const RationalVector& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += to_string(values[i]);
    }
    out += ")";
    return out;
}

}  // namespace csitdof
