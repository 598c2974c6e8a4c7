#include "tourn/rational.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace tourn {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rational: overflow");
    return static_cast<std::int64_t>(v);
}

Rational make(Wide num, Wide den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    Wide a = num < 0 ? -num : num;
    Wide b = den;
    while (b != 0) {
        const Wide r = a % b;
        a = b;
        b = r;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) {
            throw std::invalid_argument("malformed rational: " + std::string(text));
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    return make(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return make(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_, Wide{a.den_} * b.den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return Wide{a.num_} * b.den_ <=> Wide{b.num_} * a.den_;
}

bool at_least(std::int64_t count, const Rational& r, std::int64_t total) {
    return Wide{count} * r.den() >= Wide{r.num()} * total;
}

bool more_than(std::int64_t count, const Rational& r, std::int64_t total) {
    return Wide{count} * r.den() > Wide{r.num()} * total;
}

}  // namespace tourn
