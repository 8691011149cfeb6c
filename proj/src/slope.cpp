#include "tightcalc/slope.hpp"

#include <cctype>
#include <ostream>

namespace tightcalc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view text) {
    text = trim(text);
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("empty integer in '" + std::string(text) + "'");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    Integer v{std::string(digits)};
    return text.front() == '-' ? Integer(-v) : v;
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) {
    Integer x = abs(a), y = abs(b);
    while (y != 0) {
        Integer r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Slope::Slope(Integer numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) {
        if (num_ == 0) throw DomainError("0/0 is not a slope");
        num_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Slope::Slope(const Rational& value)
    : num_(boost::multiprecision::numerator(value)),
      den_(boost::multiprecision::denominator(value)) {}

Slope Slope::parse(std::string_view text) {
    std::string_view t = trim(text);
    if (t == "inf" || t == "+inf" || t == "-inf" || t == "infinity") return infinity();
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Slope(parse_integer(t), Integer(1));
    Integer p = parse_integer(t.substr(0, slash));
    Integer q = parse_integer(t.substr(slash + 1));
    if (p == 0 && q == 0) throw ParseError("0/0 is not a slope");
    return Slope(std::move(p), std::move(q));
}

Rational Slope::value() const {
    if (is_infinite()) throw DomainError("infinite slope has no rational value");
    return Rational(num_, den_);
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    return num_.str() + "/" + den_.str();
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() <=> b.is_infinite();
    }
    Integer lhs = a.numerator() * b.denominator();
    Integer rhs = b.numerator() * a.denominator();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

std::string to_string(const Rational& r) { return Slope(r).str(); }

std::string to_string(const Integer& n) { return n.str(); }

Rational parse_rational(std::string_view text) {
    Slope s = Slope::parse(text);
    if (s.is_infinite()) throw ParseError("expected a finite rational, got '" + std::string(text) + "'");
    return s.value();
}

}  // namespace tightcalc
