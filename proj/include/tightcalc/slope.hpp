#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tightcalc {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * An element of Q u {inf}, kept in lowest terms.
 *
 * Finite slopes have a positive denominator and carry the sign on the
 * numerator. Infinity is the single value 1/0 and compares above every
 * finite slope.
 */
class Slope {
public:
    Slope() : num_(0), den_(1) {}
    Slope(Integer numerator, Integer denominator);
    explicit Slope(const Rational& value);
    Slope(long long numerator, long long denominator)
        : Slope(Integer(numerator), Integer(denominator)) {}

    static Slope infinity() { return Slope(Integer(1), Integer(0)); }
    static Slope integer(const Integer& n) { return Slope(n, Integer(1)); }

    /// Accepts "p/q", "p" and "inf" (also "+inf", "-inf", "1/0").
    static Slope parse(std::string_view text);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_finite() const { return den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    /// Exact value; throws DomainError for infinity.
    Rational value() const;

    std::string str() const;

    friend bool operator==(const Slope& a, const Slope& b) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

/// Formats a plain rational with the same "p/q" convention as Slope.
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

Rational parse_rational(std::string_view text);

/// Greatest common divisor of |a| and |b|.
Integer gcd(const Integer& a, const Integer& b);

/// Floor division for b > 0.
Integer floor_div(const Integer& a, const Integer& b);

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct ExtendedGcd {
    Integer g;
    Integer x;
    Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace tightcalc
