#pragma once

// Exact arithmetic substrate. BigInt and Rational are backed by
// Boost.Multiprecision; Rational values are always canonical: lowest terms,
// positive denominator, zero represented as 0/1.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bmoll {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// An input outside an operation's stated domain (m too small, a <= -1, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// An exact integer division left a remainder. This can only mean the
// arithmetic itself is broken, never a bad input.
struct NonIntegralStep : std::logic_error {
    using std::logic_error::logic_error;
};

// Adaptive quadrature ran out of its subdivision budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt pow2(long n) {
    return BigInt(1) << n;
}

// 4^m, the scale factor between the integer row b_i(m) and d_i(m).
inline BigInt pow4(long m) {
    return BigInt(1) << (2 * m);
}

// Quotient of num/den, checked to be remainder-free.
inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0)
        throw NonIntegralStep("exact_div: " + num.str() + " is not divisible by " + den.str());
    return q;
}

// num/den in canonical form; den may be negative or zero here (zero throws).
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw DomainError("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

// "num/den" with the "/den" part omitted for integral values.
inline std::string fraction_str(const Rational& r) {
    const BigInt& den = denominator(r);
    if (den == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + den.str();
}

inline std::string fraction_str(const BigInt& n) {
    return n.str();
}

namespace detail {
inline bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}
}  // namespace detail

// Strict integer literal: optional sign, then digits only.
inline BigInt parse_bigint(std::string_view s) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '+' || body.front() == '-'))
        body.remove_prefix(1);
    if (!detail::all_digits(body))
        throw DomainError("not an integer literal: '" + std::string(s) + "'");
    BigInt v{std::string(body)};
    if (!s.empty() && s.front() == '-')
        v = -v;
    return v;
}

// "p" or "p/q" with q a positive integer literal; result is canonical.
inline Rational parse_fraction(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_bigint(s));
    BigInt num = parse_bigint(s.substr(0, slash));
    std::string_view den_s = s.substr(slash + 1);
    if (!detail::all_digits(den_s))
        throw DomainError("not a fraction literal: '" + std::string(s) + "'");
    BigInt den{std::string(den_s)};
    if (den == 0)
        throw DomainError("zero denominator in '" + std::string(s) + "'");
    return make_rational(std::move(num), std::move(den));
}

}  // namespace bmoll
