#pragma once

// Exact rational arithmetic. Every geometric comparison in this library is
// exact; floating point never participates in a predicate.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace epsnet {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& m) : std::runtime_error(m) {}
};

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rat& q) { return numerator(q).sign(); }

inline BigInt rat_floor(const Rat& q) {
    BigInt n = numerator(q), d = denominator(q);
    BigInt quo = n / d;                       // truncates toward zero
    if (n < 0 && quo * d != n) --quo;
    return quo;
}

inline BigInt rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline long long to_ll(const BigInt& v) {
    return v.convert_to<long long>();
}

// ceil(a/b) for positive b
inline long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

// Canonical "p/q" form, reduced, q > 0. Used for all machine output.
inline std::string to_pq(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Accepts "123", "-4.25" (exact decimal) or "7/9".
inline Rat parse_exact(const std::string& s) {
    if (s.empty()) throw input_error("empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw input_error("zero denominator in '" + s + "'");
        return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(BigInt(s));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.empty()) return Rat(BigInt(head.empty() ? "0" : head));
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    for (char c : tail)
        if (c < '0' || c > '9') throw input_error("bad decimal '" + s + "'");
    BigInt scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    BigInt whole = BigInt(head) * scale + BigInt(tail);
    if (neg) whole = -whole;
    return Rat(whole, scale);
}

// Decimal string when the denominator is 2^a 5^b, otherwise "p/q".
inline std::string to_exact_string(const Rat& q) {
    BigInt den = denominator(q);
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return to_pq(q);
    if (den == 1) return numerator(q).str();
    int k = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    BigInt v = numerator(q) * (scale / den);
    bool neg = v < 0;
    if (neg) v = -v;
    std::string digits = v.str();
    if ((int)digits.size() <= k) digits = std::string(k + 1 - digits.size(), '0') + digits;
    std::string out = digits.substr(0, digits.size() - k) + "." + digits.substr(digits.size() - k);
    return (neg ? "-" : "") + out;
}

} // namespace epsnet
