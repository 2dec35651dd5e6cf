#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace campana {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Integer power with non-negative exponent.
inline Int pow_int(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Rational power with arbitrary integer exponent (base must be nonzero for e < 0).
inline Rat pow_rat(const Rat& base, const Int& e) {
    if (e >= 0) {
        unsigned long k = e.convert_to<unsigned long>();
        Rat r = 1;
        Rat b = base;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }
    if (base == 0) throw std::domain_error("pow_rat: 0 to a negative power");
    return Rat(1) / pow_rat(base, Int(-e));
}

/// Floor of the n-th root of a non-negative integer.
inline Int iroot(const Int& a, unsigned long n) {
    if (a < 0) throw std::domain_error("iroot: negative radicand");
    if (n == 0) throw std::domain_error("iroot: zeroth root");
    if (a == 0 || a == 1 || n == 1) return a;
    Int lo = 1, hi = 1;
    while (pow_int(hi, n) <= a) hi <<= 1;
    // invariant: lo^n <= a < hi^n
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (pow_int(mid, n) <= a) lo = mid;
        else hi = mid;
    }
    return lo;
}

/// Exact n-th root of an integer, if one exists in Z. Handles signs: even
/// roots of negatives do not exist; odd roots of negatives are negative.
inline std::optional<Int> exact_nth_root(const Int& a, unsigned long n) {
    if (n == 1) return a;
    if (a < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = exact_nth_root(-a, n);
        if (!r) return std::nullopt;
        return Int(-*r);
    }
    Int r = iroot(a, n);
    if (pow_int(r, n) == a) return r;
    return std::nullopt;
}

/// Exact n-th root of a rational, if one exists in Q.
inline std::optional<Rat> exact_nth_root(const Rat& q, unsigned long n) {
    auto rn = exact_nth_root(numerator(q), n);
    if (!rn) return std::nullopt;
    auto rd = exact_nth_root(denominator(q), n);
    if (!rd) return std::nullopt;
    return Rat(*rn, *rd);
}

inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Canonical "num/den" string, den > 0 and always present.
inline std::string rat_to_string(const Rat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "num/den" or a bare integer.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

}  // namespace campana
