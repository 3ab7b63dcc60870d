#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "treedecomp/errors.hpp"

namespace treedecomp {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with 64-bit components, normalized (den > 0, gcd 1).
// Comparisons go through 128-bit intermediates, which is ample for the
// quantities handled here (stage schedules for m <= 16, count ratios).
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d) : num(n), den(d) { normalize(); }
    explicit Ratio(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw ParameterOutOfRangeError("ratio with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_zero() const { return num == 0; }
    bool positive() const { return num > 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den <= static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return b <= a; }

    friend Ratio operator*(const Ratio& a, const Ratio& b) {
        long long g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        long long g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Ratio((a.num / g1) * (b.num / g2), (a.den / g2) * (b.den / g1));
    }
    friend Ratio operator*(long long k, const Ratio& a) { return Ratio(k) * a; }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }
};

// Parses "p", "p/q". Used for CLI flags that must stay exact.
Ratio parse_ratio(const std::string& text);

// True iff count_left <= r * count_right, exactly.
inline bool le_scaled(long long count_left, const Ratio& r, long long count_right) {
    return static_cast<__int128>(count_left) * r.den <=
           static_cast<__int128>(r.num) * count_right;
}

}  // namespace treedecomp
