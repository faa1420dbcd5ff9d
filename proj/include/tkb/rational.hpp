#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "tkb/errors.hpp"

namespace tkb {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Backend selector. Exact scenarios run on Rational, everything else on double.
enum class Backend { Exact, Float };

template <class B>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_rational(const Rational& q) { return q.template convert_to<double>(); }
    static double from_int(long long v) { return static_cast<double>(v); }
    static double to_double(double v) { return v; }
    static bool is_zero(double v) { return v == 0.0; }
    static bool is_positive(double v) { return v > 0.0; }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& q) { return q; }
    static Rational from_int(long long v) { return Rational(v); }
    static double to_double(const Rational& v) { return v.template convert_to<double>(); }
    static bool is_zero(const Rational& v) { return v.is_zero(); }
    static bool is_positive(const Rational& v) { return v > 0; }
};

template <class B>
double to_double(const B& v) {
    return scalar_traits<B>::to_double(v);
}

template <class B>
double abs_double(const B& v) {
    return std::abs(scalar_traits<B>::to_double(v));
}

} // namespace tkb
