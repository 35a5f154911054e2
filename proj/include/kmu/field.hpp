#pragma once

#include <cmath>
#include <concepts>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include "kmu/qsqrt2.hpp"

namespace kmu {

/// Scalar backend traits. Two backends exist: exact Q(sqrt 2) and float64.
template <class S>
struct FieldTraits;

template <>
struct FieldTraits<QSqrt2> {
    static constexpr bool exact = true;
    static constexpr const char* name = "exact-sqrt2";

    static bool is_zero(const QSqrt2& x, double /*tol*/ = 0.0) { return x.is_zero(); }
    static int sign(const QSqrt2& x, double /*tol*/ = 0.0) { return x.sign(); }
    static double to_double(const QSqrt2& x) { return x.to_double(); }
    static double magnitude(const QSqrt2& x) { return std::fabs(x.to_double()); }
    static QSqrt2 rational(long num, long den) { return QSqrt2::rational(num, den); }
    static QSqrt2 sqrt2() { return QSqrt2::sqrt2(); }
    static QSqrt2 parse(std::string_view s) { return QSqrt2::parse(s); }
    static std::string to_string(const QSqrt2& x) { return x.to_string(); }
};

template <>
struct FieldTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float64";

    static bool is_zero(double x, double tol = 0.0) { return std::fabs(x) <= tol; }
    static int sign(double x, double tol = 0.0) { return x > tol ? 1 : (x < -tol ? -1 : 0); }
    static double to_double(double x) { return x; }
    static double magnitude(double x) { return std::fabs(x); }
    static double rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        return static_cast<double>(num) / static_cast<double>(den);
    }
    static double sqrt2() { return std::sqrt(2.0); }
    static double parse(std::string_view s) { return QSqrt2::parse(s).to_double(); }
    static std::string to_string(double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <class S>
concept Field = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { FieldTraits<S>::exact } -> std::convertible_to<bool>;
};

template <Field S>
inline constexpr bool is_exact_v = FieldTraits<S>::exact;

/// Zero tolerance used by structural checks; ignored by the exact backend.
inline constexpr double kStructuralTol = 1e-10;

template <Field S>
double to_double(const S& x) {
    return FieldTraits<S>::to_double(x);
}

template <Field S>
bool is_zero(const S& x, double tol = kStructuralTol) {
    return FieldTraits<S>::is_zero(x, tol);
}

template <Field S>
int sign_of(const S& x, double tol = kStructuralTol) {
    return FieldTraits<S>::sign(x, tol);
}

template <Field S>
S from_rational(long num, long den = 1) {
    return FieldTraits<S>::rational(num, den);
}

template <Field S>
std::string scalar_string(const S& x) {
    return FieldTraits<S>::to_string(x);
}

template <Field S>
S abs_value(const S& x) {
    return x < S(0) ? S(-x) : x;
}

/// Converts between backends; exact -> float is lossy, float -> exact is rejected.
template <Field To, Field From>
To convert_scalar(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (!is_exact_v<To>) {
        return to_double(x);
    } else {
        throw std::invalid_argument("cannot convert a float64 scalar to the exact backend");
    }
}

}  // namespace kmu
