#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kmu {

/// Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2).
///
/// Both components are arbitrary-precision rationals kept in lowest terms,
/// so equality and sign are decided exactly.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    QSqrt2(mpq_class a, mpq_class b = 0);

    static QSqrt2 rational(long num, long den);
    static QSqrt2 sqrt2() { return QSqrt2(0, 1); }

    /// Parses the canonical text form, e.g. "3", "-1/2", "1/2*r2", "3-2/5*r2".
    static QSqrt2 parse(std::string_view text);

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    int sign() const;
    double to_double() const;
    QSqrt2 conjugate() const { return QSqrt2(a_, -b_); }
    /// Field norm a^2 - 2 b^2.
    mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }

    /// Canonical "p/q+r/s*r2" string; zero parts are elided.
    std::string to_string() const;

    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 x, const QSqrt2& y) { return x += y; }
    friend QSqrt2 operator-(QSqrt2 x, const QSqrt2& y) { return x -= y; }
    friend QSqrt2 operator*(QSqrt2 x, const QSqrt2& y) { return x *= y; }
    friend QSqrt2 operator/(QSqrt2 x, const QSqrt2& y) { return x /= y; }
    QSqrt2 operator-() const { return QSqrt2(-a_, -b_); }

    friend bool operator==(const QSqrt2& x, const QSqrt2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const QSqrt2& x, const QSqrt2& y) {
        const int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class a_{0};
    mpq_class b_{0};
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);

QSqrt2 abs(const QSqrt2& x);

}  // namespace kmu
