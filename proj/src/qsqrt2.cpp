#include "kmu/qsqrt2.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace kmu {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Unsigned rational literal: "7", "7/3" or "0.25".
mpq_class parse_rational(const std::string& s, std::string_view whole) {
    auto fail = [&]() -> mpq_class {
        throw std::invalid_argument("malformed exact scalar '" + std::string(whole) + "'");
    };
    if (s.empty()) return fail();
    const auto slash = s.find('/');
    const auto dot = s.find('.');
    auto all_digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char ch : t)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        return true;
    };
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return fail();
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
        mpq_class q(mpz_class(num), d);
        q.canonicalize();
        return q;
    }
    if (dot != std::string::npos) {
        const std::string ip = s.substr(0, dot);
        const std::string fp = s.substr(dot + 1);
        if ((!ip.empty() && !all_digits(ip)) || !all_digits(fp)) return fail();
        mpz_class scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        mpq_class q(mpz_class((ip.empty() ? std::string("0") : ip) + fp), scale);
        q.canonicalize();
        return q;
    }
    if (!all_digits(s)) return fail();
    return mpq_class(mpz_class(s));
}

std::string rational_string(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace

QSqrt2::QSqrt2(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

QSqrt2 QSqrt2::rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return QSqrt2(q, 0);
}

QSqrt2 QSqrt2::parse(std::string_view text) {
    const std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty exact scalar");

    // Split into signed terms at top-level '+' / '-'.
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string current;
    bool have_term = false;
    for (char ch : s) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '+' || ch == '-') {
            if (have_term) {
                terms.emplace_back(sign, current);
                current.clear();
                have_term = false;
                sign = 1;
            } else if (!current.empty()) {
                throw std::invalid_argument("malformed exact scalar '" + s + "'");
            }
            if (ch == '-') sign = -sign;
            continue;
        }
        current.push_back(ch);
        have_term = true;
    }
    if (!have_term) throw std::invalid_argument("malformed exact scalar '" + s + "'");
    terms.emplace_back(sign, current);

    QSqrt2 result;
    for (auto& [sg, term] : terms) {
        bool irrational = false;
        std::string coeff = term;
        if (term == "r2") {
            irrational = true;
            coeff = "1";
        } else if (term.size() > 3 && term.compare(term.size() - 3, 3, "*r2") == 0) {
            irrational = true;
            coeff = term.substr(0, term.size() - 3);
        }
        mpq_class q = parse_rational(coeff, s);
        if (sg < 0) q = -q;
        if (irrational)
            result.b_ += q;
        else
            result.a_ += q;
    }
    result.a_.canonicalize();
    result.b_.canonicalize();
    return result;
}

int QSqrt2::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    const int cmp = ::cmp(a_ * a_, 2 * b_ * b_);
    return cmp > 0 ? sa : (cmp < 0 ? sb : 0);
}

double QSqrt2::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::string QSqrt2::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(a_) != 0) out = rational_string(a_);
    if (sgn(b_) != 0) {
        mpq_class mag = ::abs(b_);
        std::string part = (mag == 1) ? std::string("r2") : rational_string(mag) + "*r2";
        if (out.empty())
            out = (sgn(b_) < 0 ? "-" : "") + part;
        else
            out += (sgn(b_) < 0 ? "-" : "+") + part;
    }
    return out;
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(sqrt 2)");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    const mpq_class n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) { return os << x.to_string(); }

QSqrt2 abs(const QSqrt2& x) { return x.sign() < 0 ? -x : x; }

}  // namespace kmu
