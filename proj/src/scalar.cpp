#include "fsl/scalar.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fsl {

namespace {

bool looks_rational(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_digit = false, seen_slash = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
            seen_digit = false;
        } else {
            return false;
        }
    }
    return seen_digit;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (looks_rational(s)) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        q.canonicalize();
        return Scalar(q);
    }
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad numeric literal: " + text);
    return Scalar(v);
}

const Rational& Scalar::exact() const {
    if (!is_exact()) throw std::logic_error("Scalar::exact() on a float value");
    return std::get<Rational>(value_);
}

double Scalar::to_double() const {
    if (is_exact()) return std::get<Rational>(value_).get_d();
    return std::get<double>(value_);
}

bool Scalar::is_zero() const {
    if (is_exact()) return sgn(std::get<Rational>(value_)) == 0;
    return std::get<double>(value_) == 0.0;
}

int Scalar::sign() const {
    if (is_exact()) return sgn(std::get<Rational>(value_));
    double v = std::get<double>(value_);
    return (v > 0) - (v < 0);
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(value_)));
    return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        std::get<Rational>(value_) += std::get<Rational>(o.value_);
    else
        value_ = to_double() + o.to_double();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        std::get<Rational>(value_) -= std::get<Rational>(o.value_);
    else
        value_ = to_double() - o.to_double();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_exact() && o.is_exact())
        std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    else
        value_ = to_double() * o.to_double();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_exact() && o.is_zero()) throw std::domain_error("Scalar division by exact zero");
    if (is_exact() && o.is_exact())
        std::get<Rational>(value_) /= std::get<Rational>(o.value_);
    else
        value_ = to_double() / o.to_double();
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return std::get<Rational>(a.value_) == std::get<Rational>(b.value_);
    if (a.is_exact() != b.is_exact()) return false;
    return std::get<double>(a.value_) == std::get<double>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) return std::get<Rational>(a.value_) < std::get<Rational>(b.value_);
    return a.to_double() < b.to_double();
}

Scalar Scalar::pow(unsigned k) const {
    Scalar r(1);
    Scalar base = *this;
    while (k) {
        if (k & 1U) r *= base;
        base *= base;
        k >>= 1U;
    }
    return r;
}

std::string Scalar::str() const {
    if (is_exact()) {
        const Rational& q = std::get<Rational>(value_);
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
    return std::string(buf, res.ptr);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    if (s.is_exact()) return os << s.exact();
    return os << s.to_double();
}

bool exact_sqrt(const Rational& q, Rational& out) {
    if (sgn(q) < 0) return false;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    out = Rational(rn, rd);
    out.canonicalize();
    return true;
}


Scalar sqrt(const Scalar& s) {
    if (s.is_exact()) {
        Rational r;
        if (exact_sqrt(s.exact(), r)) return Scalar(r);
    }
    return Scalar(std::sqrt(s.to_double()));
}

}  // namespace fsl
