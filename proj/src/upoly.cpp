#include "fsl/upoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fsl {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::is_exact() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_exact(); });
}

Scalar UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<std::size_t>(k)];
}

Scalar UPoly::eval(const Scalar& t) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UPoly::eval(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

UPoly UPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<long>(k)) * c_[k]);
    return UPoly(std::move(d));
}

UPoly UPoly::reflected() const {
    std::vector<Scalar> r = c_;
    for (std::size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
    return UPoly(std::move(r));
}

UPoly UPoly::to_float() const {
    std::vector<Scalar> r;
    for (const auto& s : c_) r.emplace_back(s.to_double());
    return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
    std::vector<Scalar> r;
    for (const auto& s : c_) r.push_back(-s);
    return UPoly(std::move(r));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
    return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
}

UPoly operator*(const Scalar& s, const UPoly& p) {
    std::vector<Scalar> r;
    for (const auto& c : p.c_) r.push_back(s * c);
    return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly::divmod by zero polynomial");
    std::vector<Scalar> rem = c_;
    std::vector<Scalar> quo(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    const int dd = d.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        Scalar t = rem[static_cast<std::size_t>(k)] / d.leading();
        quo[static_cast<std::size_t>(k - dd)] = t;
        for (int m = 0; m <= dd; ++m) rem[static_cast<std::size_t>(k - dd + m)] -= t * d.c_[static_cast<std::size_t>(m)];
        rem[static_cast<std::size_t>(k)] = Scalar(0);
    }
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::divide_by_t(double tol) const {
    if (c_.empty()) return {};
    const Scalar& c0 = c_.front();
    if (c0.is_exact() ? !c0.is_zero() : std::abs(c0.to_double()) > tol)
        throw std::domain_error("UPoly::divide_by_t: nonzero constant term " + c0.str());
    return UPoly(std::vector<Scalar>(c_.begin() + 1, c_.end()));
}

std::string UPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k] << ")";
        if (k >= 1) os << "*" << var;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

bool RationalFunction1::near(const RationalFunction1& o, double tol) const {
    UPoly diff = num * o.den - o.num * den;
    for (const auto& c : diff.coeffs())
        if (std::abs(c.to_double()) > tol) return false;
    return true;
}

namespace {

// Float remainders carry rounding residue in their top coefficients; drop
// anything below a relative threshold so the Sturm chain terminates.
UPoly clean(const UPoly& p) {
    if (p.is_exact()) return p;
    double scale = 0.0;
    for (const auto& c : p.coeffs()) scale = std::max(scale, std::abs(c.to_double()));
    std::vector<Scalar> r;
    for (const auto& c : p.coeffs()) r.emplace_back(std::abs(c.to_double()) <= 1e-12 * scale ? 0.0 : c.to_double());
    return UPoly(std::move(r));
}

int sign_changes(const std::vector<UPoly>& chain, const Scalar& t) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = p.eval(t).sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain{clean(p), clean(p.derivative())};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        auto [q, r] = chain[chain.size() - 2].divmod(chain.back());
        (void)q;
        UPoly next = clean(-r);
        if (next.is_zero()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

}  // namespace

int count_real_roots(const UPoly& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

bool root_free_on(const UPoly& p, const Scalar& lo, const Scalar& hi) {
    if (p.is_zero()) return false;
    if (p.eval(lo).is_zero()) return false;
    return count_real_roots(p, lo, hi) == 0;
}


Scalar discriminant(const UPoly& p) {
    return p.coeff(1) * p.coeff(1) - Scalar(4) * p.coeff(2) * p.coeff(0);
}

std::vector<RealRoot> real_roots_quadratic(const UPoly& p, bool* near_double) {
    if (near_double) *near_double = false;
    if (p.degree() < 1 || p.degree() > 2) throw std::domain_error("real_roots_quadratic: degree must be 1 or 2");
    if (p.degree() == 1) return {RealRoot{-p.coeff(0) / p.coeff(1), 1}};
    const Scalar a = p.coeff(2), b = p.coeff(1);
    const Scalar disc = discriminant(p);
    if (p.is_exact()) {
        const int s = disc.sign();
        if (s < 0) return {};
        if (s == 0) return {RealRoot{-b / (Scalar(2) * a), 2}};
        Rational r;
        std::vector<RealRoot> out;
        if (exact_sqrt(disc.exact(), r)) {
            out = {RealRoot{(-b - Scalar(r)) / (Scalar(2) * a), 1}, RealRoot{(-b + Scalar(r)) / (Scalar(2) * a), 1}};
        } else {
            const double sq = std::sqrt(disc.to_double());
            const double bd = b.to_double(), ad = a.to_double();
            out = {RealRoot{Scalar((-bd - sq) / (2 * ad)), 1}, RealRoot{Scalar((-bd + sq) / (2 * ad)), 1}};
        }
        if (out[1].value < out[0].value) std::swap(out[0], out[1]);
        return out;
    }
    const double ad = a.to_double(), bd = b.to_double(), cd = p.coeff(0).to_double();
    const double scale = std::max({std::abs(ad), std::abs(bd), std::abs(cd)});
    const double dd = disc.to_double();
    if (std::abs(dd) <= 1e-12 * scale * scale) {
        if (near_double) *near_double = true;
        return {RealRoot{Scalar(-bd / (2 * ad)), 2}};
    }
    if (dd < 0) return {};
    // Cancellation-free pair.
    const double qq = -0.5 * (bd + std::copysign(std::sqrt(dd), bd));
    double r1 = qq / ad, r2 = cd / qq;
    if (r2 < r1) std::swap(r1, r2);
    return {RealRoot{Scalar(r1), 1}, RealRoot{Scalar(r2), 1}};
}

}  // namespace fsl
