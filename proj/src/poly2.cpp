#include "fsl/poly2.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fsl {

Poly2 Poly2::monomial(unsigned i, unsigned j, const Scalar& c) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
}

void Poly2::add_term(unsigned i, unsigned j, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = Exponent{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Poly2::coeff(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Scalar(0) : it->second;
}

bool Poly2::is_exact() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_exact(); });
}

int Poly2::degree() const {
    int d = kZeroDegree;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
    return d;
}

double Poly2::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c.to_double()));
    return m;
}

namespace {

// Horner in x of the coefficient polynomials of each power of y, then in y.
template <class T, class Conv>
T horner(const std::map<Exponent, Scalar>& terms, const T& x, const T& y, Conv conv) {
    if (terms.empty()) return conv(Scalar(0));
    unsigned max_j = 0;
    for (const auto& [e, c] : terms) max_j = std::max(max_j, e.second);
    std::vector<std::vector<std::pair<unsigned, T>>> by_y(max_j + 1);
    for (const auto& [e, c] : terms) by_y[e.second].emplace_back(e.first, conv(c));
    T acc = conv(Scalar(0));
    for (unsigned jj = max_j + 1; jj-- > 0;) {
        auto& row = by_y[jj];
        T inner = conv(Scalar(0));
        unsigned deg = 0;
        for (const auto& [i, c] : row) deg = std::max(deg, i);
        std::vector<T> dense(deg + 1, conv(Scalar(0)));
        for (auto& [i, c] : row) dense[i] = c;
        for (unsigned i = deg + 1; i-- > 0;) inner = inner * x + dense[i];
        acc = acc * y + inner;
    }
    return acc;
}

}  // namespace

Scalar Poly2::eval(const Scalar& x, const Scalar& y) const {
    return horner<Scalar>(terms_, x, y, [](const Scalar& s) { return s; });
}

double Poly2::eval(double x, double y) const {
    return horner<double>(terms_, x, y, [](const Scalar& s) { return s.to_double(); });
}

Poly2 Poly2::compose(const Poly2& px, const Poly2& py) const {
    unsigned mi = 0, mj = 0;
    for (const auto& [e, c] : terms_) {
        mi = std::max(mi, e.first);
        mj = std::max(mj, e.second);
    }
    std::vector<Poly2> xp{Poly2(1)}, yp{Poly2(1)};
    for (unsigned k = 1; k <= mi; ++k) xp.push_back(xp.back() * px);
    for (unsigned k = 1; k <= mj; ++k) yp.push_back(yp.back() * py);
    Poly2 out;
    for (const auto& [e, c] : terms_) out += Poly2(c) * xp[e.first] * yp[e.second];
    return out;
}

Poly2 Poly2::dx() const {
    Poly2 out;
    for (const auto& [e, c] : terms_)
        if (e.first > 0) out.add_term(e.first - 1, e.second, Scalar(static_cast<long>(e.first)) * c);
    return out;
}

Poly2 Poly2::dy() const {
    Poly2 out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0) out.add_term(e.first, e.second - 1, Scalar(static_cast<long>(e.second)) * c);
    return out;
}

Poly2 Poly2::swapped() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) out.add_term(e.second, e.first, c);
    return out;
}

Poly2 Poly2::to_float() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) out.add_term(e.first, e.second, Scalar(c.to_double()));
    return out;
}

Poly2 Poly2::pruned(double tol) const {
    Poly2 out;
    for (const auto& [e, c] : terms_)
        if (c.is_exact() || std::abs(c.to_double()) > tol) out.add_term(e.first, e.second, c);
    return out;
}

UPoly Poly2::on_x_axis() const {
    std::vector<Scalar> c;
    for (const auto& [e, v] : terms_) {
        if (e.second != 0) continue;
        if (c.size() <= e.first) c.resize(e.first + 1);
        c[e.first] += v;
    }
    return UPoly(std::move(c));
}

UPoly Poly2::on_y_axis() const { return swapped().on_x_axis(); }

Poly2 Poly2::operator-() const {
    Poly2 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return out;
}

Poly2 Poly2::pow(unsigned k) const {
    Poly2 r(1), base = *this;
    while (k) {
        if (k & 1U) r = r * base;
        base = base * base;
        k >>= 1U;
    }
    return r;
}

std::pair<Poly2, Poly2> Poly2::divmod(const Poly2& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("Poly2::divmod by zero polynomial");
    // std::map orders keys lexicographically, so the last entry is the lex-leading term.
    const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
    Poly2 quotient, remainder, work = *this;
    while (!work.is_zero()) {
        auto top = std::prev(work.terms_.end());
        const Exponent e = top->first;
        const Scalar c = top->second;
        if (e.first >= lead_e.first && e.second >= lead_e.second) {
            Poly2 t = monomial(e.first - lead_e.first, e.second - lead_e.second, c / lead_c);
            quotient += t;
            work -= t * divisor;
            work.terms_.erase(e);  // float residue of the cancelled leading term
        } else {
            remainder.add_term(e.first, e.second, c);
            work.terms_.erase(top);
        }
    }
    return {quotient, remainder};
}

bool Poly2::near(const Poly2& o, double tol) const {
    Poly2 d = *this - o;
    return d.max_abs_coeff() <= tol;
}

std::string Poly2::str(const std::string& xv, const std::string& yv) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        if (e.first) os << "*" << xv << (e.first > 1 ? "^" + std::to_string(e.first) : "");
        if (e.second) os << "*" << yv << (e.second > 1 ? "^" + std::to_string(e.second) : "");
    }
    return os.str();
}

bool negligible(const Poly2& residue, double scale) {
    if (residue.is_zero()) return true;
    if (residue.is_exact()) return false;
    return residue.max_abs_coeff() <= 1e-12 * std::max(scale, 1.0);
}

}  // namespace fsl
