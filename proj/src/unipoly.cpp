#include <parvb/unipoly.hpp>

#include <algorithm>

namespace parvb {

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    if (c == 0) return UniPoly();
    return UniPoly({c});
}

UniPoly UniPoly::monomial(int deg, const Rational& c) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
    UniPoly p = constant(Rational(1));
    for (const Rational& r : roots) {
        p = p * UniPoly({-r, Rational(1)});
    }
    return p;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw internal_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational UniPoly::eval(const Rational& p) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * p + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return inv * *this;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
    if (s == 0) return UniPoly();
    std::vector<Rational> c = a.c_;
    for (auto& x : c) x *= s;
    return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw validation_error("polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    int db = b.degree();
    int dq = static_cast<int>(rem.size()) - 1 - db;
    if (dq < 0) return {UniPoly(), a};
    std::vector<Rational> quot(static_cast<size_t>(dq) + 1, Rational(0));
    Rational lead_inv = 1 / b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + db)] * lead_inv;
        quot[static_cast<size_t>(k)] = q;
        if (q != 0)
            for (int j = 0; j <= db; ++j)
                rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw validation_error("undefined gcd");
    UniPoly a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = UniPoly::divmod(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

}  // namespace parvb
