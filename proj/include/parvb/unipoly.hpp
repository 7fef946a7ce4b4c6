#ifndef PARVB_UNIPOLY_HPP
#define PARVB_UNIPOLY_HPP

#include <parvb/rational.hpp>

#include <span>
#include <utility>
#include <vector>

namespace parvb {

// Dense univariate polynomial over the rationals, coefficients lowest degree
// first. The zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int deg, const Rational& c);
    // prod (t - r) over the given roots
    static UniPoly from_roots(std::span<const Rational> roots);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const;

    Rational eval(const Rational& p) const;

    UniPoly monic() const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

private:
    std::vector<Rational> c_;
    void trim();
};

// Monic gcd; throws validation_error if both inputs are zero.
UniPoly poly_gcd(const UniPoly& f, const UniPoly& g);

}  // namespace parvb

#endif
