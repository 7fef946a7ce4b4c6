#ifndef PARVB_RATIONAL_HPP
#define PARVB_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace parvb {

// Exact rational scalar. GMP keeps values canonical (positive denominator,
// gcd(num, den) = 1) through all arithmetic.
using Rational = mpq_class;
using Integer = mpz_class;

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (decimal digits, optional leading '-').
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw validation_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw validation_error("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw validation_error("zero denominator in rational literal: " + s);
    q.canonicalize();
    return q;
}

// Canonical "p/q" form, "p" when the denominator is 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw validation_error("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Smallest integer >= q.
inline Integer rat_ceil(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace parvb

#endif
