#ifndef PARVB_RATMATRIX_HPP
#define PARVB_RATMATRIX_HPP

#include <parvb/rational.hpp>

#include <cstddef>
#include <vector>

namespace parvb {

// Dense row-major matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

std::size_t rank(const RatMatrix& m);

// Basis of the right kernel, computed by fraction-free (Bareiss) elimination
// on the denominator-cleared integer matrix. Each basis vector is scaled so
// its first nonzero entry is 1; vectors are ordered by their free column.
std::vector<std::vector<Rational>> nullspace(const RatMatrix& m);

}  // namespace parvb

#endif
