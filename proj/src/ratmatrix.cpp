#include <parvb/ratmatrix.hpp>

#include <utility>

namespace parvb {

namespace {

struct Echelon {
    std::vector<std::vector<Integer>> m;  // row echelon, fraction-free
    std::vector<std::size_t> pivot_col;   // per pivot row
    std::vector<std::size_t> free_col;
};

// Fraction-free elimination with column pivot search. Intermediate entries
// stay integral: each 2x2 cross-multiplication step is exactly divisible by
// the previous pivot (Sylvester identity).
Echelon eliminate(const RatMatrix& a) {
    const std::size_t R = a.rows(), C = a.cols();
    Echelon e;
    e.m.assign(R, std::vector<Integer>(C, Integer(0)));
    for (std::size_t i = 0; i < R; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < C; ++j)
            l = lcm(l, Integer(a.at(i, j).get_den()));
        for (std::size_t j = 0; j < C; ++j) {
            Rational s = Rational(l) * a.at(i, j);
            e.m[i][j] = s.get_num();  // denominator is 1 here
        }
    }

    Integer prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < C; ++col) {
        std::size_t p = r;
        while (p < R && e.m[p][col] == 0) ++p;
        if (p == R) {
            e.free_col.push_back(col);
            continue;
        }
        std::swap(e.m[r], e.m[p]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = col + 1; j < C; ++j) {
                Integer t = e.m[r][col] * e.m[i][j] - e.m[i][col] * e.m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.m[i][j] = t;
            }
            e.m[i][col] = 0;
        }
        prev = e.m[r][col];
        e.pivot_col.push_back(col);
        ++r;
    }
    return e;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return eliminate(m).pivot_col.size(); }

std::vector<std::vector<Rational>> nullspace(const RatMatrix& a) {
    const std::size_t C = a.cols();
    Echelon e = eliminate(a);
    const std::size_t nr = e.pivot_col.size();

    std::vector<std::vector<Rational>> basis;
    basis.reserve(e.free_col.size());
    for (std::size_t fc : e.free_col) {
        std::vector<Rational> v(C, Rational(0));
        v[fc] = 1;
        for (std::size_t ri = nr; ri-- > 0;) {
            std::size_t pc = e.pivot_col[ri];
            if (pc > fc) continue;
            Rational s(0);
            for (std::size_t j = pc + 1; j < C; ++j)
                if (v[j] != 0) s += Rational(e.m[ri][j]) * v[j];
            v[pc] = -s / Rational(e.m[ri][pc]);
        }
        // first nonzero entry = 1
        for (std::size_t j = 0; j < C; ++j) {
            if (v[j] != 0) {
                Rational inv = 1 / v[j];
                for (std::size_t k = j; k < C; ++k) v[k] *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace parvb
