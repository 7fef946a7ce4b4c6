#include <parvb/eltrans.hpp>

#include <algorithm>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parvb {

EvenSubset::EvenSubset(int n_, Mask mask_) : n(n_), mask(mask_) {
    if (n < 5 || n > kMaxPoints) throw validation_error("bad subset dimension");
    if (mask >> n) throw validation_error("subset outside {1..n}");
    if (popcount(mask) % 2 != 0) throw validation_error("subset must have even cardinality");
}

WeightVector flip(const WeightVector& A, const EvenSubset& R) {
    if (A.n() != R.n) throw validation_error("dimension mismatch");
    std::vector<Rational> a = A.weights();
    for (int i = 0; i < A.n(); ++i)
        if ((R.mask >> i) & 1u) a[static_cast<size_t>(i)] = 1 - a[static_cast<size_t>(i)];
    return WeightVector(A.n(), std::move(a));
}

EvenSubset compose(const EvenSubset& R, const EvenSubset& S) {
    if (R.n != S.n) throw validation_error("dimension mismatch");
    return EvenSubset(R.n, R.mask ^ S.mask);
}

bool is_admissible(const WeightVector& A, const EvenSubset& R) {
    return same_chamber(A, flip(A, R));
}

namespace {

std::vector<Mask> admissible_masks(const WeightVector& A, bool parallel) {
    const int n = A.n();
    const Mask top = Mask{1} << n;
    const WallSignature base = signature(A);
    const auto walls = wall_list(n);

    auto test = [&](Mask R) {
        WeightVector flipped = flip(A, EvenSubset(n, R));
        for (size_t w = 0; w < walls.size(); ++w) {
            Rational d = h_value(walls[w].I, flipped) - walls[w].k;
            if (sgn(d) != base.signs[w]) return false;
        }
        return true;
    };

    std::vector<Mask> out;
    if (parallel) {
        std::vector<char> ok(top, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (long long m = 0; m < static_cast<long long>(top); ++m) {
            Mask R = static_cast<Mask>(m);
            if (popcount(R) % 2 == 0 && test(R)) ok[static_cast<size_t>(m)] = 1;
        }
        for (Mask m = 0; m < top; ++m)
            if (ok[m]) out.push_back(m);
    } else {
        for (Mask R = 0; R < top; ++R)
            if (popcount(R) % 2 == 0 && test(R)) out.push_back(R);
    }
    return out;
}

AdmissibleGroup build_group(const WeightVector& A, bool parallel) {
    const int n = A.n();
    std::vector<Mask> masks = admissible_masks(A, parallel);

    // F2 basis by leading bit, filled over the sorted masks: the greedy scan
    // yields the minimal generating set with smallest mask values.
    std::vector<Mask> echelon(static_cast<size_t>(n), 0);
    std::vector<Mask> gens;
    for (Mask m : masks) {
        Mask r = m;
        for (int bit = n - 1; bit >= 0 && r != 0; --bit) {
            if (!((r >> bit) & 1u)) continue;
            if (echelon[static_cast<size_t>(bit)] == 0) {
                echelon[static_cast<size_t>(bit)] = r;
                gens.push_back(m);
                r = 0;
            } else {
                r ^= echelon[static_cast<size_t>(bit)];
            }
        }
    }
    int rank = static_cast<int>(gens.size());

    if (masks.size() != (size_t{1} << rank))
        throw internal_error("admissible set is not an F2 subspace");
    std::unordered_set<Mask> set(masks.begin(), masks.end());
    if (!set.contains(0)) throw internal_error("admissible set misses the identity");
    if (masks.size() <= 4096) {
        for (Mask a : masks)
            for (Mask b : masks)
                if (!set.contains(a ^ b))
                    throw internal_error("admissible set not closed under composition");
    }

    AdmissibleGroup g{n, {}, {}, rank};
    g.elements.reserve(masks.size());
    for (Mask m : masks) g.elements.emplace_back(n, m);
    for (Mask m : gens) g.generators.emplace_back(n, m);
    return g;
}

}  // namespace

AdmissibleGroup admissible_group(const WeightVector& A) { return build_group(A, true); }

AdmissibleGroup admissible_group_serial(const WeightVector& A) { return build_group(A, false); }

}  // namespace parvb
