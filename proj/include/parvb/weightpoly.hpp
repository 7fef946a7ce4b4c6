#ifndef PARVB_WEIGHTPOLY_HPP
#define PARVB_WEIGHTPOLY_HPP

#include <parvb/rational.hpp>

#include <cstdint>
#include <vector>

namespace parvb {

// Subsets of {1..n} are bitmasks: bit i-1 <-> point i.
using Mask = std::uint32_t;

constexpr int kMaxPoints = 24;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Stability parameter: n rational weights in [0,1], n >= 5.
class WeightVector {
public:
    WeightVector(int n, std::vector<Rational> a);

    int n() const { return n_; }
    const Rational& a(int i) const { return a_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<Rational>& weights() const { return a_; }

    Rational total() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    int n_;
    std::vector<Rational> a_;
};

// Canonical hyperplane (H_I = k) of the wall arrangement.
struct Wall {
    Mask I;
    int k;
    friend bool operator==(const Wall&, const Wall&) = default;
};

// Sign of H_I - k per canonical wall, in wall_list(n) order.
struct WallSignature {
    int n;
    std::vector<int> signs;  // -1, 0, +1
    friend bool operator==(const WallSignature&, const WallSignature&) = default;
};

// H_I(A) = sum_{j not in I} a_j + sum_{i in I} (1 - a_i)
Rational h_value(Mask I, const WeightVector& A);

// Membership in the demi-hypercube Delta (H_I >= 1 for odd I, box bounds);
// strict replaces every inequality by its strict form.
bool is_in_delta(const WeightVector& A, bool strict = false);

// Delta cut by H_I >= 2 for even I.
bool is_in_pi(const WeightVector& A, bool strict = false);

// All canonical walls, ordered by k then mask. At k = n/2 the coinciding pair
// {I, I^c} is represented by the smaller mask.
std::vector<Wall> wall_list(int n);

// Requires A in Delta.
WallSignature signature(const WeightVector& A);

bool same_chamber(const WeightVector& A, const WeightVector& B);

// Checks that the W(D_n) generators (coordinate transpositions, pair flips)
// preserve the even-vertex set and permute the canonical walls, and for
// n <= 7 that they generate a group of order 2^(n-1) * n!.
bool weyl_generators_check(int n);

// Order of the group generated by transpositions and pair flips (n <= 7).
unsigned long weyl_group_order(int n);

// 0/1 vertex of the hypercube from a subset mask.
WeightVector vertex(int n, Mask J);

}  // namespace parvb

#endif
