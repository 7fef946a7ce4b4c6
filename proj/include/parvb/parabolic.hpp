#ifndef PARVB_PARABOLIC_HPP
#define PARVB_PARABOLIC_HPP

#include <parvb/eltrans.hpp>
#include <parvb/unipoly.hpp>
#include <parvb/weightpoly.hpp>

#include <array>
#include <optional>
#include <vector>

namespace parvb {

// Point of P^1 over the fiber coordinates: canonicalized so the first
// nonzero coordinate is 1.
struct Direction {
    Rational x, y;

    Direction(Rational x_, Rational y_);
    friend bool operator==(const Direction&, const Direction&) = default;
};

// Rank-2 quasi parabolic bundle O(d1) + O(d2) on P^1 with n distinct affine
// parabolic points and a direction in each fiber, in the splitting
// trivialization.
struct ParabolicBundle {
    int d1, d2;  // d1 >= d2
    std::vector<Rational> points;
    std::vector<Direction> directions;

    ParabolicBundle(int d1_, int d2_, std::vector<Rational> points_,
                    std::vector<Direction> directions_);
    int n() const { return static_cast<int>(points.size()); }
    int degree() const { return d1 + d2; }
};

// Degree-e line subbundle presented by a coprime section pair
// (f, g): O(e) -> O(d1) + O(d2), with its exact incidence set.
struct LineSubbundleWitness {
    int e;
    UniPoly f, g;  // deg f <= d1 - e, deg g <= d2 - e
    Mask incidences;
};

enum class Verdict { stable, strictly_semistable, unstable };

struct StabilityReport {
    Verdict verdict;
    Rational bundle_slope;
    Rational max_line_slope;
    LineSubbundleWitness witness;
};

// Result of el_R: transformed bundle normalized back to degree 0, the 2x2
// polynomial matrix whose columns embed it into E, and r = |R|.
struct TransformResult {
    ParabolicBundle bundle;
    std::array<std::array<UniPoly, 2>, 2> transition;  // column-major: [col][row]
    int r;
};

// Unnormalized variant (any R, no twist): splitting type before the twist
// plus the same transition data. Used by the determinant-law tests.
struct RawTransform {
    int e1, e2;  // e1 >= e2, e1 + e2 = d1 + d2 - |R|
    std::vector<Direction> directions;
    std::array<std::array<UniPoly, 2>, 2> transition;
    int r;
};

// mu_A(E) = (deg E + sum a_i) / 2
Rational slope(const WeightVector& A, const ParabolicBundle& E);

// mu_A(L, E) = e + sum of a_i over the witness incidences. Validates the
// witness against E.
Rational line_slope(const WeightVector& A, const LineSubbundleWitness& L,
                    const ParabolicBundle& E);

// Throws validation_error when the witness is not valid for E.
void validate_witness(const LineSubbundleWitness& L, const ParabolicBundle& E);

// Exact maximum of mu_A(L, E) over all line subbundles, with a maximizing
// witness. Branch-and-bound over incidence sets, degree loop cut once no
// lower degree can beat the incumbent.
std::pair<Rational, LineSubbundleWitness> max_line_slope(const ParabolicBundle& E,
                                                         const WeightVector& A);

// Unpruned reference: every incidence subset, degrees d1 down to e_floor.
Rational max_line_slope_exhaustive(const ParabolicBundle& E, const WeightVector& A,
                                   int e_floor);

StabilityReport stability_type(const ParabolicBundle& E, const WeightVector& A);

// el_R at bundle level; requires deg E = 0 and |R| even.
TransformResult elementary_transform(const ParabolicBundle& E, const EvenSubset& R);

// Escape hatch for the determinant-law tests: any subset, no twist.
RawTransform elementary_transform_raw(const ParabolicBundle& E, Mask R);

// Image of a line witness under el_R: degree drops by |R \ incidences|, rises
// by |R|/2 from the twist; incidences flip on R.
LineSubbundleWitness transform_line(const LineSubbundleWitness& L, const ParabolicBundle& E,
                                    const EvenSubset& R);

// Isomorphism over P^1 fixing each parabolic point.
bool is_isomorphic(const ParabolicBundle& E1, const ParabolicBundle& E2);

}  // namespace parvb

#endif
