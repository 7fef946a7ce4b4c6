#ifndef PARVB_ELTRANS_HPP
#define PARVB_ELTRANS_HPP

#include <parvb/weightpoly.hpp>

#include <vector>

namespace parvb {

// Element of El: subset R of {1..n} of even cardinality (0 allowed).
struct EvenSubset {
    int n;
    Mask mask;

    EvenSubset(int n_, Mask mask_);
    int cardinality() const { return popcount(mask); }
};

// The admissible subgroup El_A, an F2-vector space of even subsets.
struct AdmissibleGroup {
    int n;
    std::vector<EvenSubset> elements;    // sorted by mask, contains the identity
    std::vector<EvenSubset> generators;  // minimal, greedily chosen by smallest mask
    int rank;                            // |elements| = 2^rank
};

// A^R: a_i -> 1 - a_i on R.
WeightVector flip(const WeightVector& A, const EvenSubset& R);

// el_R . el_S = el_{R xor S}
EvenSubset compose(const EvenSubset& R, const EvenSubset& S);

// A^R lies in the chamber of A (full signature equality, zeros included).
// Requires A in Delta.
bool is_admissible(const WeightVector& A, const EvenSubset& R);

// Enumerates all 2^(n-1) even subsets and keeps the admissible ones.
// The parallel variant partitions the enumeration across OpenMP threads and
// merges deterministically; results are identical to the serial reference.
AdmissibleGroup admissible_group(const WeightVector& A);
AdmissibleGroup admissible_group_serial(const WeightVector& A);

}  // namespace parvb

#endif
