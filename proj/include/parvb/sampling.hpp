#ifndef PARVB_SAMPLING_HPP
#define PARVB_SAMPLING_HPP

#include <parvb/parabolic.hpp>

#include <cstdint>
#include <map>
#include <optional>

namespace parvb {

// Independent stream seed for trial `index` of a campaign.
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index);

// Random weight strictly inside Pi, coordinates k/1000.
WeightVector sample_pi_interior(int n, std::uint64_t seed);

// Random weight in Delta whose signature has no zeros.
WeightVector sample_delta_offwall(int n, std::uint64_t seed);

// Random degree-0 bundle: splitting (0,0) or (1,-1), points 0..n-1 shifted by
// a random offset, small integer direction slopes with occasional verticals.
ParabolicBundle sample_bundle(int n, std::uint64_t seed);

struct SurveyReport {
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::map<int, long> histogram;  // admissible rank -> count
    std::map<int, WeightVector> representatives;
};

// Admissible-rank histogram over `samples` weights strictly inside Pi.
// Parallel over samples; the representative for each rank is the one with the
// smallest trial index, so the report is deterministic.
SurveyReport survey(int n, int samples, std::uint64_t seed);

}  // namespace parvb

#endif
