#include <parvb/sampling.hpp>

#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace parvb {

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step on seed + golden-ratio stride per index
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

WeightVector sample_pi_interior(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<long> k(0, 1000);
    for (;;) {
        std::vector<Rational> a(static_cast<size_t>(n));
        for (auto& x : a) x = make_rational(k(g), 1000);
        WeightVector A(n, std::move(a));
        if (is_in_pi(A, true)) return A;
    }
}

WeightVector sample_delta_offwall(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<long> k(0, 1000);
    for (;;) {
        std::vector<Rational> a(static_cast<size_t>(n));
        for (auto& x : a) x = make_rational(k(g), 1000);
        WeightVector A(n, std::move(a));
        if (!is_in_delta(A)) continue;
        WallSignature s = signature(A);
        bool on_wall = false;
        for (int v : s.signs)
            if (v == 0) on_wall = true;
        if (!on_wall) return A;
    }
}

ParabolicBundle sample_bundle(int n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<int> split(0, 1);
    std::uniform_int_distribution<long> offset(-3, 3);
    std::uniform_int_distribution<long> slope(-5, 5);
    std::uniform_int_distribution<int> vertical(0, 9);
    int d = split(g);
    long off = offset(g);
    std::vector<Rational> pts;
    for (int i = 0; i < n; ++i) pts.emplace_back(off + i);
    std::vector<Direction> dirs;
    for (int i = 0; i < n; ++i) {
        if (vertical(g) == 0)
            dirs.emplace_back(Rational(0), Rational(1));
        else
            dirs.emplace_back(Rational(1), Rational(slope(g)));
    }
    return ParabolicBundle(d, -d, std::move(pts), std::move(dirs));
}

SurveyReport survey(int n, int samples, std::uint64_t seed) {
    if (n < 5 || n > kMaxPoints) throw validation_error("bad survey dimension");
    if (samples < 1) throw validation_error("samples must be positive");

    std::vector<int> ranks(static_cast<size_t>(samples), -1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (int i = 0; i < samples; ++i) {
        WeightVector A = sample_pi_interior(n, sub_seed(seed, static_cast<std::uint64_t>(i)));
        ranks[static_cast<size_t>(i)] = admissible_group(A).rank;
    }

    SurveyReport rep;
    rep.n = n;
    rep.samples = samples;
    rep.seed = seed;
    for (int i = 0; i < samples; ++i) {
        int k = ranks[static_cast<size_t>(i)];
        ++rep.histogram[k];
        if (!rep.representatives.contains(k))
            rep.representatives.emplace(
                k, sample_pi_interior(n, sub_seed(seed, static_cast<std::uint64_t>(i))));
    }
    return rep;
}

}  // namespace parvb
