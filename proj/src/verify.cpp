#include <parvb/verify.hpp>

#include <parvb/json_io.hpp>
#include <parvb/sampling.hpp>

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace parvb {

namespace {

constexpr std::uint64_t kSuiteSeed = 20260823;

WeightVector af(int n) {
    return WeightVector(n, std::vector<Rational>(static_cast<size_t>(n), make_rational(1, 2)));
}

WeightVector eps_weight(int n) {
    std::vector<Rational> a(static_cast<size_t>(n), make_rational(1, n - 3));
    a[0] = 1 - a[0];
    return WeightVector(n, std::move(a));
}

WeightVector flip_any(const WeightVector& A, Mask R) {
    std::vector<Rational> a = A.weights();
    for (int i = 0; i < A.n(); ++i)
        if ((R >> i) & 1u) a[static_cast<size_t>(i)] = 1 - a[static_cast<size_t>(i)];
    return WeightVector(A.n(), std::move(a));
}

Mask rnd_even_mask(std::mt19937_64& g, int n) {
    for (;;) {
        Mask m = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        if (popcount(m) % 2 == 0) return m;
    }
}

std::vector<int> pick(const std::vector<int>& ns, std::vector<int> pinned) {
    std::vector<int> out;
    for (int n : pinned)
        if (std::find(ns.begin(), ns.end(), n) != ns.end()) out.push_back(n);
    return out.empty() ? pinned : out;
}

struct Tally {
    long det_checked = 0, det_failed = 0;
    long gap_checked = 0, gap_failed = 0;
};

using Clock = std::chrono::steady_clock;

CriterionResult finish(int id, std::string name, bool pass, Clock::time_point t0,
                       std::string detail) {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return {id, std::move(name), pass, ms, std::move(detail)};
}

CriterionResult c1(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    std::ostringstream d;
    bool pass = true;
    for (int n : pick(ns, {5, 6, 7, 8, 9, 10})) {
        int rank = admissible_group(af(n)).rank;
        if (rank != n - 1) pass = false;
        d << "n=" << n << ":rank=" << rank << " ";
    }
    return finish(1, "El has rank n-1 at the central weight", pass, t0, d.str());
}

CriterionResult c2(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    std::ostringstream d;
    bool pass = true;
    for (int n : pick(ns, {6, 7, 8, 9})) {
        int rank = admissible_group(eps_weight(n)).rank;
        if (rank != 0) pass = false;
        d << "n=" << n << ":rank=" << rank << " ";
    }
    return finish(2, "blow-up chamber weight has trivial group", pass, t0, d.str());
}

CriterionResult c3() {
    auto t0 = Clock::now();
    SurveyReport rep = survey(6, 500, 1);
    bool pass = false;
    std::ostringstream d;
    for (const auto& [k, c] : rep.histogram) {
        if (k > 0 && k < 5) pass = true;
        d << "k=" << k << ":" << c << " ";
    }
    return finish(3, "survey finds intermediate ranks at n=6", pass, t0, d.str());
}

CriterionResult c4(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    bool pass = true;
    long checked = 0;
    for (int n : pick(ns, {5, 6})) {
        for (Mask I = 0; I < (Mask{1} << n); ++I)
            for (Mask J = 0; J < (Mask{1} << n); ++J) {
                if (popcount(J) % 2 != 0) continue;
                int expect = popcount(~I & J & ((Mask{1} << n) - 1)) + popcount(I & ~J);
                if (h_value(I, vertex(n, J)) != expect) pass = false;
                ++checked;
            }
    }
    for (int n : pick(ns, {5, 6, 7})) {
        for (Mask J = 0; J < (Mask{1} << n); ++J) {
            bool even = popcount(J) % 2 == 0;
            if (even) {
                if (!is_in_delta(vertex(n, J))) pass = false;
            } else {
                std::vector<Rational> a(static_cast<size_t>(n), Rational(0));
                for (int i = 0; i < n; ++i)
                    if ((J >> i) & 1u) a[static_cast<size_t>(i)] = 1;
                if (is_in_delta(WeightVector(n, std::move(a)))) pass = false;
            }
            ++checked;
        }
    }
    std::ostringstream d;
    d << checked << " identities checked";
    return finish(4, "vertex counting formula and vertex parity", pass, t0, d.str());
}

CriterionResult c5(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    bool pass = true;
    for (int n : pick(ns, {5, 6, 7}))
        if (!weyl_generators_check(n)) pass = false;
    std::uint64_t order = weyl_group_order(5);
    if (order != 1920) pass = false;
    std::ostringstream d;
    d << "|W(D_5)|=" << order;
    return finish(5, "Weyl group D_n symmetry and order", pass, t0, d.str());
}

CriterionResult c6(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    std::mt19937_64 g(sub_seed(kSuiteSeed, 6));
    auto nlist = pick(ns, {5, 6, 7, 8});
    bool pass = true;
    for (int t = 0; t < 1000; ++t) {
        int n = nlist[static_cast<size_t>(t) % nlist.size()];
        WeightVector A = sample_delta_offwall(n, g());
        Mask I = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        Mask R = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        if (h_value(I, flip_any(A, R)) != h_value(I ^ R, A)) pass = false;
    }
    return finish(6, "wall-flip identity on 1000 random triples", pass, t0,
                  "H_I(A^R) = H_{I xor R}(A)");
}

CriterionResult c7(const std::vector<int>& ns, Tally& tally) {
    auto t0 = Clock::now();
    std::mt19937_64 g(sub_seed(kSuiteSeed, 7));
    auto nlist = pick(ns, {5, 6});
    long done = 0, stable_in = 0;
    bool pass = true;
    while (done < 500) {
        int n = nlist[static_cast<size_t>(done) % nlist.size()];
        WeightVector A = sample_delta_offwall(n, g());
        ParabolicBundle E = sample_bundle(n, g());
        StabilityReport rep = stability_type(E, A);
        if (rep.verdict == Verdict::unstable) continue;
        EvenSubset R(n, rnd_even_mask(g, n));

        RawTransform raw = elementary_transform_raw(E, R.mask);
        ++tally.det_checked;
        if (raw.e1 + raw.e2 != E.d1 + E.d2 - raw.r) {
            ++tally.det_failed;
            pass = false;
        }

        TransformResult tr = elementary_transform(E, R);
        WeightVector AR = flip(A, R);
        StabilityReport rep2 = stability_type(tr.bundle, AR);
        if (rep2.verdict == Verdict::unstable) pass = false;
        if (rep.verdict == Verdict::stable && rep2.verdict != Verdict::stable) pass = false;

        LineSubbundleWitness Lp = transform_line(rep.witness, E, R);
        ++tally.gap_checked;
        if (line_slope(AR, Lp, tr.bundle) - slope(AR, tr.bundle) !=
            line_slope(A, rep.witness, E) - slope(A, E)) {
            ++tally.gap_failed;
            pass = false;
        }

        if (rep.verdict == Verdict::stable) ++stable_in;
        ++done;
    }
    std::ostringstream d;
    d << done << " semistable trials (" << stable_in << " stable)";
    return finish(7, "semistability preserved by admissible transforms", pass, t0, d.str());
}

CriterionResult c8(const std::vector<int>& ns, Tally& tally) {
    auto t0 = Clock::now();
    std::mt19937_64 g(sub_seed(kSuiteSeed, 8));
    auto nlist = pick(ns, {5, 6});
    bool pass = true;

    auto record = [&](const ParabolicBundle& E, Mask R) {
        RawTransform raw = elementary_transform_raw(E, R);
        ++tally.det_checked;
        if (raw.e1 + raw.e2 != E.d1 + E.d2 - raw.r) {
            ++tally.det_failed;
            pass = false;
        }
    };

    for (int t = 0; t < 100; ++t) {
        int n = nlist[static_cast<size_t>(t) % nlist.size()];
        ParabolicBundle E = sample_bundle(n, g());
        EvenSubset R(n, rnd_even_mask(g, n));
        record(E, R.mask);
        ParabolicBundle once = elementary_transform(E, R).bundle;
        record(once, R.mask);
        if (!is_isomorphic(elementary_transform(once, R).bundle, E)) pass = false;
    }
    for (int t = 0; t < 100; ++t) {
        int n = nlist[static_cast<size_t>(t) % nlist.size()];
        ParabolicBundle E = sample_bundle(n, g());
        EvenSubset R(n, rnd_even_mask(g, n)), S(n, rnd_even_mask(g, n));
        record(E, R.mask);
        ParabolicBundle once = elementary_transform(E, R).bundle;
        record(once, S.mask);
        record(E, compose(R, S).mask);
        ParabolicBundle rs = elementary_transform(once, S).bundle;
        ParabolicBundle direct = elementary_transform(E, compose(R, S)).bundle;
        if (!is_isomorphic(rs, direct)) pass = false;
    }
    return finish(8, "involution and composition law at bundle level", pass, t0,
                  "100 + 100 instances");
}

CriterionResult c9(const Tally& tally, Clock::time_point t0) {
    std::ostringstream d;
    d << tally.det_checked << " transforms, " << tally.det_failed << " violations";
    return finish(9, "determinant degree law on every transform", tally.det_failed == 0, t0,
                  d.str());
}

CriterionResult c10(const Tally& tally, Clock::time_point t0) {
    std::ostringstream d;
    d << tally.gap_checked << " witnesses, " << tally.gap_failed << " violations";
    return finish(10, "slope-gap identity on every tracked witness", tally.gap_failed == 0, t0,
                  d.str());
}

CriterionResult c11(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    std::mt19937_64 g(sub_seed(kSuiteSeed, 11));
    auto nlist = pick(ns, {5, 6});
    bool pass = true;
    for (int t = 0; t < 200; ++t) {
        int n = nlist[static_cast<size_t>(t) % nlist.size()];
        WeightVector A = sample_delta_offwall(n, g());
        ParabolicBundle E = sample_bundle(n, g());
        auto [mx, wit] = max_line_slope(E, A);
        if (mx != max_line_slope_exhaustive(E, A, -n)) pass = false;
        if (line_slope(A, wit, E) != mx) pass = false;
    }
    return finish(11, "pruned search equals the exhaustive oracle", pass, t0, "200 instances");
}

CriterionResult c12(const std::vector<int>& ns) {
    auto t0 = Clock::now();
    std::mt19937_64 g(sub_seed(kSuiteSeed, 12));
    // box around the central weight; wider boxes only add rejections
    std::uniform_int_distribution<long> k(350, 650);
    bool pass = true;
    long rejected = 0;
    for (int n : pick(ns, {5, 7})) {
        const auto walls = wall_list(n);
        const WallSignature center = signature(af(n));
        int found = 0;
        while (found < 100) {
            std::vector<Rational> a(static_cast<size_t>(n));
            for (auto& x : a) x = make_rational(k(g), 1000);
            WeightVector A(n, std::move(a));
            bool same = is_in_delta(A);
            for (size_t w = 0; same && w < walls.size(); ++w)
                if (sgn(h_value(walls[w].I, A) - walls[w].k) != center.signs[w]) same = false;
            if (!same) {
                ++rejected;
                continue;
            }
            if (!is_in_pi(A, true)) pass = false;
            ++found;
        }
    }
    std::ostringstream d;
    d << "100 chamber points per n, " << rejected << " rejections";
    return finish(12, "central chamber lies strictly inside Pi", pass, t0, d.str());
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::vector<int> ns) {
    if (ns.empty()) ns = {5, 6, 7, 8, 9, 10};
    for (int n : ns)
        if (n < 5 || n > 10) throw validation_error("verify supports n in 5..10");

    std::vector<CriterionResult> out;
    Tally tally;
    out.push_back(c1(ns));
    out.push_back(c2(ns));
    out.push_back(c3());
    out.push_back(c4(ns));
    out.push_back(c5(ns));
    out.push_back(c6(ns));
    out.push_back(c7(ns, tally));
    out.push_back(c8(ns, tally));
    out.push_back(c9(tally, Clock::now()));
    out.push_back(c10(tally, Clock::now()));
    out.push_back(c11(ns));
    out.push_back(c12(ns));
    return out;
}

}  // namespace parvb
