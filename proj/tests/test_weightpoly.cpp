#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parvb/weightpoly.hpp>

#include <random>
#include <set>
#include <utility>

using namespace parvb;

namespace {

WeightVector af(int n) {
    return WeightVector(n, std::vector<Rational>(static_cast<size_t>(n), make_rational(1, 2)));
}

// Independent oracle for H_I on a 0/1 vertex: the counting formula.
long count_h(Mask I, Mask J, int n) {
    Mask full = (Mask{1} << n) - 1;
    return popcount((full ^ I) & J) + popcount((full ^ J) & I);
}

WeightVector rnd_weight(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<long> num(0, 24);
    std::vector<Rational> a(static_cast<size_t>(n));
    for (auto& x : a) x = make_rational(num(g), 24);
    return WeightVector(n, std::move(a));
}

WeightVector eps_weight(int n) {
    // (2/3, 1/3, ..., 1/3), i.e. (1-e, e, ..., e) with e = 1/(n-3) at n = 6
    std::vector<Rational> a(static_cast<size_t>(n), make_rational(1, 3));
    a[0] = make_rational(2, 3);
    return WeightVector(n, std::move(a));
}

}  // namespace

TEST_CASE("weight vector validation") {
    CHECK_THROWS_AS(WeightVector(4, std::vector<Rational>(4, make_rational(1, 2))),
                    validation_error);
    CHECK_THROWS_AS(WeightVector(5, std::vector<Rational>(4, make_rational(1, 2))),
                    validation_error);
    CHECK_THROWS_AS(WeightVector(5, std::vector<Rational>(5, make_rational(3, 2))),
                    validation_error);
}

TEST_CASE("h_value examples") {
    WeightVector xi12 = vertex(5, 0b00011);
    CHECK(h_value(0b00001, xi12) == 1);
    WeightVector a6 = af(6);
    for (Mask I : {Mask{0}, Mask{0b111}, Mask{0b101010}})
        CHECK(h_value(I, a6) == 3);
    WeightVector w(5, {make_rational(1, 2), make_rational(1, 3), make_rational(1, 4),
                       make_rational(1, 5), make_rational(1, 6)});
    CHECK(h_value(0, w) == w.total());
}

TEST_CASE("H_I(xi_J) equals the counting formula, exhaustively for n = 5, 6") {
    for (int n : {5, 6}) {
        Mask full = (Mask{1} << n) - 1;
        for (Mask I = 0; I <= full; ++I)
            for (Mask J = 0; J <= full; ++J)
                CHECK(h_value(I, vertex(n, J)) == count_h(I, J, n));
    }
}

TEST_CASE("H_I + H_{I^c} = n") {
    std::mt19937_64 g(5);
    for (int t = 0; t < 50; ++t) {
        int n = 5 + static_cast<int>(g() % 4);
        WeightVector A = rnd_weight(g, n);
        Mask full = (Mask{1} << n) - 1;
        Mask I = static_cast<Mask>(g()) & full;
        CHECK(h_value(I, A) + h_value(full ^ I, A) == n);
    }
}

TEST_CASE("delta membership on hypercube vertices, n = 5, 6, 7") {
    for (int n : {5, 6, 7}) {
        Mask full = (Mask{1} << n) - 1;
        for (Mask J = 0; J <= full; ++J)
            CHECK(is_in_delta(vertex(n, J)) == (popcount(J) % 2 == 0));
    }
}

TEST_CASE("delta and pi membership examples") {
    CHECK(is_in_delta(af(5)));
    CHECK(is_in_pi(af(5), true));
    CHECK_FALSE(is_in_pi(vertex(5, 0b00011)));  // H_{1,2} = 0
    CHECK(is_in_pi(eps_weight(6), true));
}

TEST_CASE("strict pi membership agrees with brute force over all 2^n inequalities") {
    std::mt19937_64 g(17);
    for (int t = 0; t < 60; ++t) {
        int n = 5 + static_cast<int>(g() % 2);
        WeightVector A = rnd_weight(g, n);
        bool expect = true;
        for (int i = 0; i < n; ++i)
            if (!(A.a(i) > 0 && A.a(i) < 1)) expect = false;
        for (Mask I = 0; I < (Mask{1} << n) && expect; ++I) {
            Rational h = h_value(I, A);
            if (popcount(I) % 2 == 1 && !(h > 1)) expect = false;
            if (popcount(I) % 2 == 0 && !(h > 2)) expect = false;
        }
        CHECK(is_in_pi(A, true) == expect);
    }
}

TEST_CASE("strict pi implies delta") {
    std::mt19937_64 g(23);
    for (int t = 0; t < 100; ++t) {
        WeightVector A = rnd_weight(g, 6);
        if (is_in_pi(A, true)) CHECK(is_in_delta(A));
    }
}

TEST_CASE("wall_list counts and invariants") {
    auto w5 = wall_list(5);
    CHECK(w5.size() == 16);  // k = 2 only, even subsets of {1..5}
    auto w6 = wall_list(6);
    CHECK(w6.size() == 48);  // 32 at k = 2, 32/2 at k = 3

    for (int n : {5, 6, 7, 8}) {
        auto walls = wall_list(n);
        Mask full = (Mask{1} << n) - 1;
        std::set<std::pair<Mask, int>> seen;
        for (const Wall& w : walls) {
            CHECK(2 <= w.k);
            CHECK(2 * w.k <= n);
            CHECK(popcount(w.I) % 2 == w.k % 2);
            if (2 * w.k == n) CHECK(w.I <= (full ^ w.I));
            CHECK(seen.insert({w.I, w.k}).second);
            if (2 * w.k == n) CHECK(!seen.contains({full ^ w.I, w.k}));
        }
        // deterministic order: by k then mask
        for (size_t i = 1; i < walls.size(); ++i) {
            CHECK((walls[i - 1].k < walls[i].k ||
                   (walls[i - 1].k == walls[i].k && walls[i - 1].I < walls[i].I)));
        }
    }
}

TEST_CASE("signature of the central weight") {
    auto s5 = signature(af(5));
    for (int s : s5.signs) CHECK(s == 1);  // all H_I = 5/2, walls at k = 2

    auto s6 = signature(af(6));
    auto w6 = wall_list(6);
    for (size_t i = 0; i < w6.size(); ++i)
        CHECK(s6.signs[i] == (w6[i].k == 2 ? 1 : 0));  // H_I = 3 everywhere
}

TEST_CASE("signature of an open-chamber weight has no zeros") {
    auto sig = signature(eps_weight(6));
    for (int s : sig.signs) CHECK(s != 0);
}

TEST_CASE("same_chamber examples") {
    CHECK(same_chamber(af(6), af(6)));

    std::vector<Rational> b(6, make_rational(1, 2));
    b[0] = make_rational(51, 100);
    b[1] = make_rational(49, 100);
    CHECK_FALSE(same_chamber(af(6), WeightVector(6, b)));

    // two perturbations of the same open chamber
    WeightVector base = eps_weight(6);
    std::vector<Rational> p1 = base.weights(), p2 = base.weights();
    p1[2] += make_rational(1, 1000);
    p2[3] -= make_rational(1, 1000);
    CHECK(same_chamber(WeightVector(6, p1), WeightVector(6, p2)));
    CHECK(same_chamber(base, WeightVector(6, p1)));

    CHECK_THROWS_AS(same_chamber(af(5), af(6)), validation_error);
    CHECK_THROWS_AS(signature(vertex(5, 0b1)), validation_error);
}

TEST_CASE("same_chamber is an equivalence on sampled triples") {
    std::mt19937_64 g(31);
    std::vector<WeightVector> pts;
    while (pts.size() < 12) {
        WeightVector A = rnd_weight(g, 5);
        if (is_in_delta(A)) pts.push_back(A);
    }
    for (const auto& a : pts)
        for (const auto& b : pts)
            for (const auto& c : pts) {
                CHECK(same_chamber(a, a));
                CHECK(same_chamber(a, b) == same_chamber(b, a));
                if (same_chamber(a, b) && same_chamber(b, c)) CHECK(same_chamber(a, c));
            }
}

TEST_CASE("wall-flip identity H_I(A^R) = H_{I xor R}(A)") {
    std::mt19937_64 g(37);
    for (int t = 0; t < 300; ++t) {
        int n = 5 + static_cast<int>(g() % 4);
        WeightVector A = rnd_weight(g, n);
        Mask full = (Mask{1} << n) - 1;
        Mask I = static_cast<Mask>(g()) & full;
        Mask R = static_cast<Mask>(g()) & full;
        std::vector<Rational> flipped = A.weights();
        for (int i = 0; i < n; ++i)
            if ((R >> i) & 1u)
                flipped[static_cast<size_t>(i)] = 1 - flipped[static_cast<size_t>(i)];
        CHECK(h_value(I, WeightVector(n, flipped)) == h_value(I ^ R, A));
    }
}

TEST_CASE("Weyl generator checks") {
    CHECK(weyl_generators_check(5));
    CHECK(weyl_generators_check(6));
    CHECK(weyl_group_order(5) == 1920);  // 2^4 * 5!
}
