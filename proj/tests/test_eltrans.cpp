#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <parvb/eltrans.hpp>

#include <random>

using namespace parvb;

namespace {

WeightVector af(int n) {
    return WeightVector(n, std::vector<Rational>(static_cast<size_t>(n), make_rational(1, 2)));
}

WeightVector eps_weight(int n) {
    std::vector<Rational> a(static_cast<size_t>(n), make_rational(1, 3));
    a[0] = make_rational(2, 3);
    return WeightVector(n, std::move(a));
}

WeightVector rnd_delta_weight(std::mt19937_64& g, int n) {
    std::uniform_int_distribution<long> num(0, 24);
    for (;;) {
        std::vector<Rational> a(static_cast<size_t>(n));
        for (auto& x : a) x = make_rational(num(g), 24);
        WeightVector A(n, std::move(a));
        if (is_in_delta(A)) return A;
    }
}

Mask rnd_even_mask(std::mt19937_64& g, int n) {
    for (;;) {
        Mask m = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        if (popcount(m) % 2 == 0) return m;
    }
}

}  // namespace

TEST_CASE("even subset validation") {
    CHECK_NOTHROW(EvenSubset(6, 0));
    CHECK_NOTHROW(EvenSubset(6, 0b000011));
    CHECK_THROWS_AS(EvenSubset(6, 0b000001), validation_error);
    CHECK_THROWS_AS(EvenSubset(6, 0b1000000), validation_error);
}

TEST_CASE("flip examples") {
    WeightVector a = af(6);
    for (Mask m : {Mask{0}, Mask{0b11}, Mask{0b111100}})
        CHECK(flip(a, EvenSubset(6, m)) == a);

    WeightVector e = eps_weight(6);
    WeightVector f = flip(e, EvenSubset(6, 0b000011));
    CHECK(f.a(0) == make_rational(1, 3));
    CHECK(f.a(1) == make_rational(2, 3));
    for (int i = 2; i < 6; ++i) CHECK(f.a(i) == make_rational(1, 3));

    CHECK(flip(e, EvenSubset(6, 0)) == e);
    CHECK_THROWS_AS(flip(af(5), EvenSubset(6, 0)), validation_error);
}

TEST_CASE("flip is an involution") {
    std::mt19937_64 g(3);
    for (int t = 0; t < 100; ++t) {
        int n = 5 + static_cast<int>(g() % 3);
        WeightVector A = rnd_delta_weight(g, n);
        EvenSubset R(n, rnd_even_mask(g, n));
        CHECK(flip(flip(A, R), R) == A);
    }
}

TEST_CASE("compose") {
    EvenSubset r12(6, 0b000011), r23(6, 0b000110);
    CHECK(compose(r12, r23).mask == 0b000101);
    CHECK(compose(r12, r12).mask == 0);
    CHECK(compose(r12, EvenSubset(6, 0)).mask == r12.mask);
    CHECK_THROWS_AS(compose(r12, EvenSubset(7, 0)), validation_error);
}

TEST_CASE("admissibility examples") {
    WeightVector a = af(6);
    for (Mask m : {Mask{0}, Mask{0b11}, Mask{0b001111}, Mask{0b111111}})
        CHECK(is_admissible(a, EvenSubset(6, m)));

    WeightVector e = eps_weight(6);
    CHECK(is_admissible(e, EvenSubset(6, 0)));
    CHECK_FALSE(is_admissible(e, EvenSubset(6, 0b000011)));
    // the separating wall: I = {2,3,4}, k = 3
    CHECK(h_value(0b001110, e) == make_rational(10, 3));
    CHECK(h_value(0b001110, flip(e, EvenSubset(6, 0b000011))) == make_rational(8, 3));
}

TEST_CASE("admissible group of the central weight is all of El") {
    for (int n : {5, 6, 7}) {
        AdmissibleGroup g = admissible_group(af(n));
        CHECK(g.rank == n - 1);
        CHECK(g.elements.size() == (size_t{1} << (n - 1)));
        CHECK(g.generators.size() == static_cast<size_t>(n - 1));
    }
}

TEST_CASE("admissible group of the blow-up chamber weight is trivial") {
    AdmissibleGroup g = admissible_group(eps_weight(6));
    CHECK(g.rank == 0);
    REQUIRE(g.elements.size() == 1);
    CHECK(g.elements[0].mask == 0);
}

TEST_CASE("group structure on random weights") {
    std::mt19937_64 g(13);
    for (int t = 0; t < 25; ++t) {
        int n = 5 + static_cast<int>(g() % 2);
        WeightVector A = rnd_delta_weight(g, n);
        AdmissibleGroup grp = admissible_group(A);  // closure verified internally
        CHECK(grp.elements.size() == (size_t{1} << grp.rank));
        CHECK(grp.elements[0].mask == 0);
        // generators span: reconstruct all elements
        std::set<Mask> span{0};
        for (const auto& gen : grp.generators) {
            std::set<Mask> next = span;
            for (Mask m : span) next.insert(m ^ gen.mask);
            span = next;
        }
        std::set<Mask> elems;
        for (const auto& el : grp.elements) elems.insert(el.mask);
        CHECK(span == elems);
    }
}

TEST_CASE("functoriality: the group is chamber data") {
    std::mt19937_64 g(19);
    int done = 0;
    while (done < 10) {
        int n = 5 + static_cast<int>(g() % 2);
        WeightVector A = rnd_delta_weight(g, n);
        AdmissibleGroup grp = admissible_group(A);
        if (grp.elements.size() < 2) continue;
        const EvenSubset& r0 = grp.elements[1];
        AdmissibleGroup grp2 = admissible_group(flip(A, r0));
        REQUIRE(grp.elements.size() == grp2.elements.size());
        for (size_t i = 0; i < grp.elements.size(); ++i)
            CHECK(grp.elements[i].mask == grp2.elements[i].mask);
        ++done;
    }
}

TEST_CASE("strict Pi is invariant under admissible flips") {
    std::mt19937_64 g(29);
    int done = 0;
    while (done < 10) {
        int n = 5 + static_cast<int>(g() % 2);
        WeightVector A = rnd_delta_weight(g, n);
        if (!is_in_pi(A, true)) continue;
        for (const auto& r : admissible_group(A).elements)
            CHECK(is_in_pi(flip(A, r), true));
        ++done;
    }
}

TEST_CASE("parallel enumeration matches the serial reference") {
    std::mt19937_64 g(41);
    for (int t = 0; t < 10; ++t) {
        int n = 5 + static_cast<int>(g() % 3);
        WeightVector A = rnd_delta_weight(g, n);
        AdmissibleGroup p = admissible_group(A);
        AdmissibleGroup s = admissible_group_serial(A);
        REQUIRE(p.elements.size() == s.elements.size());
        for (size_t i = 0; i < p.elements.size(); ++i)
            CHECK(p.elements[i].mask == s.elements[i].mask);
        CHECK(p.rank == s.rank);
        REQUIRE(p.generators.size() == s.generators.size());
        for (size_t i = 0; i < p.generators.size(); ++i)
            CHECK(p.generators[i].mask == s.generators[i].mask);
    }
}
