#include <parvb/weightpoly.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <unordered_set>

namespace parvb {

WeightVector::WeightVector(int n, std::vector<Rational> a) : n_(n), a_(std::move(a)) {
    if (n_ < 5) throw validation_error("n >= 5 required (n = 4 is out of scope)");
    if (n_ > kMaxPoints) throw validation_error("n too large");
    if (static_cast<int>(a_.size()) != n_)
        throw validation_error("weight count does not match n");
    for (const auto& x : a_)
        if (x < 0 || x > 1) throw validation_error("weight outside [0,1]");
}

Rational WeightVector::total() const {
    Rational s(0);
    for (const auto& x : a_) s += x;
    return s;
}

WeightVector vertex(int n, Mask J) {
    std::vector<Rational> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = (J >> i) & 1u ? 1 : 0;
    return WeightVector(n, std::move(a));
}

Rational h_value(Mask I, const WeightVector& A) {
    if (I >> A.n()) throw validation_error("subset index outside {1..n}");
    Rational s(0);
    for (int i = 0; i < A.n(); ++i) {
        if ((I >> i) & 1u)
            s += 1 - A.a(i);
        else
            s += A.a(i);
    }
    return s;
}

namespace {

// H over all subsets by shared-prefix recursion: H[I] = H[I \ lowbit] + c[lowbit]
// with c_i = 1 - 2 a_i and H[0] = sum a_i.
std::vector<Rational> all_h_values(const WeightVector& A) {
    const int n = A.n();
    std::vector<Rational> c(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = 1 - 2 * A.a(i);
    std::vector<Rational> h(size_t{1} << n);
    h[0] = A.total();
    for (Mask m = 1; m < (Mask{1} << n); ++m) {
        int low = __builtin_ctz(m);
        h[m] = h[m & (m - 1)] + c[static_cast<size_t>(low)];
    }
    return h;
}

bool ge(const Rational& x, long b, bool strict) { return strict ? x > b : x >= b; }

}  // namespace

bool is_in_delta(const WeightVector& A, bool strict) {
    for (int i = 0; i < A.n(); ++i)
        if (!(strict ? (A.a(i) > 0 && A.a(i) < 1) : true)) return false;
    auto h = all_h_values(A);
    for (Mask I = 0; I < (Mask{1} << A.n()); ++I)
        if (popcount(I) % 2 == 1 && !ge(h[I], 1, strict)) return false;
    return true;
}

bool is_in_pi(const WeightVector& A, bool strict) {
    if (!is_in_delta(A, strict)) return false;
    auto h = all_h_values(A);
    for (Mask I = 0; I < (Mask{1} << A.n()); ++I)
        if (popcount(I) % 2 == 0 && !ge(h[I], 2, strict)) return false;
    return true;
}

std::vector<Wall> wall_list(int n) {
    if (n < 5) throw validation_error("n >= 5 required");
    std::vector<Wall> walls;
    const Mask full = (Mask{1} << n) - 1;
    for (int k = 2; 2 * k <= n; ++k) {
        for (Mask I = 0; I <= full; ++I) {
            if (popcount(I) % 2 != k % 2) continue;
            if (2 * k == n && (full ^ I) < I) continue;  // H_I + H_{I^c} = n
            walls.push_back({I, k});
        }
    }
    return walls;
}

WallSignature signature(const WeightVector& A) {
    if (!is_in_delta(A)) throw validation_error("weight vector outside Delta");
    WallSignature sig{A.n(), {}};
    auto walls = wall_list(A.n());
    sig.signs.reserve(walls.size());
    for (const Wall& w : walls) {
        Rational d = h_value(w.I, A) - w.k;
        sig.signs.push_back(sgn(d));
    }
    return sig;
}

bool same_chamber(const WeightVector& A, const WeightVector& B) {
    if (A.n() != B.n()) throw validation_error("dimension mismatch");
    return signature(A) == signature(B);
}

namespace {

// Signed-permutation element: apply coordinate flips F_m, then permutation
// sigma (entry i goes to slot sigma[i]). Encoded base-8 for n <= 7.
struct SignedPerm {
    std::array<int, 8> sigma{};
    Mask flips = 0;
};

std::uint64_t encode(const SignedPerm& g, int n) {
    std::uint64_t v = g.flips;
    for (int i = 0; i < n; ++i)
        v = (v << 3) | static_cast<std::uint64_t>(g.sigma[static_cast<size_t>(i)]);
    return v;
}

SignedPerm compose(const SignedPerm& g2, const SignedPerm& g1, int n) {
    SignedPerm r;
    for (int i = 0; i < n; ++i)
        r.sigma[static_cast<size_t>(i)] =
            g2.sigma[static_cast<size_t>(g1.sigma[static_cast<size_t>(i)])];
    // F_m P = P F_{P^-1(m)}
    Mask pulled = 0;
    for (int i = 0; i < n; ++i)
        if ((g2.flips >> g1.sigma[static_cast<size_t>(i)]) & 1u) pulled |= Mask{1} << i;
    r.flips = g1.flips ^ pulled;
    return r;
}

std::vector<SignedPerm> weyl_generators(int n) {
    std::vector<SignedPerm> gens;
    for (int i = 0; i + 1 < n; ++i) {
        SignedPerm t;
        for (int j = 0; j < n; ++j) t.sigma[static_cast<size_t>(j)] = j;
        std::swap(t.sigma[static_cast<size_t>(i)], t.sigma[static_cast<size_t>(i + 1)]);
        gens.push_back(t);
    }
    SignedPerm f;
    for (int j = 0; j < n; ++j) f.sigma[static_cast<size_t>(j)] = j;
    f.flips = 0b11;
    gens.push_back(f);
    return gens;
}

Mask canonical_wall_mask(Mask I, int k, int n) {
    const Mask full = (Mask{1} << n) - 1;
    if (2 * k == n) return std::min(I, full ^ I);
    return I;
}

}  // namespace

unsigned long weyl_group_order(int n) {
    if (n > 7) throw validation_error("group closure supported for n <= 7 only");
    auto gens = weyl_generators(n);
    SignedPerm id;
    for (int j = 0; j < n; ++j) id.sigma[static_cast<size_t>(j)] = j;
    std::unordered_set<std::uint64_t> seen{encode(id, n)};
    std::vector<SignedPerm> frontier{id};
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& g : frontier) {
            for (const auto& s : gens) {
                SignedPerm h = compose(s, g, n);
                if (seen.insert(encode(h, n)).second) next.push_back(h);
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

bool weyl_generators_check(int n) {
    if (n < 5) throw validation_error("n >= 5 required");
    const Mask full = (Mask{1} << n) - 1;

    std::set<Mask> even_vertices;
    for (Mask J = 0; J <= full; ++J)
        if (popcount(J) % 2 == 0) even_vertices.insert(J);

    auto walls = wall_list(n);
    std::set<std::pair<Mask, int>> wall_set;
    for (const Wall& w : walls) wall_set.insert({w.I, w.k});

    // Every transposition (i j) and every pair flip {i,j}.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            // transposition on vertices and walls
            auto swap_mask = [&](Mask m) {
                Mask out = m & ~((Mask{1} << i) | (Mask{1} << j));
                if ((m >> i) & 1u) out |= Mask{1} << j;
                if ((m >> j) & 1u) out |= Mask{1} << i;
                return out;
            };
            std::set<Mask> vimg;
            for (Mask J : even_vertices) vimg.insert(swap_mask(J));
            if (vimg != even_vertices) return false;
            std::set<std::pair<Mask, int>> wimg;
            for (const Wall& w : walls)
                wimg.insert({canonical_wall_mask(swap_mask(w.I), w.k, n), w.k});
            if (wimg != wall_set) return false;

            // pair flip: vertices J -> J xor {i,j}; walls (I,k) -> (I xor {i,j}, k)
            Mask pair = (Mask{1} << i) | (Mask{1} << j);
            std::set<Mask> fimg;
            for (Mask J : even_vertices) {
                // coordinate-level application, then read back the mask
                WeightVector v = vertex(n, J);
                std::vector<Rational> b = v.weights();
                b[static_cast<size_t>(i)] = 1 - b[static_cast<size_t>(i)];
                b[static_cast<size_t>(j)] = 1 - b[static_cast<size_t>(j)];
                Mask img = 0;
                for (int t = 0; t < n; ++t) {
                    if (b[static_cast<size_t>(t)] == 1)
                        img |= Mask{1} << t;
                    else if (b[static_cast<size_t>(t)] != 0)
                        return false;
                }
                fimg.insert(img);
                if (img != (J ^ pair)) return false;
            }
            if (fimg != even_vertices) return false;
            std::set<std::pair<Mask, int>> wfimg;
            for (const Wall& w : walls)
                wfimg.insert({canonical_wall_mask(w.I ^ pair, w.k, n), w.k});
            if (wfimg != wall_set) return false;
        }
    }

    if (n <= 7) {
        unsigned long expect = 1;
        for (int i = 2; i <= n; ++i) expect *= static_cast<unsigned long>(i);
        expect <<= (n - 1);
        if (weyl_group_order(n) != expect) return false;
    }
    return true;
}

}  // namespace parvb
