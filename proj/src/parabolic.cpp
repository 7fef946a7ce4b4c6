#include <parvb/parabolic.hpp>
#include <parvb/ratmatrix.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace parvb {

Direction::Direction(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {
    if (x == 0 && y == 0) throw validation_error("direction (0,0) is not projective");
    if (x != 0) {
        y /= x;
        x = 1;
    } else {
        y = 1;
    }
}

ParabolicBundle::ParabolicBundle(int d1_, int d2_, std::vector<Rational> points_,
                                 std::vector<Direction> directions_)
    : d1(d1_), d2(d2_), points(std::move(points_)), directions(std::move(directions_)) {
    if (d1 < d2) throw validation_error("splitting type requires d1 >= d2");
    if (points.size() < 5) throw validation_error("n >= 5 required");
    if (points.size() > static_cast<size_t>(kMaxPoints)) throw validation_error("n too large");
    if (points.size() != directions.size())
        throw validation_error("points/directions count mismatch");
    std::set<Rational> seen(points.begin(), points.end());
    if (seen.size() != points.size()) throw validation_error("parabolic points must be distinct");
}

Rational slope(const WeightVector& A, const ParabolicBundle& E) {
    if (A.n() != E.n()) throw validation_error("dimension mismatch");
    return (E.degree() + A.total()) / 2;
}

namespace {

bool vanish_at_inf(const UniPoly& f, int bound) {
    return f.is_zero() || f.degree() < bound;
}

// Coefficient layout for Hom(O(e), O(d1)+O(d2)): f coefficients then g.
struct SectionLayout {
    int nf, ng;
    SectionLayout(const ParabolicBundle& E, int e)
        : nf(std::max(E.d1 - e + 1, 0)), ng(std::max(E.d2 - e + 1, 0)) {}
    int dim() const { return nf + ng; }
};

std::pair<Rational, Rational> eval_pair(const SectionLayout& lay,
                                        const std::vector<Rational>& w, const Rational& p) {
    Rational f(0), pw(1);
    for (int j = 0; j < lay.nf; ++j) {
        f += w[static_cast<size_t>(j)] * pw;
        pw *= p;
    }
    Rational g(0);
    pw = 1;
    for (int j = 0; j < lay.ng; ++j) {
        g += w[static_cast<size_t>(lay.nf + j)] * pw;
        pw *= p;
    }
    return {f, g};
}

std::pair<UniPoly, UniPoly> to_polys(const SectionLayout& lay, const std::vector<Rational>& w) {
    std::vector<Rational> fc(w.begin(), w.begin() + lay.nf);
    std::vector<Rational> gc(w.begin() + lay.nf, w.begin() + lay.nf + lay.ng);
    return {UniPoly(std::move(fc)), UniPoly(std::move(gc))};
}

// Basis of pairs (f, g), deg f <= d1-e, deg g <= d2-e, whose value at p_i is
// proportional to the parabolic direction for every i in T.
std::vector<std::vector<Rational>> section_basis(const ParabolicBundle& E, int e, Mask T) {
    SectionLayout lay(E, e);
    if (lay.dim() == 0) return {};
    RatMatrix m(static_cast<size_t>(popcount(T)), static_cast<size_t>(lay.dim()));
    size_t row = 0;
    for (int i = 0; i < E.n(); ++i) {
        if (!((T >> i) & 1u)) continue;
        const Rational& p = E.points[static_cast<size_t>(i)];
        const Direction& d = E.directions[static_cast<size_t>(i)];
        Rational pw(1);
        for (int j = 0; j < lay.nf; ++j) {
            m.at(row, static_cast<size_t>(j)) = d.y * pw;
            pw *= p;
        }
        pw = 1;
        for (int j = 0; j < lay.ng; ++j) {
            m.at(row, static_cast<size_t>(lay.nf + j)) = -d.x * pw;
            pw *= p;
        }
        ++row;
    }
    return nullspace(m);
}

// A subset T is feasible at degree e when some constrained pair is nonzero at
// every point of T. Vanishing at p_i is linear, so it is enough that for each
// i some basis vector survives.
bool feasible(const ParabolicBundle& E, int e,
              const std::vector<std::vector<Rational>>& basis, Mask T) {
    if (basis.empty()) return false;
    SectionLayout lay(E, e);
    for (int i = 0; i < E.n(); ++i) {
        if (!((T >> i) & 1u)) continue;
        bool alive = false;
        for (const auto& w : basis) {
            auto [f, g] = eval_pair(lay, w, E.points[static_cast<size_t>(i)]);
            if (f != 0 || g != 0) {
                alive = true;
                break;
            }
        }
        if (!alive) return false;
    }
    return true;
}

// Deterministic element of the span nonvanishing on T: walk lambda over the
// moment-curve combinations until every point of T survives.
std::vector<Rational> pick_nonvanishing(const ParabolicBundle& E, int e,
                                        const std::vector<std::vector<Rational>>& basis,
                                        Mask T) {
    SectionLayout lay(E, e);
    const size_t dim = basis.size();
    for (long lambda = 1;; ++lambda) {
        std::vector<Rational> w(static_cast<size_t>(lay.dim()), Rational(0));
        Rational lp(1);
        for (size_t j = 0; j < dim; ++j) {
            for (size_t k = 0; k < w.size(); ++k) w[k] += lp * basis[j][k];
            lp *= lambda;
        }
        bool ok = true;
        for (int i = 0; i < E.n(); ++i) {
            if (!((T >> i) & 1u)) continue;
            auto [f, g] = eval_pair(lay, w, E.points[static_cast<size_t>(i)]);
            if (f == 0 && g == 0) {
                ok = false;
                break;
            }
        }
        bool nonzero = false;
        for (const auto& x : w)
            if (x != 0) nonzero = true;
        if (ok && nonzero) return w;
        if (lambda > 4 * static_cast<long>(dim) * (E.n() + 1) + 4)
            throw internal_error("no nonvanishing combination found");
    }
}

Mask exact_incidences(const ParabolicBundle& E, const UniPoly& f, const UniPoly& g) {
    Mask T = 0;
    for (int i = 0; i < E.n(); ++i) {
        const Rational& p = E.points[static_cast<size_t>(i)];
        const Direction& d = E.directions[static_cast<size_t>(i)];
        Rational fv = f.eval(p), gv = g.eval(p);
        if (fv == 0 && gv == 0) continue;
        if (d.y * fv - d.x * gv == 0) T |= Mask{1} << i;
    }
    return T;
}

// Removes common zeros (affine via gcd, infinity via the degree-deficiency
// rule) and returns the saturated witness with its exact incidence set.
LineSubbundleWitness saturate(const ParabolicBundle& E, int e, UniPoly f, UniPoly g) {
    if (f.is_zero() && g.is_zero()) throw internal_error("zero section pair");
    UniPoly h = poly_gcd(f, g);
    if (h.degree() > 0) {
        if (!f.is_zero()) f = UniPoly::divmod(f, h).first;
        if (!g.is_zero()) g = UniPoly::divmod(g, h).first;
        e += h.degree();
    }
    while (vanish_at_inf(f, E.d1 - e) && vanish_at_inf(g, E.d2 - e)) ++e;
    return {e, f, g, exact_incidences(E, f, g)};
}

Rational weight_sum(const WeightVector& A, Mask T) {
    Rational s(0);
    for (int i = 0; i < A.n(); ++i)
        if ((T >> i) & 1u) s += A.a(i);
    return s;
}

}  // namespace

void validate_witness(const LineSubbundleWitness& L, const ParabolicBundle& E) {
    const int D1 = E.d1 - L.e, D2 = E.d2 - L.e;
    if (L.f.is_zero() && L.g.is_zero())
        throw validation_error("witness section pair is zero");
    if ((!L.f.is_zero() && L.f.degree() > D1) || (!L.g.is_zero() && L.g.degree() > D2))
        throw validation_error("witness degrees exceed the splitting bounds");
    if (poly_gcd(L.f, L.g).degree() > 0)
        throw validation_error("witness pair has a common affine zero");
    if (vanish_at_inf(L.f, D1) && vanish_at_inf(L.g, D2))
        throw validation_error("witness pair has a common zero at infinity");
    for (int i = 0; i < E.n(); ++i) {
        if (!((L.incidences >> i) & 1u)) continue;
        const Rational& p = E.points[static_cast<size_t>(i)];
        const Direction& d = E.directions[static_cast<size_t>(i)];
        Rational fv = L.f.eval(p), gv = L.g.eval(p);
        if (fv == 0 && gv == 0)
            throw validation_error("witness vanishes at a claimed incidence point");
        if (d.y * fv - d.x * gv != 0)
            throw validation_error("witness misses a claimed incidence direction");
    }
}

Rational line_slope(const WeightVector& A, const LineSubbundleWitness& L,
                    const ParabolicBundle& E) {
    if (A.n() != E.n()) throw validation_error("dimension mismatch");
    validate_witness(L, E);
    return L.e + weight_sum(A, L.incidences);
}

std::pair<Rational, LineSubbundleWitness> max_line_slope(const ParabolicBundle& E,
                                                         const WeightVector& A) {
    if (A.n() != E.n()) throw validation_error("dimension mismatch");
    const int n = E.n();
    const Rational total = A.total();

    // indices by decreasing weight, for the branch-and-bound ordering
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A.a(a) > A.a(b); });
    std::vector<Rational> suffix(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = n - 1; k >= 0; --k)
        suffix[static_cast<size_t>(k)] =
            suffix[static_cast<size_t>(k) + 1] + A.a(order[static_cast<size_t>(k)]);

    bool have = false;
    Rational best(0);
    LineSubbundleWitness best_witness{0, UniPoly(), UniPoly(), 0};

    auto consider = [&](int e, Mask T, const std::vector<std::vector<Rational>>& basis) {
        Rational raw = e + weight_sum(A, T);
        if (have && raw <= best) return;
        auto w = pick_nonvanishing(E, e, basis, T);
        auto [f, g] = to_polys(SectionLayout(E, e), w);
        LineSubbundleWitness cand = saturate(E, e, std::move(f), std::move(g));
        Rational val = cand.e + weight_sum(A, cand.incidences);
        if (!have || val > best) {
            have = true;
            best = val;
            best_witness = std::move(cand);
        }
    };

    for (int e = E.d1;; --e) {
        if (have && Rational(e) + total <= best) break;
        auto root = section_basis(E, e, 0);
        if (root.empty()) continue;  // only possible above the actual range
        consider(e, 0, root);

        std::function<void(int, Mask, Rational, const std::vector<std::vector<Rational>>&)>
            dfs = [&](int k, Mask T, Rational wsum,
                      const std::vector<std::vector<Rational>>& basis) {
                if (k == n) return;
                if (have && Rational(e) + wsum + suffix[static_cast<size_t>(k)] <= best)
                    return;
                int i = order[static_cast<size_t>(k)];
                Mask T2 = T | (Mask{1} << i);
                auto b2 = section_basis(E, e, T2);
                if (feasible(E, e, b2, T2)) {
                    consider(e, T2, b2);
                    dfs(k + 1, T2, wsum + A.a(i), b2);
                }
                dfs(k + 1, T, wsum, basis);
            };
        dfs(0, 0, Rational(0), root);
    }
    return {best, best_witness};
}

Rational max_line_slope_exhaustive(const ParabolicBundle& E, const WeightVector& A,
                                   int e_floor) {
    if (A.n() != E.n()) throw validation_error("dimension mismatch");
    bool have = false;
    Rational best(0);
    for (int e = E.d1; e >= e_floor; --e) {
        for (Mask T = 0; T < (Mask{1} << E.n()); ++T) {
            auto basis = section_basis(E, e, T);
            if (!feasible(E, e, basis, T)) continue;
            Rational v = e + weight_sum(A, T);
            if (!have || v > best) {
                have = true;
                best = v;
            }
        }
    }
    if (!have) throw internal_error("no line subbundle found in the given range");
    return best;
}

StabilityReport stability_type(const ParabolicBundle& E, const WeightVector& A) {
    Rational mu = slope(A, E);
    auto [mx, wit] = max_line_slope(E, A);
    Verdict v = mx < mu   ? Verdict::stable
                : mx == mu ? Verdict::strictly_semistable
                           : Verdict::unstable;
    return {v, mu, mx, wit};
}

RawTransform elementary_transform_raw(const ParabolicBundle& E, Mask R) {
    if (R >> E.n()) throw validation_error("subset outside {1..n}");
    const int r = popcount(R);

    // e1 = maximal degree of a line subbundle of E'; any nonzero element of
    // the first nonempty section space is a subbundle inclusion.
    int e1 = E.d1;
    std::vector<std::vector<Rational>> b1;
    for (;; --e1) {
        b1 = section_basis(E, e1, R);
        if (!b1.empty()) break;
    }
    auto [f1, g1] = to_polys(SectionLayout(E, e1), b1[0]);
    const int e2 = E.d1 + E.d2 - r - e1;

    auto b2 = section_basis(E, e2, R);
    UniPoly f2, g2, det;
    bool found = false;
    for (const auto& w : b2) {
        auto [cf, cg] = to_polys(SectionLayout(E, e2), w);
        UniPoly d = f1 * cg - g1 * cf;
        if (!d.is_zero()) {
            f2 = cf;
            g2 = cg;
            det = d;
            found = true;
            break;
        }
    }
    if (!found) throw internal_error("no complementary generator for E'");

    // det must be a nonzero constant times prod_{i in R} (t - p_i)
    std::vector<Rational> roots;
    for (int i = 0; i < E.n(); ++i)
        if ((R >> i) & 1u) roots.push_back(E.points[static_cast<size_t>(i)]);
    auto [q, rem] = UniPoly::divmod(det, UniPoly::from_roots(roots));
    if (!rem.is_zero() || q.degree() != 0)
        throw internal_error("transition determinant is not c * prod (t - p_i)");

    std::vector<Direction> dirs;
    dirs.reserve(static_cast<size_t>(E.n()));
    for (int i = 0; i < E.n(); ++i) {
        const Rational& p = E.points[static_cast<size_t>(i)];
        Rational a11 = f1.eval(p), a12 = f2.eval(p);
        Rational a21 = g1.eval(p), a22 = g2.eval(p);
        if ((R >> i) & 1u) {
            // kernel of the rank-1 matrix M(p_i)
            if (a11 != 0 || a12 != 0) {
                if (a21 * a12 - a22 * a11 != 0)
                    throw internal_error("M(p_i) not rank one at a center");
                dirs.emplace_back(a12, -a11);
            } else if (a21 != 0 || a22 != 0) {
                dirs.emplace_back(a22, -a21);
            } else {
                throw internal_error("M(p_i) vanishes at a center");
            }
        } else {
            // preimage of V_i through the invertible M(p_i), via the adjugate
            const Direction& v = E.directions[static_cast<size_t>(i)];
            Rational x = a22 * v.x - a12 * v.y;
            Rational y = -a21 * v.x + a11 * v.y;
            dirs.emplace_back(std::move(x), std::move(y));
        }
    }

    RawTransform out;
    out.e1 = e1;
    out.e2 = e2;
    out.directions = std::move(dirs);
    out.transition = {{{f1, g1}, {f2, g2}}};
    out.r = r;
    return out;
}

TransformResult elementary_transform(const ParabolicBundle& E, const EvenSubset& R) {
    if (R.n != E.n()) throw validation_error("dimension mismatch");
    if (E.degree() != 0)
        throw validation_error("elementary transform requires a degree 0 bundle");
    RawTransform raw = elementary_transform_raw(E, R.mask);
    const int half = raw.r / 2;
    ParabolicBundle out(raw.e1 + half, raw.e2 + half, E.points, std::move(raw.directions));
    return {std::move(out), raw.transition, raw.r};
}

LineSubbundleWitness transform_line(const LineSubbundleWitness& L, const ParabolicBundle& E,
                                    const EvenSubset& R) {
    validate_witness(L, E);
    TransformResult tr = elementary_transform(E, R);
    const ParabolicBundle& Ep = tr.bundle;

    Mask D = R.mask & ~L.incidences;
    std::vector<Rational> droots;
    for (int i = 0; i < E.n(); ++i)
        if ((D >> i) & 1u) droots.push_back(E.points[static_cast<size_t>(i)]);
    UniPoly piD = UniPoly::from_roots(droots);

    const UniPoly& f1 = tr.transition[0][0];
    const UniPoly& g1 = tr.transition[0][1];
    const UniPoly& f2 = tr.transition[1][0];
    const UniPoly& g2 = tr.transition[1][1];
    UniPoly det = f1 * g2 - g1 * f2;

    UniPoly n1 = L.f * piD, n2 = L.g * piD;
    auto [F, remF] = UniPoly::divmod(g2 * n1 - f2 * n2, det);
    auto [G, remG] = UniPoly::divmod(g1 * n1 - f1 * n2, det);
    if (!remF.is_zero() || !remG.is_zero())
        throw internal_error("transformed line does not divide through E'");
    G = Rational(-1) * G;

    int e_new = L.e - popcount(D) + tr.r / 2;
    LineSubbundleWitness out = saturate(Ep, e_new, std::move(F), std::move(G));
    if (out.e != e_new) throw internal_error("transformed line degree mismatch");
    validate_witness(out, Ep);
    return out;
}

namespace {

bool solvable_automorphism(const RatMatrix& m, int nunk,
                           const std::function<bool(const std::vector<Rational>&)>& invertible) {
    auto basis = nullspace(m);
    if (basis.empty()) return false;
    const size_t dim = basis.size();
    // invertibility is a polynomial of degree <= 2 in each grid coordinate,
    // so scanning {0,1,2}^dim decides whether it vanishes identically
    std::vector<int> lam(dim, 0);
    for (;;) {
        std::vector<Rational> w(static_cast<size_t>(nunk), Rational(0));
        for (size_t j = 0; j < dim; ++j)
            if (lam[j] != 0)
                for (size_t k = 0; k < w.size(); ++k)
                    w[k] += Rational(lam[j]) * basis[j][k];
        if (invertible(w)) return true;
        size_t j = 0;
        while (j < dim && lam[j] == 2) lam[j++] = 0;
        if (j == dim) return false;
        ++lam[j];
    }
}

}  // namespace

bool is_isomorphic(const ParabolicBundle& E1, const ParabolicBundle& E2) {
    if (E1.n() != E2.n() || E1.points != E2.points)
        throw validation_error("isomorphism test requires the same parabolic points");
    if (E1.d1 != E2.d1 || E1.d2 != E2.d2) return false;
    const int n = E1.n();

    if (E1.d1 == E1.d2) {
        // constant automorphisms [w x; y z]
        RatMatrix m(static_cast<size_t>(n), 4);
        for (int i = 0; i < n; ++i) {
            const Direction& v = E1.directions[static_cast<size_t>(i)];
            const Direction& u = E2.directions[static_cast<size_t>(i)];
            m.at(static_cast<size_t>(i), 0) = u.y * v.x;
            m.at(static_cast<size_t>(i), 1) = u.y * v.y;
            m.at(static_cast<size_t>(i), 2) = -u.x * v.x;
            m.at(static_cast<size_t>(i), 3) = -u.x * v.y;
        }
        return solvable_automorphism(m, 4, [](const std::vector<Rational>& w) {
            return w[0] * w[3] - w[1] * w[2] != 0;
        });
    }

    // triangular automorphisms [a q(t); 0 b], deg q <= d1 - d2: the only
    // nonzero off-diagonal Hom is O(d2) -> O(d1). Image of (x, y) is
    // (a x + q(p) y, b y).
    const int nq = E1.d1 - E1.d2 + 1;
    const int nunk = 2 + nq;  // a, b, q coefficients
    RatMatrix m(static_cast<size_t>(n), static_cast<size_t>(nunk));
    for (int i = 0; i < n; ++i) {
        const Direction& v = E1.directions[static_cast<size_t>(i)];
        const Direction& u = E2.directions[static_cast<size_t>(i)];
        const Rational& p = E1.points[static_cast<size_t>(i)];
        m.at(static_cast<size_t>(i), 0) = u.y * v.x;
        m.at(static_cast<size_t>(i), 1) = -u.x * v.y;
        Rational pw(1);
        for (int j = 0; j < nq; ++j) {
            m.at(static_cast<size_t>(i), static_cast<size_t>(2 + j)) = u.y * v.y * pw;
            pw *= p;
        }
    }
    return solvable_automorphism(m, nunk, [](const std::vector<Rational>& w) {
        return w[0] != 0 && w[1] != 0;
    });
}

}  // namespace parvb
