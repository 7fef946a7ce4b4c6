#include <parvb/json_io.hpp>

#include <fstream>

namespace parvb {

using nlohmann::json;

namespace {

json indices_of(Mask m, int n) {
    json out = json::array();
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) out.push_back(i + 1);
    return out;
}

json poly_to_json(const UniPoly& p) {
    json out = json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(rat_str(p.coeff(i)));
    return out;
}

Rational rat_field(const json& j) {
    if (!j.is_string()) throw validation_error("rational values must be \"p/q\" strings");
    return parse_rational(j.get<std::string>());
}

}  // namespace

json weight_to_json(const WeightVector& A) {
    json w = json::array();
    for (int i = 0; i < A.n(); ++i) w.push_back(rat_str(A.a(i)));
    return json{{"n", A.n()}, {"weights", w}};
}

WeightVector weight_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        const json& w = j.at("weights");
        if (!w.is_array() || static_cast<int>(w.size()) != n)
            throw validation_error("weights must be an array of length n");
        std::vector<Rational> a;
        a.reserve(w.size());
        for (const auto& x : w) a.push_back(rat_field(x));
        return WeightVector(n, std::move(a));
    } catch (const json::exception& e) {
        throw validation_error(std::string("bad weight JSON: ") + e.what());
    }
}

json signature_to_json(const WallSignature& s) {
    const auto walls = wall_list(s.n);
    json out = json::array();
    for (size_t w = 0; w < walls.size(); ++w)
        out.push_back(json{{"I", indices_of(walls[w].I, s.n)},
                           {"k", walls[w].k},
                           {"sign", s.signs[w]}});
    return out;
}

json group_to_json(const AdmissibleGroup& g, bool corollary_applies) {
    json gens = json::array();
    for (const auto& r : g.generators) gens.push_back(indices_of(r.mask, g.n));
    json out{{"rank", g.rank},
             {"order", std::uint64_t{1} << g.rank},
             {"generators", gens},
             {"corollary_applies", corollary_applies}};
    bool truncated = g.elements.size() > 1024;
    out["elements_truncated"] = truncated;
    if (!truncated) {
        json els = json::array();
        for (const auto& r : g.elements) els.push_back(indices_of(r.mask, g.n));
        out["elements"] = els;
    }
    return out;
}

json bundle_to_json(const ParabolicBundle& E) {
    json pts = json::array();
    for (const auto& p : E.points) pts.push_back(rat_str(p));
    json dirs = json::array();
    for (const auto& d : E.directions)
        dirs.push_back(json::array({rat_str(d.x), rat_str(d.y)}));
    return json{{"splitting", json::array({E.d1, E.d2})}, {"points", pts},
                {"directions", dirs}};
}

ParabolicBundle bundle_from_json(const json& j) {
    try {
        const json& s = j.at("splitting");
        if (!s.is_array() || s.size() != 2)
            throw validation_error("splitting must be [d1, d2]");
        std::vector<Rational> pts;
        for (const auto& p : j.at("points")) pts.push_back(rat_field(p));
        std::vector<Direction> dirs;
        for (const auto& d : j.at("directions")) {
            if (!d.is_array() || d.size() != 2)
                throw validation_error("each direction must be a pair");
            dirs.emplace_back(rat_field(d[0]), rat_field(d[1]));
        }
        return ParabolicBundle(s[0].get<int>(), s[1].get<int>(), std::move(pts),
                               std::move(dirs));
    } catch (const json::exception& e) {
        throw validation_error(std::string("bad bundle JSON: ") + e.what());
    }
}

json witness_to_json(const LineSubbundleWitness& L, int n) {
    return json{{"e", L.e},
                {"f", poly_to_json(L.f)},
                {"g", poly_to_json(L.g)},
                {"incidences", indices_of(L.incidences, n)}};
}

json stability_to_json(const StabilityReport& rep, int n) {
    const char* v = rep.verdict == Verdict::stable             ? "stable"
                    : rep.verdict == Verdict::strictly_semistable ? "strictly_semistable"
                                                                  : "unstable";
    return json{{"verdict", v},
                {"mu", rat_str(rep.bundle_slope)},
                {"max_line_slope", rat_str(rep.max_line_slope)},
                {"witness", witness_to_json(rep.witness, n)}};
}

json transform_to_json(const TransformResult& t) {
    json cols = json::array();
    for (const auto& col : t.transition)
        cols.push_back(json::array({poly_to_json(col[0]), poly_to_json(col[1])}));
    return json{{"bundle", bundle_to_json(t.bundle)}, {"transition", cols}, {"r", t.r}};
}

json survey_to_json(const SurveyReport& rep) {
    json hist = json::object();
    json reps = json::object();
    for (const auto& [k, c] : rep.histogram) hist[std::to_string(k)] = c;
    for (const auto& [k, A] : rep.representatives)
        reps[std::to_string(k)] = weight_to_json(A);
    return json{{"n", rep.n},
                {"samples", rep.samples},
                {"seed", rep.seed},
                {"histogram", hist},
                {"representatives", reps}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw validation_error("malformed JSON in " + path + ": " + e.what());
    }
}

}  // namespace parvb
