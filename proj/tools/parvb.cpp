#include <parvb/json_io.hpp>
#include <parvb/verify.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace parvb;
using nlohmann::json;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

Mask parse_subset(const std::string& s, int n) {
    Mask m = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int i = 0;
        try {
            i = std::stoi(tok, &pos);
        } catch (...) {
            throw validation_error("bad subset entry: " + tok);
        }
        if (pos != tok.size() || i < 1 || i > n)
            throw validation_error("subset indices must be in 1.." + std::to_string(n));
        m |= Mask{1} << (i - 1);
    }
    return m;
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void warn_if_special(const ParabolicBundle& E) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& d : E.directions) seen.insert({rat_str(d.x), rat_str(d.y)});
    if (seen.size() < E.directions.size())
        std::cerr << "warning: repeated parabolic directions; configuration is not general\n";
}

Mask rnd_even_mask(std::mt19937_64& g, int n) {
    for (;;) {
        Mask m = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        if (popcount(m) % 2 == 0) return m;
    }
}

int cmd_polytope(const std::string& weights) {
    WeightVector A = weight_from_json(load_json_file(weights));
    json hv = json::array();
    for (const Wall& w : wall_list(A.n())) {
        json idx = json::array();
        for (int i = 0; i < A.n(); ++i)
            if ((w.I >> i) & 1u) idx.push_back(i + 1);
        hv.push_back(json{{"I", idx}, {"k", w.k}, {"h", rat_str(h_value(w.I, A))}});
    }
    emit(json{{"n", A.n()},
              {"in_delta", is_in_delta(A)},
              {"in_pi", is_in_pi(A, false)},
              {"in_pi_strict", is_in_pi(A, true)},
              {"h_values", hv}});
    return 0;
}

int cmd_chamber(const std::string& weights) {
    WeightVector A = weight_from_json(load_json_file(weights));
    emit(signature_to_json(signature(A)));
    return 0;
}

int cmd_admissible(const std::string& weights) {
    WeightVector A = weight_from_json(load_json_file(weights));
    AdmissibleGroup g = admissible_group(A);
    emit(group_to_json(g, is_in_pi(A, true)));
    return 0;
}

int cmd_stability(const std::string& bundle, const std::string& weights) {
    ParabolicBundle E = bundle_from_json(load_json_file(bundle));
    WeightVector A = weight_from_json(load_json_file(weights));
    warn_if_special(E);
    emit(stability_to_json(stability_type(E, A), E.n()));
    return 0;
}

int cmd_transform(const std::string& bundle, const std::string& subset) {
    ParabolicBundle E = bundle_from_json(load_json_file(bundle));
    warn_if_special(E);
    EvenSubset R(E.n(), parse_subset(subset, E.n()));
    emit(transform_to_json(elementary_transform(E, R)));
    return 0;
}

int cmd_survey(int n, int samples, std::uint64_t seed, const std::string& format) {
    SurveyReport rep = survey(n, samples, seed);
    if (format == "csv") {
        std::cout << "rank,count\n";
        for (const auto& [k, c] : rep.histogram) std::cout << k << "," << c << "\n";
    } else {
        emit(survey_to_json(rep));
    }
    return 0;
}

int cmd_propcheck(int n, int trials, std::uint64_t seed) {
    long failures = 0;
    json fail_list = json::array();
    auto fail = [&](const char* prop, std::uint64_t sub) {
        ++failures;
        fail_list.push_back(json{{"property", prop}, {"sub_seed", sub}});
    };

    for (int t = 0; t < trials; ++t) {
        std::uint64_t sub = sub_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 g(sub);

        WeightVector A = sample_delta_offwall(n, g());
        EvenSubset R(n, rnd_even_mask(g, n));
        Mask I = static_cast<Mask>(g()) & ((Mask{1} << n) - 1);
        if (flip(flip(A, R), R) != A) fail("flip_involution", sub);
        if (h_value(I, flip(A, R)) != h_value(I ^ R.mask, A)) fail("wall_flip_identity", sub);

        ParabolicBundle E = sample_bundle(n, g());
        EvenSubset S(n, rnd_even_mask(g, n));
        RawTransform raw = elementary_transform_raw(E, R.mask);
        if (raw.e1 + raw.e2 != E.degree() - raw.r) fail("determinant_law", sub);

        ParabolicBundle once = elementary_transform(E, R).bundle;
        if (!is_isomorphic(elementary_transform(once, R).bundle, E)) fail("involution", sub);
        if (!is_isomorphic(elementary_transform(once, S).bundle,
                           elementary_transform(E, compose(R, S)).bundle))
            fail("composition_law", sub);

        auto [mx, L] = max_line_slope(E, A);
        TransformResult tr = elementary_transform(E, R);
        WeightVector AR = flip(A, R);
        LineSubbundleWitness Lp = transform_line(L, E, R);
        if (line_slope(AR, Lp, tr.bundle) - slope(AR, tr.bundle) !=
            line_slope(A, L, E) - slope(A, E))
            fail("slope_gap_identity", sub);
    }

    emit(json{{"n", n},
              {"trials", trials},
              {"seed", seed},
              {"failures", failures},
              {"failed_trials", fail_list}});
    return failures == 0 ? 0 : 1;
}

int cmd_verify(const std::string& nlist) {
    auto results = run_acceptance(nlist.empty() ? std::vector<int>{} : parse_n_list(nlist));
    json arr = json::array();
    bool all = true;
    for (const auto& r : results) {
        arr.push_back(json{{"id", r.id},
                           {"name", r.name},
                           {"pass", r.pass},
                           {"ms", r.ms},
                           {"detail", r.detail}});
        if (!r.pass) all = false;
    }
    emit(json{{"criteria", arr}, {"all_pass", all}});
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact wall-and-chamber, admissible-group and parabolic stability tool"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    std::string format = "json";
    app.add_option("--seed", seed, "PRNG seed")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string weights, bundle, subset, nlist;
    int n = 6, samples = 500, trials = 100;

    auto* polytope = app.add_subcommand("polytope", "membership and H-values of a weight");
    polytope->add_option("--weights", weights, "weight JSON file")->required();

    auto* chamber = app.add_subcommand("chamber", "wall signature of a weight");
    chamber->add_option("--weights", weights, "weight JSON file")->required();

    auto* admissible = app.add_subcommand("admissible", "admissible subgroup El_A");
    admissible->add_option("--weights", weights, "weight JSON file")->required();

    auto* stability = app.add_subcommand("stability", "slope stability of a bundle");
    stability->add_option("--bundle", bundle, "bundle JSON file")->required();
    stability->add_option("--weights", weights, "weight JSON file")->required();

    auto* transform = app.add_subcommand("transform", "elementary transformation el_R");
    transform->add_option("--bundle", bundle, "bundle JSON file")->required();
    transform->add_option("--subset", subset, "comma list of 1-based point indices")
        ->required();

    auto* survey_cmd = app.add_subcommand("survey", "admissible-rank histogram over Pi");
    survey_cmd->add_option("--n", n, "number of points")->capture_default_str();
    survey_cmd->add_option("--samples", samples, "sample count")->capture_default_str();

    auto* propcheck = app.add_subcommand("propcheck", "randomized invariant checks");
    propcheck->add_option("--n", n, "number of points")->capture_default_str();
    propcheck->add_option("--trials", trials, "trial count")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--n", nlist, "comma list of point counts (default 5..10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (format == "csv" && !survey_cmd->parsed())
            throw validation_error("csv output is only available for survey");
        if (polytope->parsed()) return cmd_polytope(weights);
        if (chamber->parsed()) return cmd_chamber(weights);
        if (admissible->parsed()) return cmd_admissible(weights);
        if (stability->parsed()) return cmd_stability(bundle, weights);
        if (transform->parsed()) return cmd_transform(bundle, subset);
        if (survey_cmd->parsed()) return cmd_survey(n, samples, seed, format);
        if (propcheck->parsed()) return cmd_propcheck(n, trials, seed);
        if (verify->parsed()) return cmd_verify(nlist);
    } catch (const validation_error& e) {
        emit(json{{"error", e.what()}, {"kind", "validation"}});
        return 2;
    } catch (const std::exception& e) {
        emit(json{{"error", e.what()}, {"kind", "internal"}});
        return 1;
    }
    return 2;
}
