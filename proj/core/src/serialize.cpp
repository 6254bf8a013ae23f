#include "nmds/serialize.hpp"

#include "nmds/error.hpp"

namespace nmds {

Json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
    return Json(v.str());
}

BigInt big_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw InvalidInput("expected an integer count");
}

Json to_json(const WeightDistribution& d) {
    Json out = Json::array();
    for (const auto& [w, c] : d.nonzero_terms()) out.push_back(Json::array({w, big_to_json(c)}));
    return out;
}

WeightDistribution weight_distribution_from_json(const Json& j, std::size_t n) {
    WeightDistribution d(n);
    for (const auto& term : j) {
        const auto w = term.at(0).get<std::size_t>();
        if (w > n) throw InvalidInput("weight exceeds the code length");
        d[w] = big_from_json(term.at(1));
    }
    return d;
}

Json to_json(const CodeProfile& p) {
    return Json{{"n", p.n},
                {"k", p.k},
                {"d", p.d},
                {"d_dual", p.d_dual ? Json(*p.d_dual) : Json(nullptr)},
                {"defect", p.defect},
                {"defect_dual", p.defect_dual ? Json(*p.defect_dual) : Json(nullptr)},
                {"class", std::string(to_string(p.code_class))}};
}

CodeProfile code_profile_from_json(const Json& j) {
    CodeProfile p;
    p.n = j.at("n").get<std::size_t>();
    p.k = j.at("k").get<std::size_t>();
    p.d = j.at("d").get<std::size_t>();
    if (!j.at("d_dual").is_null()) p.d_dual = j.at("d_dual").get<std::size_t>();
    p.defect = j.at("defect").get<long long>();
    if (!j.at("defect_dual").is_null()) p.defect_dual = j.at("defect_dual").get<long long>();
    const auto cls = j.at("class").get<std::string>();
    for (const auto c : {CodeClass::mds, CodeClass::amds, CodeClass::nmds, CodeClass::other}) {
        if (to_string(c) == cls) p.code_class = c;
    }
    return p;
}

Json to_json(const LrcAssessment& a) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
    Json supports = Json::array();
    for (const auto& t : a.locality.supports) supports.push_back(Json::array({t[0] + 1, t[1] + 1, t[2] + 1}));
    return Json{{"n", a.profile.n},
                {"k", a.profile.k},
                {"d", a.profile.d},
                {"r_primal", opt(a.locality.r_primal)},
                {"r_dual", opt(a.locality.r_dual)},
                {"d_optimal", a.primal && a.primal->d_optimal},
                {"k_optimal", a.primal && a.primal->k_optimal},
                {"dual_d_optimal", a.dual && a.dual->d_optimal},
                {"dual_k_optimal", a.dual && a.dual->k_optimal},
                {"supports", supports}};
}

Json to_json(const SearchResult& r, const Field& field, Notation notation) {
    Json arc = Json::array();
    for (const Point& p : r.arc) arc.push_back(format_triple(field, p.coords, notation));
    return Json{{"found_n", r.found_n()},
                {"nodes", r.nodes},
                {"restarts", r.restarts},
                {"seed", r.seed},
                {"elapsed_ms", r.elapsed_ms},
                {"budget_exhausted", r.budget_exhausted},
                {"complete", r.complete},
                {"arc", arc}};
}

SearchResult search_result_from_json(const Json& j, const Field& field) {
    SearchResult r;
    r.nodes = j.at("nodes").get<std::uint64_t>();
    r.restarts = j.at("restarts").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    r.budget_exhausted = j.value("budget_exhausted", false);
    r.complete = j.value("complete", false);
    for (const auto& p : j.at("arc")) r.arc.push_back(make_point(field, parse_triple(field, p.get<std::string>())));
    if (r.found_n() != j.at("found_n").get<std::size_t>()) throw InvalidInput("found_n disagrees with the arc");
    return r;
}

Json to_json(const Census& c) {
    Json by_roots = Json::object();
    for (const auto& [roots, pairs] : c.pairs_by_roots) by_roots[std::to_string(roots)] = pairs;
    return Json{{"kind", std::string(to_string(c.kind))},
                {"q", c.q},
                {"pairs_by_roots", by_roots},
                {"two_root_pairs", c.two_root_pairs},
                {"expected_two_root_pairs", c.expected_two_root_pairs},
                {"diagonal_ok", c.diagonal_ok},
                {"sizes_ok", c.sizes_ok},
                {"pass", c.pass()}};
}

}  // namespace nmds
