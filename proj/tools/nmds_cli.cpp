// nmds: command-line front end for the NMDS code toolkit.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nmds/arcsearch.hpp"
#include "nmds/construct.hpp"
#include "nmds/error.hpp"
#include "nmds/lrc.hpp"
#include "nmds/serialize.hpp"

using namespace nmds;

namespace {

enum ExitCode : int { ok = 0, invalid_input = 2, mismatch = 3, budget_exhausted = 4 };

struct Common {
    bool powers = false;
    bool json = false;
    unsigned threads = 1;
};

struct FieldArgs {
    std::uint32_t q = 0;
    std::string descriptor;

    void add_to(CLI::App* app) {
        app->add_option("--q", q, "Field order (default modulus)");
        app->add_option("--field", descriptor, "Field descriptor, e.g. \"p=2 m=3 mod=1,1,0,1\"");
    }
    [[nodiscard]] FieldPtr make() const {
        if (!descriptor.empty()) {
            auto f = Field::parse_descriptor(descriptor);
            if (q != 0 && f->order() != q) throw InvalidInput("--q disagrees with --field");
            return f;
        }
        if (q == 0) throw InvalidInput("a field is required: pass --q or --field");
        return Field::of_order(q);
    }
};

Notation notation(const Common& c) { return c.powers ? Notation::power : Notation::index; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
    return out;
}

std::string tail_string(const WeightDistribution& d) {
    std::vector<std::string> parts;
    for (const auto& [w, c] : d.nonzero_terms()) {
        if (w != 0) parts.push_back("A_" + std::to_string(w) + "=" + c.str());
    }
    return join(parts, " ");
}

std::string profile_line(const CodeProfile& p) {
    std::ostringstream s;
    s << "[" << p.n << "," << p.k << "," << p.d << "] " << to_string(p.code_class) << " (d_dual="
      << (p.d_dual ? std::to_string(*p.d_dual) : std::string(">4")) << ", defect=" << p.defect
      << ", dual defect=" << (p.defect_dual ? std::to_string(*p.defect_dual) : std::string("?")) << ")";
    return s.str();
}

std::string verdict_word(bool pass) { return pass ? "PASS" : "FAIL"; }

// Recovery sets have size >= d_dual - 1, so the upper bound is tight when d_dual = 3.
std::optional<std::string> locality_remark(const LrcAssessment& a) {
    if (a.locality.r_primal != std::optional<std::size_t>{2} || a.profile.d_dual != std::optional<std::size_t>{3})
        return std::nullopt;
    return "locality <= 2 established; >= 2 since d_dual = 3 forces recovery sets of size >= 2";
}

// ---------------------------------------------------------------- field-info

int run_field_info(const Common& c, const FieldArgs& fa, bool list) {
    const auto F = fa.make();
    Json j{{"q", F->order()},
           {"p", F->characteristic()},
           {"m", F->degree()},
           {"descriptor", F->descriptor()},
           {"primitive_element", F->format(F->primitive_element())}};
    if (F->is_odd()) j["eta_minus_one"] = F->quadratic_character(F->neg(F->one()));
    if (list) {
        Json elems = Json::array();
        for (const Elem e : F->elements(ElementOrder::standard)) elems.push_back(F->format(e, notation(c)));
        j["standard_order"] = elems;
    }
    if (c.json) {
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "GF(" << F->order() << "): " << F->descriptor() << "\n"
              << "primitive element: " << F->format(F->primitive_element()) << "\n";
    if (F->is_odd()) std::cout << "eta(-1) = " << F->quadratic_character(F->neg(F->one())) << "\n";
    if (list) {
        std::vector<std::string> names;
        for (const auto& e : j["standard_order"]) names.push_back(e.get<std::string>());
        std::cout << "standard order: " << join(names, " ") << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- opoly-check

int run_opoly_check(const Common& c, const FieldArgs& fa, const std::string& desc) {
    const auto F = fa.make();
    const auto f = parse_opoly(F, desc);
    const auto o = is_o_polynomial(f);
    const bool linear_ok = f(F->zero()).is_zero() && is_two_to_one_with_linear(f).pass;
    if (c.json) {
        Json coeffs = Json::array();
        for (const Elem e : f.coefficients()) coeffs.push_back(F->format(e, notation(c)));
        std::cout << Json{{"opoly", f.descriptor()},
                          {"degree", f.degree()},
                          {"coeffs", coeffs},
                          {"o_polynomial", o.pass},
                          {"failed_condition", o.failed_condition},
                          {"witness", o.witness ? Json(F->format(*o.witness, notation(c))) : Json(nullptr)},
                          {"two_to_one", linear_ok}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << f.descriptor() << " over GF(" << F->order() << "), degree " << f.degree() << "\n"
                  << "o-polynomial: " << verdict_word(o.pass) << (o.pass ? "" : " (" + o.detail + ")") << "\n"
                  << "f(x)+ux 2-to-1: " << verdict_word(linear_ok) << "\n";
    }
    return o.pass ? ok : mismatch;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    bool even = false;
    bool odd = false;
    std::string opoly = "translation:h=1";
    std::string v;
    std::string w;
    std::string order = "standard";
    std::string output;
};

ElementOrder parse_order(const std::string& s) {
    if (s == "standard") return ElementOrder::standard;
    if (s == "canonical") return ElementOrder::canonical;
    if (s == "powers") return ElementOrder::powers;
    if (s == "descending") return ElementOrder::descending;
    throw InvalidInput("unknown element order '" + s + "'");
}

int run_construct(const Common& c, const FieldArgs& fa, const ConstructArgs& a) {
    const auto F = fa.make();
    if (a.even == a.odd) throw InvalidInput("pass exactly one of --even or --odd");
    if (a.even == F->is_odd()) throw InvalidInput(a.even ? "--even needs q = 2^m" : "--odd needs odd q");
    const auto order = parse_order(a.order);

    std::optional<GeneratorMatrix> g;
    WeightDistribution closed;
    Json params;
    if (a.even) {
        const auto f = parse_opoly(F, a.opoly);
        const auto vs = valid_v_set(f);
        const Elem v = a.v.empty() ? vs.front() : F->parse_element(a.v);
        g = build_gv(f, v, order);
        closed = closed_form_enumerator_even(F->order());
        params = {{"opoly", f.descriptor()}, {"v", F->format(v, notation(c))}};
    } else {
        const auto ws = valid_w_set(*F);
        if (ws.empty()) throw InvalidInput("no admissible w exists over GF(" + std::to_string(F->order()) + ")");
        const Elem w = a.w.empty() ? ws.front() : F->parse_element(a.w);
        g = build_gw(F, w, order);
        closed = closed_form_enumerator_odd(F->order());
        params = {{"w", F->format(w, notation(c))}};
    }
    const auto dist = weight_distribution(*g, {.threads = c.threads});
    const auto profile = classify(*g, dist);
    const bool match = dist == closed;
    const bool nmds = profile.code_class == CodeClass::nmds;
    if (!a.output.empty()) write_file(a.output, format_matrix(*g, notation(c)));

    if (c.json) {
        Json rows = Json::array();
        for (const auto& r : g->rows()) {
            Json row = Json::array();
            for (const Elem e : r) row.push_back(F->format(e, notation(c)));
            rows.push_back(row);
        }
        std::cout << Json{{"field", F->descriptor()},
                          {"parameters", params},
                          {"matrix", rows},
                          {"profile", to_json(profile)},
                          {"weight_distribution", to_json(dist)},
                          {"closed_form", to_json(closed)},
                          {"match", match}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << format_matrix(*g, notation(c)) << "profile: " << profile_line(profile) << "\n"
                  << "brute force: " << tail_string(dist) << "\n"
                  << "closed form: " << tail_string(closed) << "\n"
                  << "enumerators " << (match ? "match" : "DIFFER") << "\n";
    }
    return nmds && match ? ok : mismatch;
}

// ---------------------------------------------------------------- analyze / locality

Json analysis_json(const GeneratorMatrix& g, const Common& c) {
    const auto dist = weight_distribution(g, {.threads = c.threads});
    const auto profile = classify(g, dist);
    Json j{{"field", g.field().descriptor()},
           {"profile", to_json(profile)},
           {"weight_distribution", to_json(dist)}};
    if (g.k() == 3) {
        const auto a = assess_lrc(g, profile);
        j["locality"] = to_json(a);
        if (a.primal) {
            j["bounds"]["primal"] = {{"singleton_like_rhs", a.primal->singleton_like_rhs},
                                     {"cm_rhs", a.primal->cm_rhs},
                                     {"label", "Singleton-relaxed CM bound"}};
        }
        if (a.dual) {
            j["bounds"]["dual"] = {{"singleton_like_rhs", a.dual->singleton_like_rhs},
                                   {"cm_rhs", a.dual->cm_rhs},
                                   {"label", "Singleton-relaxed CM bound"}};
        }
        if (!a.locality.cover_ok || !a.locality.disjoint_ok) j["locality_note"] = "criterion inconclusive";
        if (const auto remark = locality_remark(a)) j["locality_remark"] = *remark;
    }
    if (profile.code_class == CodeClass::nmds) {
        const auto closed = nmds_closed_form(g.n(), g.k(), g.field().order(), dist[g.n() - g.k()]);
        j["closed_form_match"] = closed.code == dist;
        j["dual_weight_distribution"] = to_json(closed.dual);
    }
    return j;
}

int run_analyze(const Common& c, const std::string& path) {
    const auto g = parse_matrix(read_file(path));
    const auto j = analysis_json(g, c);
    if (c.json) {
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::cout << "profile: " << profile_line(code_profile_from_json(j["profile"])) << "\n"
              << "weights: " << tail_string(weight_distribution_from_json(j["weight_distribution"], g.n())) << "\n";
    if (j.contains("locality")) {
        const auto& l = j["locality"];
        std::cout << "locality: r=" << (l["r_primal"].is_null() ? "inconclusive" : l["r_primal"].dump())
                  << ", dual r=" << (l["r_dual"].is_null() ? "inconclusive" : l["r_dual"].dump()) << "\n"
                  << "d-optimal=" << l["d_optimal"] << " k-optimal=" << l["k_optimal"]
                  << " dual d-optimal=" << l["dual_d_optimal"] << " dual k-optimal=" << l["dual_k_optimal"] << "\n";
        if (j.contains("locality_remark")) std::cout << j["locality_remark"].get<std::string>() << "\n";
    }
    if (j.contains("closed_form_match")) {
        std::cout << "NMDS closed form " << (j["closed_form_match"].get<bool>() ? "matches" : "DIFFERS") << "\n";
    }
    return ok;
}

int run_locality(const Common& c, const std::string& path) {
    const auto g = parse_matrix(read_file(path));
    const auto a = assess_lrc(g, classify(g, {.threads = c.threads}));
    auto j = to_json(a);
    const auto remark = locality_remark(a);
    if (remark) j["remark"] = *remark;
    if (c.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "B_3 supports (1-based): " << a.locality.supports.size() << "\n"
                  << "cover: " << verdict_word(a.locality.cover_ok)
                  << ", empty intersection: " << verdict_word(a.locality.disjoint_ok) << "\n"
                  << "r = " << (j["r_primal"].is_null() ? "criterion inconclusive" : j["r_primal"].dump())
                  << ", dual r = " << (j["r_dual"].is_null() ? "criterion inconclusive" : j["r_dual"].dump()) << "\n";
        if (remark) std::cout << *remark << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- bounds

int run_bounds(const Common& c, long long n, long long k, long long d, long long r, std::uint64_t q) {
    const auto s = singleton_like_check(n, k, d, r);
    const auto m = cm_bound_check(n, k, d, r, q);
    if (c.json) {
        std::cout << Json{{"singleton_like_rhs", s.rhs},
                          {"d_optimal", s.optimal},
                          {"cm_rhs", m.rhs},
                          {"k_optimal", m.optimal},
                          {"label", "Singleton-relaxed CM bound"}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "Singleton-like: d <= " << s.rhs << (s.optimal ? " (d-optimal)" : "") << "\n"
                  << "Singleton-relaxed CM: k <= " << m.rhs << (m.optimal ? " (k-optimal)" : "") << "\n";
    }
    return ok;
}

// ---------------------------------------------------------------- census

int run_census(const Common& c, const FieldArgs& fa, const std::string& kind_text, const std::string& opoly,
               const std::string& param) {
    const auto F = fa.make();
    const auto kind = parse_census_kind(kind_text);
    const bool even = kind == CensusKind::even_a1 || kind == CensusKind::even_a2;
    std::optional<OPolynomial> f;
    Elem p;
    if (even) {
        f = parse_opoly(F, opoly);
        p = param.empty() ? valid_v_set(*f).front() : F->parse_element(param);
    } else {
        const auto ws = valid_w_set(*F);
        if (ws.empty() && param.empty()) throw InvalidInput("no admissible w exists over this field");
        p = param.empty() ? ws.front() : F->parse_element(param);
    }
    const auto census = solution_count_census(kind, F, f ? &*f : nullptr, p);
    if (c.json) {
        auto j = to_json(census);
        j["parameter"] = F->format(p, notation(c));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << to_string(kind) << " over GF(" << F->order() << "), parameter " << F->format(p, notation(c))
                  << "\n";
        for (const auto& [roots, pairs] : census.pairs_by_roots)
            std::cout << "  " << roots << " roots: " << pairs << " pairs\n";
        std::cout << "two-solution pairs: " << census.two_root_pairs << " (expected "
                  << census.expected_two_root_pairs << ") " << verdict_word(census.pass()) << "\n";
    }
    return census.pass() ? ok : mismatch;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::string base = "hyperoval:translation:h=1";
    std::string strategy = "dfs";
    std::uint64_t max_nodes = 0;
    std::uint64_t max_restarts = 1000;
    double max_seconds = 60;
    std::size_t target = 0;
    std::uint64_t seed = 1;
    std::string export_path;
};

PointSet parse_base(const FieldPtr& F, const std::string& base) {
    if (base.rfind("hyperoval:", 0) == 0) return hyperoval_from_opoly(parse_opoly(F, base.substr(10)));
    if (base == "hyperoval") return hyperoval_from_opoly(make_family_opoly(F, OFamily::translation));
    if (base == "oval") return standard_oval(*F);
    if (base == "empty") return {};
    if (base.rfind("matrix:", 0) == 0) {
        const auto g = parse_matrix(read_file(base.substr(7)));
        if (!(g.field() == *F)) throw InvalidInput("base matrix is over a different field");
        return g.column_points();
    }
    if (base.rfind("points:", 0) == 0) {
        PointSet out;
        std::istringstream in(base.substr(7));
        for (std::string tok; std::getline(in, tok, ',');) out.push_back(make_point(*F, parse_triple(*F, tok)));
        return out;
    }
    throw InvalidInput("unknown base '" + base + "' (hyperoval[:<opoly>], oval, empty, matrix:<file>, points:<x:y:z,...>)");
}

int run_search(const Common& c, const FieldArgs& fa, const SearchArgs& a) {
    const auto F = fa.make();
    const Plane plane(F);
    const auto base = parse_base(F, a.base);
    SearchConfig config;
    config.strategy = parse_strategy(a.strategy);
    config.seed = a.seed;
    config.budget.max_nodes = a.max_nodes;
    config.budget.max_restarts = a.max_restarts;
    config.budget.max_seconds = a.max_seconds;
    config.budget.threads = c.threads;
    if (a.target) config.budget.target = a.target;
    const auto r = extend_to_n3_arc(plane, base, config);
    if (!a.export_path.empty() && r.found_n() >= 3) {
        write_file(a.export_path, format_matrix(GeneratorMatrix::from_columns(F, r.arc), notation(c)));
    }
    const bool reached = !config.budget.target || r.found_n() >= *config.budget.target;
    if (c.json) {
        std::cout << to_json(r, *F, notation(c)).dump(2) << "\n";
    } else {
        std::vector<std::string> pts;
        for (const Point& p : r.arc) pts.push_back(format_triple(*F, p.coords, notation(c)));
        std::cout << "found (" << r.found_n() << ",3)-arc from a base of " << base.size() << " points\n"
                  << "nodes=" << r.nodes << " restarts=" << r.restarts << " seed=" << r.seed
                  << " elapsed_ms=" << r.elapsed_ms << (r.complete ? " (search complete)" : "")
                  << (r.budget_exhausted ? " (budget exhausted)" : "") << "\n"
                  << join(pts, " ") << "\n";
    }
    return r.budget_exhausted && (!reached || !config.budget.target) ? budget_exhausted : ok;
}

// ---------------------------------------------------------------- verify-paper

int run_verify_paper(const Common& c) {
    Json checks = Json::array();
    bool all = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        all = all && pass;
        checks.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
        if (!c.json) std::cout << verdict_word(pass) << "  " << name << ": " << detail << "\n";
    };
    auto tail_of = [](const WeightDistribution& d, std::size_t from) {
        std::vector<std::string> out;
        for (std::size_t w = from; w <= d.length(); ++w) out.push_back(d[w].str());
        return "(" + join(out, ",") + ")";
    };

    {
        const auto F = Field::make(2, 2);
        const auto g = build_gv(make_family_opoly(F, OFamily::translation, {.h = 1}), F->primitive_element());
        const auto d = weight_distribution(g);
        const auto p = classify(g, d);
        const bool pass = d == closed_form_enumerator_even(4) && tail_of(d, 6) == "(30,18,9,6)" &&
                          p.code_class == CodeClass::nmds && p.d == 6;
        record("GF(4) x^2, v=g", pass, profile_line(p) + " " + tail_of(d, 6));
    }
    {
        const auto F = Field::make(3, 2);
        const auto g = build_gw(F, F->exp(5));
        const auto d = weight_distribution(g);
        const auto p = classify(g, d);
        const bool pass = tail_of(d, 11) == "(160,248,144,176)" && p.code_class == CodeClass::nmds && p.d == 11;
        record("GF(9) w=g^5", pass, profile_line(p) + " " + tail_of(d, 11));
    }
    {
        const auto F = Field::of_order(11);
        const auto g = build_gw(F, Elem{7});
        const auto d = weight_distribution(g);
        const auto p = classify(g, d);
        const bool pass = tail_of(d, 13) == "(230,510,210,380)" && p.code_class == CodeClass::nmds && p.d == 13;
        record("GF(11) w=7", pass, profile_line(p) + " " + tail_of(d, 13));
    }
    {
        const auto r = verify_conclusion_matrix();
        const bool pass = r.profile.n == 15 && r.profile.d == 12 && r.profile.code_class == CodeClass::nmds &&
                          r.columns_form_n3_arc && r.contains_hyperoval;
        record("GF(8) 3x15 matrix", pass, profile_line(r.profile) + ", elliptic-curve length " +
                                              std::to_string(r.elliptic_bound));
    }
    if (c.json) std::cout << Json{{"checks", checks}, {"all_pass", all}}.dump(2) << "\n";
    return all ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Near-MDS codes from arcs in PG(2,q): constructions, verification, and arc search"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--powers", common.powers, "Print field elements as g^k");
    app.add_flag("--json", common.json, "Emit JSON instead of text");
    app.add_option("--threads", common.threads, "Worker threads for enumeration and restarts")
        ->check(CLI::PositiveNumber);

    int status = ok;

    auto* info = app.add_subcommand("field-info", "Describe a finite field");
    FieldArgs info_field;
    info_field.add_to(info);
    bool info_list = false;
    info->add_flag("--list", info_list, "List the elements in standard order");
    info->callback([&] { status = run_field_info(common, info_field, info_list); });

    auto* oc = app.add_subcommand("opoly-check", "Validate an o-polynomial");
    FieldArgs oc_field;
    oc_field.add_to(oc);
    std::string oc_desc;
    oc->add_option("--opoly", oc_desc, "Descriptor, e.g. segre, translation:h=1, custom:coeffs=0,0,1")->required();
    oc->callback([&] { status = run_opoly_check(common, oc_field, oc_desc); });

    auto* cons = app.add_subcommand("construct", "Build an NMDS code and compare enumerators");
    FieldArgs cons_field;
    cons_field.add_to(cons);
    ConstructArgs cons_args;
    auto* even_flag = cons->add_flag("--even", cons_args.even, "Even-q construction from an o-polynomial");
    auto* odd_flag = cons->add_flag("--odd", cons_args.odd, "Odd-q construction from the conic");
    even_flag->excludes(odd_flag);
    cons->add_option("--opoly", cons_args.opoly, "o-polynomial descriptor (even q)");
    cons->add_option("--v", cons_args.v, "v outside the image of f(x)+x (default: first admissible)");
    cons->add_option("--w", cons_args.w, "w with eta(w)=eta(1+4w)=-1 (default: first admissible)");
    cons->add_option("--order", cons_args.order, "Column order: standard, canonical, powers, descending");
    cons->add_option("--output", cons_args.output, "Write the matrix in text form to this file");
    cons->callback([&] { status = run_construct(common, cons_field, cons_args); });

    auto* an = app.add_subcommand("analyze", "Profile, weights, locality and bounds of a matrix file");
    std::string an_path;
    an->add_option("matrix", an_path, "Matrix text file")->required();
    an->callback([&] { status = run_analyze(common, an_path); });

    auto* loc = app.add_subcommand("locality", "Locality report of a 3 x n matrix file");
    std::string loc_path;
    loc->add_option("matrix", loc_path, "Matrix text file")->required();
    loc->callback([&] { status = run_locality(common, loc_path); });

    auto* bounds = app.add_subcommand("bounds", "Singleton-like and CM bound checks");
    long long bn = 0, bk = 0, bd = 0, br = 0;
    std::uint64_t bq = 2;
    bounds->add_option("--n", bn)->required();
    bounds->add_option("--k", bk)->required();
    bounds->add_option("--d", bd)->required();
    bounds->add_option("--r", br)->required();
    bounds->add_option("--q", bq);
    bounds->callback([&] { status = run_bounds(common, bn, bk, bd, br, bq); });

    auto* census = app.add_subcommand("census", "Root-count census over (u1,u2) in (F*)^2");
    FieldArgs census_field;
    census_field.add_to(census);
    std::string census_kind, census_opoly = "translation:h=1", census_v, census_w;
    census->add_option("--kind", census_kind, "even-A1, even-A2, odd-B1 or odd-B2");
    for (const char* k : {"even-A1", "even-A2", "odd-B1", "odd-B2"}) {
        census->add_flag_callback(std::string("--") + k, [&census_kind, k] { census_kind = k; });
    }
    census->add_option("--opoly", census_opoly, "o-polynomial descriptor (even kinds)");
    census->add_option("--v", census_v, "v (even kinds)");
    census->add_option("--w", census_w, "w (odd kinds)");
    census->callback([&] {
        if (census_kind.empty()) throw InvalidInput("pick a census kind");
        status = run_census(common, census_field, census_kind, census_opoly, census_v.empty() ? census_w : census_v);
    });

    auto* search = app.add_subcommand("search", "Extend an arc to a large (n,3)-arc");
    FieldArgs search_field;
    search_field.add_to(search);
    SearchArgs sa;
    search->add_option("--base", sa.base, "hyperoval[:<opoly>], oval, empty, matrix:<file>, points:<x:y:z,...>");
    search->add_option("--strategy", sa.strategy, "dfs or greedy-restart");
    search->add_option("--max-nodes", sa.max_nodes, "Node budget (0: unlimited)");
    search->add_option("--max-restarts", sa.max_restarts, "Restart budget for greedy-restart");
    search->add_option("--max-seconds", sa.max_seconds, "Time budget in seconds (0: unlimited)");
    search->add_option("--target", sa.target, "Stop once an arc of this size is found");
    search->add_option("--seed", sa.seed, "Seed for greedy-restart shuffles");
    search->add_option("--export", sa.export_path, "Write the arc as a generator matrix");
    search->callback([&] { status = run_search(common, search_field, sa); });

    auto* vp = app.add_subcommand("verify-paper", "Run the golden fixtures");
    vp->callback([&] { status = run_verify_paper(common); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : invalid_input;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return budget_exhausted;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return status;
}
