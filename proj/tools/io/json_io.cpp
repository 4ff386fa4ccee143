#include "json_io.hpp"

#include "mukai/error.hpp"

namespace mukai {

json rational_json(const Rational& q) { return fraction_str(q); }

json mukai_vector_json(const MukaiVector& v) {
    json delta;
    switch (v.delta.kind()) {
    case NumDivisorClass::Kind::pure_h:
        delta = {{"kind", "pureH"}, {"c", fraction_str(v.delta.c())}};
        break;
    case NumDivisorClass::Kind::h_plus_ortho:
        delta = {{"kind", "hOrtho"},
                 {"c", fraction_str(v.delta.c())},
                 {"omega_sq", fraction_str(v.delta.omega_sq())}};
        break;
    case NumDivisorClass::Kind::lattice_coords:
        delta = {{"kind", "coords"}, {"coords", v.delta.coords()}};
        break;
    }
    return {{"r", v.r}, {"delta", delta}, {"s", fraction_str(v.s)}};
}

json charge_json(const ChargeValue& z) {
    return {{"re", fraction_str(z.re)}, {"im", fraction_str(z.im)}};
}

namespace {

const char* wall_kind_str(WallKind k) {
    switch (k) {
    case WallKind::semicircle: return "semicircle";
    case WallKind::vertical_line: return "vertical_line";
    case WallKind::everywhere: return "everywhere";
    case WallKind::empty: return "empty";
    }
    return "?";
}

} // namespace

json wall_json(const Wall& wall) {
    json j = {{"kind", wall_kind_str(wall.kind)},
              {"k2", fraction_str(wall.k2)},
              {"k1", fraction_str(wall.k1)},
              {"k0", fraction_str(wall.k0)},
              {"pair", json::array({mukai_vector_json(wall.v), mukai_vector_json(wall.w)})}};
    if (wall.kind == WallKind::semicircle) {
        j["center_b"] = fraction_str(wall.center_b);
        j["radius_sq"] = fraction_str(wall.radius_sq);
    } else if (wall.kind == WallKind::vertical_line) {
        j["line_b"] = fraction_str(wall.line_b);
    }
    return j;
}

std::string verdict_str(VerdictKind v) {
    switch (v) {
    case VerdictKind::unobstructed: return "unobstructed";
    case VerdictKind::conditional: return "conditional";
    case VerdictKind::impossible: return "impossible";
    }
    return "?";
}

namespace {

const char* meaning_str(ObstructionMeaning m) {
    switch (m) {
    case ObstructionMeaning::no_square_zero_degree_one: return "no_square_zero_degree_one";
    case ObstructionMeaning::elliptic_pencil_deg2: return "elliptic_pencil_deg2";
    case ObstructionMeaning::elliptic_pencil_deg6: return "elliptic_pencil_deg6";
    case ObstructionMeaning::unclassified: return "unclassified";
    }
    return "?";
}

json flag_json(const ObstructionFlag& f) {
    return {{"aux", f.aux == AuxClass::h_minus_delta0 ? "H-D0" : "H-2D0"},
            {"sq", f.aux_sq},
            {"hdeg", f.aux_hdeg},
            {"meaning", meaning_str(f.meaning)}};
}

} // namespace

json candidate_json(const WallCandidate& c) {
    json options = json::array();
    for (const auto& o : c.options) {
        json flags = json::array();
        for (const auto& f : o.flags) flags.push_back(flag_json(f));
        options.push_back({{"delta0_sq", o.delta0_sq},
                           {"omega_sq", fraction_str(o.omega_sq)},
                           {"flags", flags},
                           {"verdict", verdict_str(o.verdict)},
                           {"conditions", o.conditions}});
    }
    return {{"r0", c.r0},
            {"d0", c.d0},
            {"s0", c.s0},
            {"a2h2", fraction_str(c.a2h2)},
            {"options", options},
            {"verdict", verdict_str(c.verdict)},
            {"conditions", c.conditions}};
}

json candidates_json(const std::vector<WallCandidate>& cs) {
    json arr = json::array();
    for (const auto& c : cs) arr.push_back(candidate_json(c));
    return arr;
}

json case_report_json(const CaseReport& rep) {
    json survivors = json::array();
    for (const auto& s : rep.survivors)
        survivors.push_back({{"a", s.a},
                             {"b", s.b},
                             {"k", s.k},
                             {"r0", s.r0},
                             {"d0", s.d0},
                             {"s0", s.s0},
                             {"w2h2", fraction_str(s.w2h2)}});
    return {{"mod4", rep.genus_mod4}, {"s_or_p", rep.s_or_p}, {"survivors", survivors}};
}

json simultaneity_json(long long s, const SimultaneityReport& rep) {
    return {{"s", s},
            {"possible_even_squares", rep.possible_even_squares},
            {"coexistence", rep.coexistence}};
}

json oxwall_json(long long s, const OxWallOptions& opts,
                 const std::vector<OxWallSolution>& sols) {
    json arr = json::array();
    for (const auto& sol : sols)
        arr.push_back({{"alpha", fraction_str(sol.alpha)},
                       {"beta", fraction_str(sol.beta)},
                       {"rk", sol.rk}});
    return {{"s", s},
            {"rk_max", opts.rk_max},
            {"beta_max", fraction_str(opts.beta_max)},
            {"solutions", arr}};
}

json search_result_json(long long target_sq, long long target_hdeg,
                        const ClassSearchResult& res) {
    return {{"target_sq", target_sq},
            {"target_hdeg", target_hdeg},
            {"complete", res.complete},
            {"vectors", res.vectors}};
}

json noellint1_json(const Noellint1Report& rep) {
    return {{"verdict", rep.verdict == LatticeVerdict::no_witness ? "no_witness"
                                                                  : "geometrically_excluded"},
            {"witnesses", rep.witnesses},
            {"complete", rep.complete}};
}

json hyperelliptic_json(const HyperellipticDiagnostics& d) {
    return {{"h_minus_a_sq", d.h_minus_a_sq},
            {"h_minus_2a_sq", d.h_minus_2a_sq},
            {"cross", d.cross},
            {"hyperelliptic_pattern", d.hyperelliptic_pattern}};
}

json h0_bound_json(const H0Bound& bound, long long h0max, H0BoundVersion version) {
    return {{"chi_half", fraction_str(bound.chi_half)},
            {"radicand", fraction_str(bound.radicand)},
            {"h0_max", h0max},
            {"version", version == H0BoundVersion::proof ? "proof" : "statement"}};
}

std::shared_ptr<const GramLattice> lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("gram") || !j.contains("h"))
        throw DomainError(errkind::parse_error, "lattice file needs rank, gram, h");
    const int rank = j.at("rank").get<int>();
    auto gram = j.at("gram").get<std::vector<std::vector<long long>>>();
    auto h = j.at("h").get<std::vector<long long>>();
    if (static_cast<int>(gram.size()) != rank)
        throw DomainError(errkind::parse_error, "gram size disagrees with rank");
    return std::make_shared<const GramLattice>(std::move(gram), std::move(h));
}

TripleTable table_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("products"))
        throw DomainError(errkind::parse_error, "table file needs basis, products");
    auto basis = j.at("basis").get<std::vector<std::string>>();
    TripleTable t(basis);
    auto index_of = [&](const std::string& name) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == name) return static_cast<int>(i);
        throw DomainError(errkind::parse_error, "unknown basis element '" + name + "'");
    };
    for (const auto& p : j.at("products")) {
        t.set_product(index_of(p.at("i").get<std::string>()),
                      index_of(p.at("j").get<std::string>()),
                      index_of(p.at("k").get<std::string>()), p.at("v").get<long long>());
    }
    return t;
}

} // namespace mukai
