// mukai-walls: exact stability-wall computations on polarized K3 surfaces.
// Every output is byte-reproducible: keys sorted, rationals as "p/q", no
// timestamps, determinism independent of MUKAI_WALLS_THREADS.

#include "json_io.hpp"
#include "svg.hpp"

#include "mukai/charge.hpp"
#include "mukai/destab.hpp"
#include "mukai/error.hpp"
#include "mukai/intersect.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mukai;

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) parts.push_back(cur);
    return parts;
}

long long parse_int(const std::string& text) {
    const Rational q = parse_rational(text);
    return to_integer(q);
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const auto& p : split_commas(text)) out.push_back(parse_int(p));
    return out;
}

struct SurfaceSpec {
    std::string h2_text;
    std::string lattice_path;

    // exactly one source
    PolarizedSurface resolve() const {
        if (h2_text.empty() == lattice_path.empty())
            throw DomainError(errkind::invalid_argument,
                              "exactly one of --h2 and --lattice is required");
        if (!h2_text.empty()) return PolarizedSurface(parse_int(h2_text));
        std::ifstream in(lattice_path);
        if (!in) throw DomainError(errkind::parse_error, "cannot read " + lattice_path);
        json j = json::parse(in);
        auto lat = lattice_from_json(j);
        return PolarizedSurface(lat->h_square(), lat);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--h2", h2_text, "H^2 (positive even integer)");
        cmd->add_option("--lattice", lattice_path, "NS lattice JSON file");
    }
};

MukaiVector parse_vector(const std::string& text, const PolarizedSurface& surface) {
    const auto parts = split_commas(text);
    if (parts.size() != 3)
        throw DomainError(errkind::parse_error, "--v expects r,dH,s: '" + text + "'");
    const long long r = parse_int(parts[0]);
    const Rational d = parse_rational(parts[1]);
    const Rational s = parse_rational(parts[2]);
    return {r, NumDivisorClass::pure_h(d / rat(surface.h2())), s};
}

StabilityPoint parse_point(const std::string& text) {
    const auto parts = split_commas(text);
    if (parts.size() != 2)
        throw DomainError(errkind::parse_error, "--point expects b,a: '" + text + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1])};
}

unsigned threads_from_env() {
    const char* env = std::getenv("MUKAI_WALLS_THREADS");
    if (env == nullptr || *env == '\0') return 1;
    try {
        const long long n = parse_int(env);
        if (n < 1) throw DomainError(errkind::invalid_argument, "");
        return static_cast<unsigned>(n);
    } catch (const DomainError&) {
        throw DomainError(errkind::invalid_argument,
                          "MUKAI_WALLS_THREADS must be a positive integer");
    }
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// --- table renderings (human side of --format) ---

void emit_table_candidates(const std::vector<WallCandidate>& cs) {
    std::cout << "r0  d0  s0  w2H2      verdict\n";
    for (const auto& c : cs) {
        std::ostringstream line;
        line << c.r0 << "   " << c.d0 << "  " << c.s0 << "   " << fraction_str(c.a2h2) << "  "
             << verdict_str(c.verdict);
        for (const auto& cond : c.conditions) line << " [" << cond << "]";
        std::cout << line.str() << "\n";
    }
}

void emit_table_kv(const json& doc) {
    for (auto it = doc.begin(); it != doc.end(); ++it)
        std::cout << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump())
                  << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact Bridgeland-type stability data on polarized K3 surfaces"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "json | table | svg (svg: wall only)")
        ->check(CLI::IsMember({"json", "table", "svg"}));
    // --format may appear after the subcommand name
    app.fallthrough();

    // charge
    auto* charge_cmd = app.add_subcommand("charge", "central charge Z_{bH,aH}(v)");
    SurfaceSpec charge_surface;
    charge_surface.attach(charge_cmd);
    std::string charge_v, charge_point;
    charge_cmd->add_option("--v", charge_v, "Mukai vector r,dH,s")->required();
    charge_cmd->add_option("--point", charge_point, "stability point b,a")->required();

    // wall
    auto* wall_cmd = app.add_subcommand("wall", "numerical wall of vector pairs");
    SurfaceSpec wall_surface;
    wall_surface.attach(wall_cmd);
    std::string wall_v;
    std::vector<std::string> wall_ws;
    long long wall_samples = 0;
    long long wall_scale = 100;
    std::string wall_svg_path;
    wall_cmd->add_option("--v", wall_v, "Mukai vector r,dH,s")->required();
    wall_cmd->add_option("--w", wall_ws, "second vector r,dH,s (repeatable)")->required();
    wall_cmd->add_option("--samples", wall_samples, "also emit n exact points per wall");
    wall_cmd->add_option("--scale", wall_scale, "SVG pixel scale (default 100)");
    wall_cmd->add_option("--svg", wall_svg_path, "write an SVG plot to this file");

    // destab
    auto* destab_cmd = app.add_subcommand("destab", "numerical destabilizer candidates");
    SurfaceSpec destab_surface;
    destab_surface.attach(destab_cmd);
    std::string destab_v;
    std::string destab_w2min;
    long long destab_max_rank = -1;
    destab_cmd->add_option("--v", destab_v, "Mukai vector r,dH,s")->required();
    destab_cmd->add_option("--max-rank", destab_max_rank, "rank cap (default rank(v)+2)");
    destab_cmd->add_option("--w2min", destab_w2min, "wall-position floor w^2 H^2 (default 2)");

    // lemma
    auto* lemma_cmd = app.add_subcommand("lemma", "congruence case table (cross-oracle)");
    long long lemma_mod4 = 0, lemma_s = 0;
    lemma_cmd->add_option("--mod4", lemma_mod4, "genus mod 4: 1, 2 or 3")->required();
    lemma_cmd->add_option("--s", lemma_s, "s (mod4 = 1,3) or p (mod4 = 2)")->required();

    // simultaneity
    auto* sim_cmd = app.add_subcommand("simultaneity", "coexistence of the two even-s cases");
    long long sim_s = 0;
    sim_cmd->add_option("--s", sim_s, "even s >= 4")->required();

    // oxwall
    auto* ox_cmd = app.add_subcommand("oxwall", "structure-sheaf wall brute force");
    long long ox_s = 0, ox_rk_max = 6;
    std::string ox_beta_max = "4";
    ox_cmd->add_option("--s", ox_s, "s >= 4")->required();
    ox_cmd->add_option("--rk-max", ox_rk_max, "rank cap (default 6)");
    ox_cmd->add_option("--beta-max", ox_beta_max, "beta cap (default 4)");

    // lattice
    auto* lat_cmd = app.add_subcommand("lattice", "Gram-lattice class searches");
    std::string lat_path;
    std::string lat_sq, lat_hdeg, lat_aclass;
    long long lat_bound = 12;
    bool lat_noell = false;
    lat_cmd->add_option("--lattice", lat_path, "NS lattice JSON file")->required();
    lat_cmd->add_option("--target-sq", lat_sq, "target self-intersection");
    lat_cmd->add_option("--target-hdeg", lat_hdeg, "target H-degree");
    lat_cmd->add_option("--bound", lat_bound, "coefficient bound (default 12)");
    lat_cmd->add_flag("--noellint1", lat_noell, "search for D with D^2 = 0, D.H = 1");
    lat_cmd->add_option("--a-class", lat_aclass, "coordinates of A for H-A / H-2A diagnostics");

    // fano
    auto* fano_cmd = app.add_subcommand("fano", "triple products and anticanonical genus");
    std::string fano_builtin, fano_table, fano_divisor, fano_d1, fano_d2, fano_d3;
    fano_cmd->add_option("--builtin", fano_builtin, "built-in table (blowup-p3-two-lines)");
    fano_cmd->add_option("--table", fano_table, "table JSON file");
    fano_cmd->add_option("--divisor", fano_divisor, "anticanonical divisor coordinates");
    fano_cmd->add_option("--d1", fano_d1, "first divisor of a plain triple product");
    fano_cmd->add_option("--d2", fano_d2, "second divisor");
    fano_cmd->add_option("--d3", fano_d3, "third divisor");

    // h0bound
    auto* h0_cmd = app.add_subcommand("h0bound", "global-section bound for v = (r, cH, s)");
    SurfaceSpec h0_surface;
    h0_surface.attach(h0_cmd);
    std::string h0_v;
    bool h0_statement = false;
    h0_cmd->add_option("--v", h0_v, "Mukai vector r,dH,s")->required();
    h0_cmd->add_flag("--statement-radicand", h0_statement,
                     "use the lemma statement's radicand instead of the proof's");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            return app.exit(e); // --help and friends
        }
        json err = {{"error", "UsageError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    if (format == "svg" && !wall_cmd->parsed()) {
        json err = {{"error", "UsageError"}, {"message", "--format svg applies to wall only"}};
        std::cerr << err.dump() << "\n";
        return 2;
    }

    const unsigned threads = threads_from_env();

    if (charge_cmd->parsed()) {
        const auto surface = charge_surface.resolve();
        const auto v = parse_vector(charge_v, surface);
        const auto z = central_charge(parse_point(charge_point), v, surface);
        const json doc = charge_json(z);
        if (format == "table")
            emit_table_kv(doc);
        else
            emit(doc);
        return 0;
    }

    if (wall_cmd->parsed()) {
        const auto surface = wall_surface.resolve();
        const auto v = parse_vector(wall_v, surface);
        std::vector<Wall> walls;
        json arr = json::array();
        for (const auto& wtext : wall_ws) {
            const auto w = parse_vector(wtext, surface);
            walls.push_back(numerical_wall(v, w, surface));
            json jw = wall_json(walls.back());
            const auto a2 = ray_wall_a2(v, w, surface);
            jw["ray_b0_a2"] = a2 ? json(fraction_str(*a2)) : json(nullptr);
            if (wall_samples > 0 &&
                (walls.back().kind == WallKind::semicircle ||
                 walls.back().kind == WallKind::vertical_line)) {
                json pts = json::array();
                for (const auto& [b, a2s] : sample_wall(walls.back(), static_cast<int>(wall_samples)))
                    pts.push_back(json::array({fraction_str(b), fraction_str(a2s)}));
                jw["samples"] = pts;
            }
            arr.push_back(jw);
        }
        if (!wall_svg_path.empty()) {
            std::ofstream out(wall_svg_path);
            if (!out) throw DomainError(errkind::invalid_argument, "cannot write " + wall_svg_path);
            out << walls_svg(walls, wall_scale);
        }
        if (format == "svg") {
            std::cout << walls_svg(walls, wall_scale);
        } else if (format == "table") {
            for (const auto& jw : arr) emit_table_kv(jw);
        } else {
            emit(arr);
        }
        return 0;
    }

    if (destab_cmd->parsed()) {
        const auto surface = destab_surface.resolve();
        const auto v = parse_vector(destab_v, surface);
        EnumerateOptions opts;
        if (destab_max_rank >= 0) opts.max_rank = destab_max_rank;
        if (!destab_w2min.empty()) opts.a2h2_min = parse_rational(destab_w2min);
        opts.threads = threads;
        const auto cs = enumerate_destabilizers(v, surface, opts);
        if (format == "table")
            emit_table_candidates(cs);
        else
            emit(candidates_json(cs));
        return 0;
    }

    if (lemma_cmd->parsed()) {
        const auto rep = lemma_case_table(static_cast<int>(lemma_mod4), lemma_s);
        const json doc = case_report_json(rep);
        if (format == "table") {
            std::cout << "a  b  k   r0  d0  s0  w2H2\n";
            for (const auto& s : rep.survivors)
                std::cout << s.a << "  " << s.b << "  " << s.k << "  " << s.r0 << "   " << s.d0
                          << "  " << s.s0 << "   " << fraction_str(s.w2h2) << "\n";
        } else {
            emit(doc);
        }
        return 0;
    }

    if (sim_cmd->parsed()) {
        const auto rep = simultaneity_check(sim_s);
        const json doc = simultaneity_json(sim_s, rep);
        if (format == "table")
            emit_table_kv(doc);
        else
            emit(doc);
        return 0;
    }

    if (ox_cmd->parsed()) {
        OxWallOptions opts;
        opts.rk_max = ox_rk_max;
        opts.beta_max = parse_rational(ox_beta_max);
        const auto sols = ox_wall_solutions(ox_s, opts);
        const json doc = oxwall_json(ox_s, opts, sols);
        if (format == "table") {
            std::cout << "alpha  beta  rk\n";
            for (const auto& s : sols)
                std::cout << fraction_str(s.alpha) << "  " << fraction_str(s.beta) << "  " << s.rk
                          << "\n";
        } else {
            emit(doc);
        }
        return 0;
    }

    if (lat_cmd->parsed()) {
        std::ifstream in(lat_path);
        if (!in) throw DomainError(errkind::parse_error, "cannot read " + lat_path);
        const auto lat = lattice_from_json(json::parse(in));
        json doc;
        if (lat_noell) {
            doc = noellint1_json(noellint1_verdict(*lat, lat_bound));
        } else if (!lat_aclass.empty()) {
            doc = hyperelliptic_json(hyperelliptic_diagnostics(*lat, parse_int_list(lat_aclass)));
        } else if (!lat_sq.empty() && !lat_hdeg.empty()) {
            const long long sq = parse_int(lat_sq);
            const long long hdeg = parse_int(lat_hdeg);
            doc = search_result_json(sq, hdeg, search_classes(*lat, sq, hdeg, lat_bound));
        } else {
            throw DomainError(errkind::invalid_argument,
                              "lattice needs --noellint1, --a-class, or --target-sq/--target-hdeg");
        }
        if (format == "table")
            emit_table_kv(doc);
        else
            emit(doc);
        return 0;
    }

    if (fano_cmd->parsed()) {
        std::optional<TripleTable> table;
        if (!fano_builtin.empty()) {
            if (fano_builtin != "blowup-p3-two-lines")
                throw DomainError(errkind::invalid_argument,
                                  "unknown builtin '" + fano_builtin + "'");
            table = TripleTable::blowup_p3_two_lines();
        } else if (!fano_table.empty()) {
            std::ifstream in(fano_table);
            if (!in) throw DomainError(errkind::parse_error, "cannot read " + fano_table);
            table = table_from_json(json::parse(in));
        } else {
            throw DomainError(errkind::invalid_argument, "fano needs --builtin or --table");
        }
        json doc;
        if (!fano_divisor.empty()) {
            const auto k = parse_int_list(fano_divisor);
            doc = {{"cube", table->triple(k, k, k)}, {"genus", fano_genus(*table, k)}};
        } else if (!fano_d1.empty() && !fano_d2.empty() && !fano_d3.empty()) {
            doc = {{"triple", table->triple(parse_int_list(fano_d1), parse_int_list(fano_d2),
                                            parse_int_list(fano_d3))}};
        } else {
            throw DomainError(errkind::invalid_argument,
                              "fano needs --divisor or all of --d1/--d2/--d3");
        }
        if (format == "table")
            emit_table_kv(doc);
        else
            emit(doc);
        return 0;
    }

    if (h0_cmd->parsed()) {
        const auto surface = h0_surface.resolve();
        const auto v = parse_vector(h0_v, surface);
        const auto version = h0_statement ? H0BoundVersion::statement : H0BoundVersion::proof;
        const json doc =
            h0_bound_json(h0_upper_bound(v, surface, version), h0_max(v, surface, version), version);
        if (format == "table")
            emit_table_kv(doc);
        else
            emit(doc);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mukai::DomainError& e) {
        nlohmann::json err = {{"error", e.kind()}, {"message", e.message()}};
        std::cerr << err.dump() << "\n";
        return 3;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"error", "InternalError"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 3;
    }
}
