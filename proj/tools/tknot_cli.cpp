#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "tknot/census.hpp"
#include "tknot/diagram.hpp"
#include "tknot/enumerate.hpp"
#include "tknot/invariant.hpp"
#include "tknot/moves.hpp"
#include "tknot/render.hpp"

using namespace tknot;

namespace {

int run_enum_graphs(int max_vertices, bool all_loops) {
    auto gs = enum_graphs(max_vertices, all_loops ? 1 << 20 : 2);
    for (const auto& g : gs)
        std::cout << graph_type(g) << ' ' << g.nv << ' ' << g.key() << (lemma1_check(g) ? "" : " lemma-fail") << '\n';
    std::cout << "graphs: " << gs.size() << '\n';
    return 0;
}

int run_enum_projections(int n, bool all) {
    std::vector<ProjectionRecord> recs;
    if (all)
        recs = dedupe_projections(enum_shadows(n));
    else
        recs = prime_projections(n);
    nlohmann::ordered_json summary;
    std::map<std::string, int> per_type;
    nlohmann::ordered_json fps = nlohmann::ordered_json::object();
    for (const auto& r : recs) {
        std::cout << r.name << ' ' << encode_tkc(r.proj) << '\n';
        ++per_type[std::string(1, r.type)];
        fps[r.name] = to_string(r.fp);
    }
    summary["crossings"] = n;
    summary["mode"] = all ? "all" : "prime";
    summary["count"] = recs.size();
    summary["per_type"] = per_type;
    summary["fingerprints"] = fps;
    std::cout << summary.dump(2) << '\n';
    return 0;
}

int run_invariant(const std::string& code, bool verbose) {
    Diagram d = decode_tkc(code);
    validate(d);
    std::cout << canonical_invariant(d).str() << '\n';
    Vec2 k = knot_class(d), k2 = mod2(k);
    std::cout << "writhe " << (d.n() ? writhe(d) : 0) << '\n';
    std::cout << "class (" << k.u << ',' << k.v << ") mod2 (" << k2.u << ',' << k2.v << ")\n";
    if (verbose) {
        for (unsigned m = 0; m < (1u << d.n()); ++m) {
            State s = state_from_mask(d.n(), m);
            auto r = resolve_state(d, s);
            std::cout << "state ";
            for (auto x : s) std::cout << (x == Marker::A ? 'A' : 'B');
            std::cout << " alpha=" << r.alpha << " beta=" << r.beta << " gamma=" << r.gamma << " delta=" << r.delta
                      << '\n';
        }
    }
    return 0;
}

int run_census(int max_crossings, const std::string& out, const std::string& emit, const std::string& render_dir,
               const std::string& verify, std::size_t steps) {
    CensusOptions opt;
    opt.max_crossings = max_crossings;
    opt.search_steps = steps;
    CensusTable t = build_census(opt);
    std::string text = emit == "csv" ? emit_csv(t) : emit == "latex" ? emit_latex(t) : emit_json(t);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << text;
    }
    if (!render_dir.empty()) {
        std::filesystem::create_directories(render_dir);
        for (const auto& r : t.records) std::ofstream(render_dir + "/" + r.name + ".svg") << render_svg(r.diagram);
    }
    auto s = stats(t);
    std::cerr << "records " << s.records << ", projections " << s.projections << ", homologically trivial "
              << s.homologically_trivial << ", alternating " << s.alternating << ", max per projection "
              << s.max_per_projection << '\n';
    for (const auto& e : t.events)
        if (e.kind != "nonminimal") std::cerr << e.kind << ' ' << e.first << ' ' << e.second << ": " << e.detail << '\n';
    int rc = t.unresolved_pairs ? 1 : 0;
    if (!verify.empty()) {
        auto rep = verify_expected(t, load_expected_file(verify));
        std::cerr << "matched " << rep.matched.size() << '\n';
        for (const auto& l : rep.unmatched_expected) std::cerr << "unmatched expected " << l << '\n';
        for (const auto& l : rep.unmatched_records) std::cerr << "unmatched record " << l << '\n';
        if (!rep.perfect) rc = 1;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime knots in the thickened torus"};
    app.require_subcommand(1);

    int max_vertices = 4;
    bool all_loops = false;
    auto* g = app.add_subcommand("enum-graphs", "List connected 4-regular multigraphs");
    g->add_option("--max-vertices", max_vertices)->check(CLI::Range(1, 5));
    g->add_flag("--all-loops", all_loops, "Do not restrict the number of loops");

    int crossings = 0;
    bool all = false, prime = false;
    auto* p = app.add_subcommand("enum-projections", "List projections as TKC lines");
    p->add_option("--crossings", crossings)->required()->check(CLI::Range(0, 4));
    auto* fa = p->add_flag("--all", all, "Every projection, prime or not");
    p->add_flag("--prime", prime, "Prime projections only (default)")->excludes(fa);

    std::string code, code2;
    bool verbose = false;
    auto* inv = app.add_subcommand("invariant", "Compute X for a diagram");
    inv->add_option("--code", code)->required();
    inv->add_flag("--verbose", verbose);

    auto* simp = app.add_subcommand("simplify", "Greedy R1/R2 reduction");
    simp->add_option("--code", code)->required();

    int max_cross = 6;
    std::size_t max_steps = 20000;
    auto* eq = app.add_subcommand("equiv", "Search for a move sequence between two diagrams");
    eq->add_option("--code1", code)->required();
    eq->add_option("--code2", code2)->required();
    eq->add_option("--max-crossings", max_cross);
    eq->add_option("--max-steps", max_steps);

    std::string out, emit = "json", render_dir, verify;
    int census_max = 4;
    auto* cen = app.add_subcommand("census", "Tabulate knots");
    cen->add_option("--max-crossings", census_max)->check(CLI::Range(0, 4));
    cen->add_option("--out", out);
    cen->add_option("--emit", emit)->check(CLI::IsMember({"json", "csv", "latex"}));
    cen->add_option("--render-dir", render_dir);
    cen->add_option("--verify", verify)->expected(0, 1)->default_str(default_expected_path());
    cen->add_option("--max-steps", max_steps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*g) return run_enum_graphs(max_vertices, all_loops);
        if (*p) return run_enum_projections(crossings, all);
        if (*inv) return run_invariant(code, verbose);
        if (*simp) {
            Diagram d = decode_tkc(code);
            validate(d);
            std::cout << encode_tkc(simplify(d)) << '\n';
            return 0;
        }
        if (*eq) {
            Diagram a = decode_tkc(code), b = decode_tkc(code2);
            validate(a);
            validate(b);
            auto r = equivalence_search(a, b, max_cross, max_steps);
            const char* st = r.status == SearchStatus::equivalent ? "equivalent"
                             : r.status == SearchStatus::cap_exceeded ? "cap-exceeded"
                                                                      : "not-found";
            std::cout << st << " depth " << r.depth << " visited " << r.visited << '\n';
            return r.status == SearchStatus::equivalent ? 0 : 1;
        }
        if (*cen) {
            if (cen->count("--verify") && verify.empty()) verify = default_expected_path();
            return run_census(census_max, out, emit, render_dir, verify, max_steps);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
