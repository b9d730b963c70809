#include "tknot/census.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "tknot/invariant.hpp"
#include "tknot/moves.hpp"

namespace tknot {

namespace {

struct Candidate {
    Diagram d;
    const ProjectionRecord* proj = nullptr;
    std::string key;
    std::string label;
    XPoly X;
};

std::string bits_of(const Diagram& d) {
    std::string s;
    for (int b : d.over) s += static_cast<char>('0' + b);
    return s;
}

bool r_reducible(const Diagram& d) {
    for (const auto& s : find_moves(d))
        if (s.kind == MoveKind::R1down || s.kind == MoveKind::R2down) return true;
    return false;
}

}  // namespace

CensusTable build_census(const CensusOptions& opt) {
    CensusTable t;
    t.projections = prime_projections_upto(opt.max_crossings);
    std::vector<Candidate> cands;
    std::unordered_set<std::string> seen;
    for (const auto& pr : t.projections) {
        int n = pr.proj.n;
        if (n == 0) {
            ++t.diagrams_generated;
            Diagram d{pr.proj, {}};
            cands.push_back({d, &pr, canonical_key(d, {true, true}), pr.name, kauffman_x(d)});
            continue;
        }
        for (unsigned m = 0; m < (1u << n); ++m) {
            ++t.diagrams_generated;
            Diagram d{pr.proj, std::vector<int>(n)};
            for (int c = 0; c < n; ++c) d.over[c] = (m >> c) & 1u;
            if (r_reducible(d)) {
                ++t.reducible_discarded;
                continue;
            }
            std::string key = canonical_key(d, {true, true});
            if (!seen.insert(key).second) {
                ++t.symmetric_duplicates;
                continue;
            }
            std::string label = pr.name + "/" + bits_of(d);
            auto rr = reduction_search(d, n + opt.search_extra, opt.search_steps);
            if (rr.reduced) {
                ++t.nonminimal_discarded;
                t.events.push_back({"nonminimal", label, "",
                                    "equivalent to a diagram with " + std::to_string(rr.smaller->n()) + " crossings"});
                continue;
            }
            if (rr.capped)
                t.events.push_back({"unverified", label, "", "reduction search hit the step cap"});
            cands.push_back({d, &pr, key, label, kauffman_x(d)});
        }
    }

    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < cands.size(); ++i)
        groups[canonical_mirror_rep(cands[i].X).str()].push_back(i);

    std::vector<std::size_t> parent(cands.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto better = [&](std::size_t a, std::size_t b) {
        const auto &x = cands[a], &y = cands[b];
        return std::make_pair(x.d.n(), x.key) < std::make_pair(y.d.n(), y.key);
    };
    for (auto& [k, g] : groups) {
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                std::size_t a = find(g[i]), b = find(g[j]);
                if (a == b) continue;
                int cap = std::max(cands[a].d.n(), cands[b].d.n()) + opt.search_extra;
                auto sr = equivalence_search(cands[a].d, cands[b].d, cap, opt.search_steps);
                if (sr.status != SearchStatus::equivalent) continue;
                std::size_t keep = better(a, b) ? a : b, drop = keep == a ? b : a;
                parent[drop] = keep;
                t.events.push_back({"merged", cands[keep].label, cands[drop].label,
                                    "moves: " + std::to_string(sr.depth)});
            }
        std::vector<std::size_t> roots;
        for (std::size_t i : g)
            if (find(i) == i) roots.push_back(i);
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                const auto &a = cands[roots[i]], &b = cands[roots[j]];
                if (!graded_equivalent(graded_x(a.d), graded_x(b.d))) {
                    t.events.push_back({"separated", a.label, b.label, "class-graded polynomials differ"});
                } else {
                    ++t.unresolved_pairs;
                    t.events.push_back({"unresolved", a.label, b.label, "same invariant, no connecting moves found"});
                }
            }
    }

    std::map<std::size_t, int> class_size;
    for (std::size_t i = 0; i < cands.size(); ++i) ++class_size[find(i)];
    std::vector<std::size_t> reps;
    for (auto [r, c] : class_size) reps.push_back(r);
    std::sort(reps.begin(), reps.end(), better);
    std::map<int, int> counter;
    for (std::size_t r : reps) {
        const auto& c = cands[r];
        CensusRecord rec;
        rec.diagram = c.d;
        rec.name = std::to_string(c.d.n()) + "_" + std::to_string(++counter[c.d.n()]);
        rec.invariant = canonical_mirror_rep(c.X);
        rec.table_polynomial = canonical_mirror_rep(table_x(c.d));
        rec.writhe = c.d.n() == 0 ? 0 : writhe(c.d);
        rec.class_z = knot_class(c.d);
        rec.class_mod2 = mod2(rec.class_z);
        rec.alternating = c.d.n() > 0 && is_alternating(c.d);
        rec.projection_name = c.proj->name;
        rec.projection_key = c.proj->key;
        rec.fingerprint = c.proj->fp;
        rec.merged_diagrams = class_size[r];
        t.records.push_back(std::move(rec));
    }
    return t;
}

std::vector<ExpectedEntry> load_expected(std::istream& in) {
    std::vector<ExpectedEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("line " + std::to_string(lineno) + ": missing ':'");
        std::string label = line.substr(0, colon);
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t") + 1);
        try {
            out.push_back({label, XPoly::parse(line.substr(colon + 1))});
        } catch (const ParseError& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::vector<ExpectedEntry> load_expected_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_expected(in);
}

std::string default_expected_path() { return std::string(TKNOT_DATA_DIR) + "/expected_polys.txt"; }

namespace {

long long l1_distance(const XPoly& p, const XPoly& q) {
    XPoly d = p - q;
    BigInt s = 0;
    for (const auto& [m, c] : d.terms()) s += c < 0 ? BigInt(-c) : c;
    return s.convert_to<long long>();
}

}  // namespace

MatchReport verify_expected(const CensusTable& t, const std::vector<ExpectedEntry>& expected) {
    MatchReport rep;
    std::size_t E = expected.size(), R = t.records.size();
    std::vector<std::vector<std::size_t>> adj(E);
    for (std::size_t i = 0; i < E; ++i)
        for (std::size_t j = 0; j < R; ++j) {
            const XPoly& p = t.records[j].table_polynomial;
            if (expected[i].poly == p || expected[i].poly == p.mirror_a()) adj[i].push_back(j);
        }
    std::vector<long> match_r(R, -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment = [&](std::size_t i, std::vector<char>& used) {
        for (std::size_t j : adj[i]) {
            if (used[j]) continue;
            used[j] = 1;
            if (match_r[j] < 0 || augment(static_cast<std::size_t>(match_r[j]), used)) {
                match_r[j] = static_cast<long>(i);
                return true;
            }
        }
        return false;
    };
    for (std::size_t i = 0; i < E; ++i) {
        std::vector<char> used(R, 0);
        augment(i, used);
    }
    std::vector<char> exp_matched(E, 0);
    for (std::size_t j = 0; j < R; ++j) {
        if (match_r[j] >= 0) {
            exp_matched[match_r[j]] = 1;
            rep.matched[expected[match_r[j]].label] = t.records[j].name;
        } else {
            rep.unmatched_records.push_back(t.records[j].name);
        }
    }
    for (std::size_t i = 0; i < E; ++i) {
        if (exp_matched[i]) continue;
        rep.unmatched_expected.push_back(expected[i].label);
        NearMatch best{expected[i].label, "", -1};
        for (std::size_t j = 0; j < R; ++j) {
            if (match_r[j] >= 0) continue;
            const auto& r = t.records[j];
            for (const XPoly& p : {r.table_polynomial, r.table_polynomial.mirror_a()}) {
                long long d = l1_distance(expected[i].poly, p);
                if (best.distance < 0 || d < best.distance) best = {expected[i].label, r.name, d};
            }
        }
        rep.near.push_back(best);
    }
    rep.perfect = rep.unmatched_expected.empty() && rep.unmatched_records.empty();
    return rep;
}

bool parity_consistent(const XPoly& p, Vec2 cls) {
    std::set<int> parities;
    for (const auto& [m, c] : p.terms()) parities.insert(m.xdeg % 2);
    if (parities.size() != 1) return false;
    bool even = *parities.begin() == 0;
    return even == mod2(cls).is_zero();
}

CensusStats stats(const CensusTable& t) {
    CensusStats s;
    s.records = static_cast<int>(t.records.size());
    s.projections = static_cast<int>(t.projections.size());
    for (const auto& p : t.projections) s.per_projection[p.name] = 0;
    for (const auto& r : t.records) {
        if (r.class_z.is_zero()) ++s.homologically_trivial;
        if (r.alternating) ++s.alternating;
        ++s.per_projection[r.projection_name];
        if (!parity_consistent(r.invariant, r.class_z)) s.parity_violations.push_back(r.name);
    }
    for (const auto& [name, c] : s.per_projection) s.max_per_projection = std::max(s.max_per_projection, c);
    s.mean_per_projection = s.projections ? static_cast<double>(s.records) / s.projections : 0.0;
    for (std::size_t i = 0; i < t.records.size(); ++i)
        for (std::size_t j = i + 1; j < t.records.size(); ++j) {
            const auto &a = t.records[i], &b = t.records[j];
            if (a.diagram.n() != b.diagram.n() && a.invariant == b.invariant)
                s.cross_crossing_collisions.push_back(a.name + " ~ " + b.name);
        }
    return s;
}

std::string emit_json(const CensusTable& t) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["version"] = "tknot-census/1";
    j["conventions"] = {
        {"slot_order", "counterclockwise; half-edge 4c+s is slot s of crossing c; passes {0,2} and {1,3}"},
        {"face_rule", "successor of h is rot(pair(h)), one slot counterclockwise after the pairing"},
        {"smoothing_rule",
         "over bit 0: A joins slots (0,1),(2,3) and B joins (1,2),(3,0); over bit 1 swaps A and B; "
         "writhe +1 when the outgoing over-direction is one slot counterclockwise from the outgoing under-direction"},
    };
    ordered_json recs = ordered_json::array();
    for (const auto& r : t.records) {
        ordered_json fp = ordered_json::array();
        for (auto [deg, ann] : r.fingerprint) fp.push_back({deg, ann ? "annular" : "disk"});
        recs.push_back({
            {"name", r.name},
            {"tkc", encode_tkc(r.diagram)},
            {"polynomial", r.invariant.str()},
            {"table_polynomial", r.table_polynomial.str()},
            {"writhe", r.writhe},
            {"class_z", {r.class_z.u, r.class_z.v}},
            {"class_mod2", {r.class_mod2.u, r.class_mod2.v}},
            {"alternating", r.alternating},
            {"projection", r.projection_name},
            {"projection_key", r.projection_key},
            {"fingerprint", fp},
        });
    }
    j["records"] = recs;
    return j.dump(2) + "\n";
}

CensusTable parse_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CensusTable t;
    for (const auto& r : j.at("records")) {
        CensusRecord rec;
        rec.name = r.at("name").get<std::string>();
        rec.diagram = decode_tkc(r.at("tkc").get<std::string>());
        rec.invariant = XPoly::parse(r.at("polynomial").get<std::string>());
        rec.table_polynomial = XPoly::parse(r.at("table_polynomial").get<std::string>());
        rec.writhe = r.at("writhe").get<int>();
        rec.class_z = {r.at("class_z")[0].get<long long>(), r.at("class_z")[1].get<long long>()};
        rec.class_mod2 = {r.at("class_mod2")[0].get<long long>(), r.at("class_mod2")[1].get<long long>()};
        rec.alternating = r.at("alternating").get<bool>();
        rec.projection_name = r.at("projection").get<std::string>();
        rec.projection_key = r.at("projection_key").get<std::string>();
        for (const auto& f : r.at("fingerprint"))
            rec.fingerprint.emplace_back(f[0].get<int>(), f[1].get<std::string>() == "annular");
        t.records.push_back(std::move(rec));
    }
    return t;
}

std::string emit_csv(const CensusTable& t) {
    std::ostringstream os;
    os << "name,crossings,tkc,polynomial,table_polynomial,writhe,class_u,class_v,mod2_u,mod2_v,alternating,projection\n";
    for (const auto& r : t.records) {
        os << r.name << ',' << r.diagram.n() << ",\"" << encode_tkc(r.diagram) << "\"," << r.invariant.str() << ','
           << r.table_polynomial.str() << ',' << r.writhe << ',' << r.class_z.u << ',' << r.class_z.v << ','
           << r.class_mod2.u << ',' << r.class_mod2.v << ',' << (r.alternating ? "true" : "false") << ','
           << r.projection_name << '\n';
    }
    return os.str();
}

std::string emit_latex(const CensusTable& t) {
    auto esc = [](const std::string& s) {
        std::string o;
        for (char c : s) {
            if (c == '^')
                o += "\\^{}";
            else
                o += c;
        }
        return o;
    };
    std::ostringstream os;
    os << "\\begin{longtable}{lll}\n";
    os << "knot & projection & $X(K)$ \\\\\n\\hline\n";
    for (const auto& r : t.records) {
        auto us = r.name.find('_');
        os << "$" << r.name.substr(0, us) << "_{" << r.name.substr(us + 1) << "}$ & " << r.projection_name << " & \\texttt{"
           << esc(r.invariant.str()) << "} \\\\\n";
    }
    os << "\\end{longtable}\n";
    return os.str();
}

}  // namespace tknot
