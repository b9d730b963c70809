#include "tknot/moves.hpp"

#include <algorithm>
#include <deque>
#include <tuple>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tknot {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::R1down: return "R1down";
        case MoveKind::R2down: return "R2down";
        case MoveKind::R3: return "R3";
        case MoveKind::R2up: return "R2up";
    }
    return "?";
}

namespace {

bool is_over(const Diagram& d, int h) { return slot_of(h) % 2 == d.over[crossing_of(h)]; }

bool is_local(const Embedding& e) { return !e.valid() && e.reason.rfind("local", 0) == 0; }

// x with a*x.v - b... : some t with det(v, t) = 1
Vec2 complement(Vec2 v) {
    // extended Euclid on (v.u, v.v): find x, y with v.u*y - v.v*x = 1
    long long old_r = v.u, r = v.v, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    // old_s*v.u + old_t*v.v = old_r = +-1
    long long sign = old_r < 0 ? -1 : 1;
    return {-old_t * sign, old_s * sign};
}

}  // namespace

std::vector<char> disk_faces(const Diagram& d, const Embedding& e) {
    if (!e.valid() && !is_local(e)) throw MoveError("moves need a valid diagram: " + e.reason);
    std::vector<char> disk(e.faces.faces.size(), 1);
    if (e.kind == EmbeddingKind::annular)
        for (int f : e.annular_faces)
            if (f >= 0) disk[f] = 0;
    (void)d;
    return disk;
}

std::vector<MoveSite> find_moves(const Diagram& d, bool include_r2up) {
    std::vector<MoveSite> out;
    if (d.n() == 0) return out;
    Embedding e = classify_embedding(d.proj);
    auto disk = disk_faces(d, e);
    const auto& faces = e.faces.faces;
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        if (!disk[fi]) continue;
        const auto& f = faces[fi];
        if (f.size() == 1) {
            out.push_back({MoveKind::R1down, {f[0]}, 0, 0});
        } else if (f.size() == 2) {
            int h1 = f[0], h2 = f[1];
            if (crossing_of(h1) == crossing_of(h2)) continue;
            if (is_over(d, h1) == is_over(d, d.proj.pair[h1])) out.push_back({MoveKind::R2down, {h1, h2}, 0, 0});
        } else if (f.size() == 3) {
            std::set<int> cs{crossing_of(f[0]), crossing_of(f[1]), crossing_of(f[2])};
            if (cs.size() != 3) continue;
            bool ok = false;
            for (int t : f) ok = ok || (is_over(d, t) && is_over(d, d.proj.pair[t]));
            if (ok) out.push_back({MoveKind::R3, {f[0], f[1], f[2]}, 0, 0});
        }
    }
    if (include_r2up) {
        auto up = find_r2up(d);
        out.insert(out.end(), up.begin(), up.end());
    }
    return out;
}

std::vector<MoveSite> find_r2up(const Diagram& d) {
    std::vector<MoveSite> out;
    if (d.n() == 0) return out;
    Embedding e = classify_embedding(d.proj);
    auto disk = disk_faces(d, e);
    const auto& faces = e.faces.faces;
    const auto& pair = d.proj.pair;
    auto same_edge = [&](int a, int b) { return a == b || pair[a] == b; };
    for (std::size_t fi = 0; fi < faces.size(); ++fi) {
        const auto& f = faces[fi];
        int variants = disk[fi] ? 1 : 2;
        for (int a : f)
            for (int b : f) {
                if (same_edge(a, b)) continue;
                for (int v = 0; v < variants; ++v)
                    for (int o = 0; o < 2; ++o) out.push_back({MoveKind::R2up, {a, b}, o, v});
            }
    }
    if (e.kind == EmbeddingKind::annular) {
        const auto& fp = faces[e.annular_faces[0]];
        const auto& fm = faces[e.annular_faces[1]];
        for (int a : fp)
            for (int b : fm) {
                if (same_edge(a, b)) continue;
                for (int o = 0; o < 2; ++o) {
                    out.push_back({MoveKind::R2up, {a, b}, o, 2});
                    out.push_back({MoveKind::R2up, {b, a}, o, 2});
                }
            }
    }
    return out;
}

Diagram remove_crossings(const Diagram& d, const std::vector<int>& crossings) {
    int n = d.n();
    std::vector<char> keep(n, 1);
    for (int c : crossings) {
        if (c < 0 || c >= n) throw MoveError("crossing out of range");
        keep[c] = 0;
    }
    std::vector<int> newid(n, -1);
    int m = 0;
    for (int c = 0; c < n; ++c)
        if (keep[c]) newid[c] = m++;
    if (m == 0) return circle_diagram(knot_class(d));
    Diagram r;
    r.proj.n = m;
    r.proj.pair.assign(4 * m, -1);
    r.proj.wind.assign(4 * m, Vec2{});
    r.over.assign(m, 0);
    const auto& pair = d.proj.pair;
    const auto& wind = d.proj.wind;
    auto nid = [&](int h) { return 4 * newid[crossing_of(h)] + slot_of(h); };
    for (int c = 0; c < n; ++c) {
        if (!keep[c]) continue;
        r.over[newid[c]] = d.over[c];
        for (int s = 0; s < 4; ++s) {
            int h = 4 * c + s;
            if (r.proj.pair[nid(h)] >= 0) continue;
            int g = pair[h];
            Vec2 w = wind[h];
            int guard = 0;
            while (!keep[crossing_of(g)]) {
                int g2 = rot(g, 2);
                w += wind[g2];
                g = pair[g2];
                if (++guard > 4 * n) throw MoveError("pass-through chain does not terminate");
            }
            r.proj.pair[nid(h)] = nid(g);
            r.proj.pair[nid(g)] = nid(h);
            r.proj.wind[nid(h)] = w;
            r.proj.wind[nid(g)] = -w;
        }
    }
    return r;
}

namespace {

Diagram apply_r3(const Diagram& d, const std::vector<int>& t) {
    Diagram r = d;
    auto& pair = r.proj.pair;
    auto& wind = r.proj.wind;
    const auto& opair = d.proj.pair;
    const auto& owind = d.proj.wind;
    // segment k runs F_k --(fo_k -> si_k)--> S_k
    std::unordered_map<int, int> phi;
    std::unordered_map<int, Vec2> off;
    int in[3], so[3];
    for (int k = 0; k < 3; ++k) {
        int fo = t[k], si = opair[t[k]];
        in[k] = rot(fo, 2);
        so[k] = rot(si, 2);
        Vec2 w2 = owind[fo];
        phi[in[k]] = si;
        off[in[k]] = -w2;
        phi[so[k]] = fo;
        off[so[k]] = w2;
    }
    auto f = [&](int h) { auto it = phi.find(h); return it == phi.end() ? h : it->second; };
    auto o = [&](int h) { auto it = off.find(h); return it == off.end() ? Vec2{} : it->second; };
    std::set<int> done;
    std::vector<std::tuple<int, int, Vec2>> edges;
    for (auto [x, unused] : phi) {
        (void)unused;
        if (done.count(x)) continue;
        int y = opair[x];
        done.insert(x);
        done.insert(y);
        edges.emplace_back(f(x), f(y), o(x) + owind[x] - o(y));
    }
    for (int k = 0; k < 3; ++k) edges.emplace_back(so[k], in[k], -owind[t[k]]);
    for (auto& [a, b, w] : edges) {
        pair[a] = b;
        pair[b] = a;
        wind[a] = w;
        wind[b] = -w;
    }
    return r;
}

Diagram apply_r2up(const Diagram& d, const MoveSite& site) {
    int n = d.n();
    int a = site.darts.at(0), b = site.darts.at(1);
    const auto& opair = d.proj.pair;
    const auto& owind = d.proj.wind;
    if (a == b || opair[a] == b) throw MoveError("R2up needs two different edges");
    Embedding e = classify_embedding(d.proj);
    const auto& fs = e.faces;
    int fa = fs.face_of[a], fb = fs.face_of[b];
    Vec2 x1, y1;
    Vec2 wa = owind[a], wb = owind[b];
    if (site.variant == 2) {
        if (e.kind != EmbeddingKind::annular || fa == fb) throw MoveError("cross-annulus R2up needs both annular faces");
        bool ok = (fa == e.annular_faces[0] && fb == e.annular_faces[1]) ||
                  (fa == e.annular_faces[1] && fb == e.annular_faces[0]);
        if (!ok) throw MoveError("cross-annulus R2up needs both annular faces");
        x1 = complement(fs.boundary_class[fa]);
    } else {
        if (fa != fb) throw MoveError("R2up darts must share a face");
        const auto& f = fs.faces[fa];
        auto ia = std::find(f.begin(), f.end(), a) - f.begin();
        Vec2 P;
        for (auto i = (ia + 1) % static_cast<long>(f.size()); f[i] != b; i = (i + 1) % static_cast<long>(f.size()))
            P += owind[f[i]];
        y1 = -wa - P;
        if (site.variant == 1) y1 += fs.boundary_class[fa];
    }
    Diagram r = d;
    r.proj.n = n + 2;
    r.proj.pair.resize(4 * (n + 2));
    r.proj.wind.resize(4 * (n + 2));
    r.over.push_back(site.over);
    r.over.push_back(site.over);
    int p = 4 * n, q = 4 * (n + 1);
    int a2 = opair[a], b2 = opair[b];
    auto link = [&](int u, int v, Vec2 w) {
        r.proj.pair[u] = v;
        r.proj.pair[v] = u;
        r.proj.wind[u] = w;
        r.proj.wind[v] = -w;
    };
    link(a, p + 0, x1);
    link(p + 2, q + 0, {});
    link(q + 2, a2, wa - x1);
    link(b, q + 1, y1);
    link(q + 3, p + 3, {});
    link(p + 1, b2, wb - y1);
    return r;
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSite& site) {
    auto check_face = [&](std::size_t size) {
        if (site.darts.size() != size) throw MoveError("site has the wrong number of darts");
        Embedding e = classify_embedding(d.proj);
        auto disk = disk_faces(d, e);
        int f = e.faces.face_of.at(site.darts[0]);
        if (!disk[f] || e.faces.faces[f].size() != size) throw MoveError("site is not a disk face of the right size");
        for (int h : site.darts)
            if (e.faces.face_of.at(h) != f) throw MoveError("site darts are not one face");
    };
    switch (site.kind) {
        case MoveKind::R1down:
            check_face(1);
            return remove_crossings(d, {crossing_of(site.darts[0])});
        case MoveKind::R2down: {
            check_face(2);
            int h1 = site.darts[0], h2 = site.darts[1];
            if (crossing_of(h1) == crossing_of(h2) || is_over(d, h1) != is_over(d, d.proj.pair[h1]))
                throw MoveError("bigon is not a cancelling pair");
            return remove_crossings(d, {crossing_of(h1), crossing_of(h2)});
        }
        case MoveKind::R3: {
            check_face(3);
            bool ok = false;
            for (int t : site.darts) ok = ok || (is_over(d, t) && is_over(d, d.proj.pair[t]));
            std::set<int> cs;
            for (int t : site.darts) cs.insert(crossing_of(t));
            if (!ok || cs.size() != 3) throw MoveError("triangle does not admit the third move");
            return apply_r3(d, site.darts);
        }
        case MoveKind::R2up:
            return apply_r2up(d, site);
    }
    throw MoveError("unknown move");
}

Diagram simplify(const Diagram& d) {
    Diagram cur = d;
    while (true) {
        auto moves = find_moves(cur);
        auto it = std::find_if(moves.begin(), moves.end(),
                               [](const MoveSite& s) { return s.kind == MoveKind::R1down || s.kind == MoveKind::R2down; });
        if (it == moves.end()) return cur;
        cur = apply_move(cur, *it);
    }
}

namespace {

template <class Stop>
SearchResult bfs(const Diagram& start, int max_crossings, std::size_t max_steps, Stop stop, std::optional<Diagram>* hit) {
    SearchResult res;
    std::unordered_set<std::string> seen;
    std::deque<std::pair<Diagram, int>> queue;
    KeyFlags flags{true, true};
    seen.insert(canonical_key(start, flags));
    queue.emplace_back(start, 0);
    while (!queue.empty()) {
        auto [cur, dcur] = std::move(queue.front());
        queue.pop_front();
        ++res.visited;
        if (stop(cur)) {
            res.status = SearchStatus::equivalent;
            res.depth = dcur;
            if (hit) *hit = cur;
            return res;
        }
        if (res.visited >= max_steps) {
            res.status = SearchStatus::cap_exceeded;
            return res;
        }
        for (const auto& s : find_moves(cur, cur.n() + 2 <= max_crossings)) {
            Diagram nx = apply_move(cur, s);
            if (nx.n() > max_crossings) continue;
            if (seen.insert(canonical_key(nx, flags)).second) queue.emplace_back(std::move(nx), dcur + 1);
        }
    }
    res.status = SearchStatus::not_found;
    return res;
}

}  // namespace

SearchResult equivalence_search(const Diagram& d1, const Diagram& d2, int max_crossings, std::size_t max_steps) {
    std::string target = canonical_key(d2, {true, true});
    return bfs(d1, max_crossings, max_steps,
               [&](const Diagram& d) { return canonical_key(d, {true, true}) == target; }, nullptr);
}

ReductionResult reduction_search(const Diagram& d, int max_crossings, std::size_t max_steps) {
    ReductionResult out;
    int n0 = d.n();
    auto res = bfs(d, max_crossings, max_steps, [&](const Diagram& x) { return x.n() < n0; }, &out.smaller);
    out.visited = res.visited;
    out.reduced = res.status == SearchStatus::equivalent;
    out.capped = res.status == SearchStatus::cap_exceeded;
    return out;
}

}  // namespace tknot
