#include "tknot/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace tknot {

int AbstractGraph::loop_count() const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; }));
}

namespace {

std::vector<std::pair<int, int>> permuted(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) out.emplace_back(std::min(perm[a], perm[b]), std::max(perm[a], perm[b]));
    std::sort(out.begin(), out.end());
    return out;
}

bool connected(int nv, const std::vector<std::pair<int, int>>& edges) {
    if (nv == 0) return true;
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    for (int v = 1; v < nv; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

}  // namespace

AbstractGraph canonical_form(const AbstractGraph& g) {
    std::vector<int> perm(g.nv);
    std::iota(perm.begin(), perm.end(), 0);
    AbstractGraph best{g.nv, permuted(g.edges, perm)};
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto e = permuted(g.edges, perm);
        if (e < best.edges) best.edges = std::move(e);
    }
    return best;
}

std::string AbstractGraph::key() const {
    auto c = canonical_form(*this);
    std::string s = "v=" + std::to_string(c.nv) + ";e=";
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c.edges[i].first) + "-" + std::to_string(c.edges[i].second);
    }
    return s;
}

std::vector<AbstractGraph> enum_graphs(int max_vertices, int max_loops) {
    std::map<std::string, AbstractGraph> found;
    found.emplace(AbstractGraph{}.key(), AbstractGraph{});
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nv; ++i)
            for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
        std::vector<int> loops(nv, 0), deg(nv, 0);
        std::vector<std::pair<int, int>> edges;
        std::function<void(std::size_t)> fill_pairs = [&](std::size_t k) {
            if (k == pairs.size()) {
                for (int v = 0; v < nv; ++v)
                    if (deg[v] != 4) return;
                if (!connected(nv, edges)) return;
                AbstractGraph g{nv, edges};
                for (int v = 0; v < nv; ++v)
                    for (int l = 0; l < loops[v]; ++l) g.edges.emplace_back(v, v);
                g = canonical_form(g);
                found.emplace(g.key(), g);
                return;
            }
            auto [i, j] = pairs[k];
            for (int m = 0; deg[i] + m <= 4 && deg[j] + m <= 4; ++m) {
                deg[i] += m;
                deg[j] += m;
                for (int r = 0; r < m; ++r) edges.emplace_back(i, j);
                fill_pairs(k + 1);
                for (int r = 0; r < m; ++r) edges.pop_back();
                deg[i] -= m;
                deg[j] -= m;
            }
        };
        std::function<void(int, int)> fill_loops = [&](int v, int total) {
            if (v == nv) {
                fill_pairs(0);
                return;
            }
            for (int l = 0; l <= 2 && total + l <= max_loops; ++l) {
                loops[v] = l;
                deg[v] = 2 * l;
                fill_loops(v + 1, total + l);
            }
            deg[v] = 0;
            loops[v] = 0;
        };
        fill_loops(0, 0);
    }
    std::vector<AbstractGraph> out;
    for (auto& [k, g] : found) out.push_back(g);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.nv < b.nv; });
    return out;
}

bool lemma1_check(const AbstractGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto e : g.edges) {
        if (e.first == e.second) return true;
        auto k = std::minmax(e.first, e.second);
        if (!seen.insert(k).second) return true;
    }
    return g.nv == 0;
}

AbstractGraph underlying_graph(const Projection& p) {
    AbstractGraph g{p.n, {}};
    for (int h = 0; h < 4 * p.n; ++h)
        if (h < p.pair[h]) g.edges.emplace_back(crossing_of(h), crossing_of(p.pair[h]));
    return canonical_form(g);
}

char graph_type(const AbstractGraph& g) {
    using E = std::vector<std::pair<int, int>>;
    static const std::map<std::string, char> table = [] {
        std::vector<std::pair<char, AbstractGraph>> reps = {
            {'a', {0, E{}}},
            {'b', {1, E{{0, 0}, {0, 0}}}},
            {'c', {2, E{{0, 0}, {0, 1}, {0, 1}, {1, 1}}}},
            {'d', {2, E{{0, 1}, {0, 1}, {0, 1}, {0, 1}}}},
            {'e', {3, E{{0, 0}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 2}}}},
            {'f', {3, E{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 2}, {2, 2}}}},
            {'g', {3, E{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}}},
            {'h', {4, E{{0, 0}, {0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 3}}}},
            {'i', {4, E{{0, 1}, {0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}, {2, 2}, {3, 3}}}},
            {'j', {4, E{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {2, 3}, {3, 1}, {2, 2}, {3, 3}}}},
            {'k', {4, E{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {2, 1}, {2, 3}, {2, 3}, {3, 3}}}},
            {'l', {4, E{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 3}, {3, 2}, {3, 3}}}},
            {'m', {4, E{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}, {3, 0}, {3, 0}}}},
            {'n', {4, E{{0, 1}, {0, 1}, {0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 3}}}},
            {'o', {4, E{{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}}},
        };
        std::map<std::string, char> t;
        for (auto& [c, g] : reps) t.emplace(g.key(), c);
        return t;
    }();
    auto it = table.find(g.key());
    return it == table.end() ? '?' : it->second;
}

std::optional<std::vector<Vec2>> winding_solve(const CombinatorialMap& m, const FaceStructure& fs,
                                               const WindingMode& mode) {
    int n = m.n;
    int F = static_cast<int>(fs.faces.size());
    std::vector<Vec2> target(F);
    if (mode.cellular) {
        if (F != n) return std::nullopt;
    } else {
        if (F != n + 2 || mode.plus_face == mode.minus_face || mode.plus_face < 0 || mode.minus_face < 0 ||
            mode.plus_face >= F || mode.minus_face >= F)
            return std::nullopt;
        target[mode.plus_face] = {0, 1};
        target[mode.minus_face] = {0, -1};
    }
    // spanning tree on crossings
    std::vector<char> in_tree(4 * n, 0), seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            int h = 4 * c + s, g = m.pair[h];
            if (!seen[crossing_of(g)]) {
                seen[crossing_of(g)] = 1;
                in_tree[h] = in_tree[g] = 1;
                stack.push_back(crossing_of(g));
            }
        }
    }
    // dual spanning tree on faces through non-tree edges
    std::vector<int> parent_edge(F, -1), order{0};
    std::vector<char> fseen(F, 0), in_dual(4 * n, 0);
    fseen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int h : fs.faces[order[i]]) {
            if (in_tree[h]) continue;
            int g = m.pair[h], f2 = fs.face_of[g];
            if (!fseen[f2]) {
                fseen[f2] = 1;
                parent_edge[f2] = std::min(h, g);
                in_dual[h] = in_dual[g] = 1;
                order.push_back(f2);
            }
        }
    }
    std::vector<Vec2> wind(4 * n);
    std::vector<int> leftover;
    for (int h = 0; h < 4 * n; ++h)
        if (h < m.pair[h] && !in_tree[h] && !in_dual[h]) leftover.push_back(h);
    if (mode.cellular) {
        if (leftover.size() != 2) return std::nullopt;
        wind[leftover[0]] = {1, 0};
        wind[m.pair[leftover[0]]] = {-1, 0};
        wind[leftover[1]] = {0, 1};
        wind[m.pair[leftover[1]]] = {0, -1};
    } else if (!leftover.empty()) {
        return std::nullopt;
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int f = *it;
        if (parent_edge[f] < 0) continue;
        int e = parent_edge[f];
        Vec2 s;
        int coef = 0;
        for (int h : fs.faces[f]) {
            if (std::min(h, m.pair[h]) == e)
                coef += h == e ? 1 : -1;
            else
                s += wind[h];
        }
        if (coef != 1 && coef != -1) return std::nullopt;
        Vec2 need = target[f] - s;
        Vec2 w = coef == 1 ? need : -need;
        wind[e] = w;
        wind[m.pair[e]] = -w;
    }
    for (int f = 0; f < F; ++f) {
        Vec2 s;
        for (int h : fs.faces[f]) s += wind[h];
        if (s != target[f]) return std::nullopt;
    }
    return wind;
}

namespace {

void chord_diagrams(std::vector<int>& rem, std::vector<std::pair<int, int>>& cur,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (rem.empty()) {
        out.push_back(cur);
        return;
    }
    int a = rem[0];
    for (std::size_t i = 1; i < rem.size(); ++i) {
        int b = rem[i];
        std::vector<int> rest;
        for (std::size_t k = 1; k < rem.size(); ++k)
            if (k != i) rest.push_back(rem[k]);
        cur.emplace_back(a, b);
        chord_diagrams(rest, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Projection> enum_shadows(int n) {
    std::vector<Projection> out;
    if (n == 0) {
        Projection p;
        p.circle = {0, 1};
        out.push_back(p);
        return out;
    }
    std::vector<int> rem(2 * n);
    std::iota(rem.begin(), rem.end(), 0);
    std::vector<std::pair<int, int>> cur;
    std::vector<std::vector<std::pair<int, int>>> chords;
    chord_diagrams(rem, cur, chords);
    for (const auto& cd : chords) {
        // chords come sorted by first position; chord index = crossing id
        std::vector<std::pair<int, int>> seq(2 * n);
        for (int c = 0; c < n; ++c) {
            seq[cd[c].first] = {c, 0};
            seq[cd[c].second] = {c, 1};
        }
        for (int bits = 0; bits < (1 << n); ++bits) {
            std::vector<int> ins, outs;
            for (auto [c, k] : seq) {
                int i, o;
                if (k == 0) {
                    i = 0;
                    o = 2;
                } else if (((bits >> c) & 1) == 0) {
                    i = 1;
                    o = 3;
                } else {
                    i = 3;
                    o = 1;
                }
                ins.push_back(4 * c + i);
                outs.push_back(4 * c + o);
            }
            Projection p;
            p.n = n;
            p.pair.assign(4 * n, -1);
            for (int k = 0; k < 2 * n; ++k) {
                int a = outs[k], b = ins[(k + 1) % (2 * n)];
                p.pair[a] = b;
                p.pair[b] = a;
            }
            FaceStructure fs = trace_faces(p.map());
            int F = static_cast<int>(fs.faces.size());
            if (F == n) {
                if (auto w = winding_solve(p.map(), fs, {true, -1, -1})) {
                    p.wind = *w;
                    out.push_back(p);
                }
            } else if (F == n + 2) {
                for (int a = 0; a < F; ++a)
                    for (int b = a + 1; b < F; ++b)
                        if (auto w = winding_solve(p.map(), fs, {false, a, b})) {
                            Projection q = p;
                            q.wind = *w;
                            out.push_back(q);
                        }
            }
        }
    }
    return out;
}

bool has_trivial_loop(const Projection& p) {
    for (int h = 0; h < 4 * p.n; ++h)
        if (crossing_of(p.pair[h]) == crossing_of(h) && p.wind[h].is_zero()) return true;
    return false;
}

bool is_composite(const Projection& p) {
    if (p.n == 0) return false;
    auto seq = strand_out_darts(p.map());
    int m = static_cast<int>(seq.size());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            // strand arc from a cut in edge i to a cut in edge j
            std::vector<int> passes;
            int len = i == j ? m : ((j - i) % m + m) % m;
            for (int t = 0; t < len; ++t) passes.push_back((i + 1 + t) % m);
            std::map<int, int> cnt;
            for (int q : passes) ++cnt[crossing_of(seq[q])];
            if (cnt.empty()) continue;
            bool all_twice = std::all_of(cnt.begin(), cnt.end(), [](auto kv) { return kv.second == 2; });
            if (!all_twice) continue;
            std::vector<int> internal;
            for (std::size_t t = 0; t + 1 < passes.size(); ++t) internal.push_back(seq[passes[t]]);
            int d_in = p.pair[seq[i]];
            int d_out = seq[j];
            // the sub-diagram must carry zero homology
            std::map<int, Vec2> pot;
            std::map<int, std::vector<std::pair<int, Vec2>>> adj;
            for (int h : internal) {
                int g = p.pair[h];
                adj[crossing_of(h)].emplace_back(crossing_of(g), p.wind[h]);
                adj[crossing_of(g)].emplace_back(crossing_of(h), -p.wind[h]);
            }
            int start = cnt.begin()->first;
            pot[start] = {};
            std::vector<int> st{start};
            bool ok = true;
            while (!st.empty() && ok) {
                int c = st.back();
                st.pop_back();
                for (auto [d, w] : adj[c]) {
                    Vec2 q = pot[c] + w;
                    auto it = pot.find(d);
                    if (it == pot.end()) {
                        pot[d] = q;
                        st.push_back(d);
                    } else if (it->second != q) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok || pot.size() != cnt.size()) continue;
            // planar with both dangling ends in one face
            std::set<int> intset;
            for (int h : internal) {
                intset.insert(h);
                intset.insert(p.pair[h]);
            }
            auto pr = [&](int h) { return intset.count(h) ? p.pair[h] : h; };
            std::map<int, int> face_of;
            int nf = 0;
            for (auto [c, k] : cnt) {
                for (int s = 0; s < 4; ++s) {
                    int h = 4 * c + s;
                    if (face_of.count(h)) continue;
                    ++nf;
                    int x = h;
                    while (!face_of.count(x)) {
                        face_of[x] = nf;
                        x = rot(pr(x));
                    }
                }
            }
            int V = static_cast<int>(cnt.size()) + 2;
            int E = static_cast<int>(internal.size()) + 2;
            if (V - E + nf != 2) continue;
            if (face_of[d_in] != face_of[d_out]) continue;
            return true;
        }
    }
    return false;
}

bool is_prime(const Projection& p) {
    if (p.n == 0) return !p.circle.is_zero();
    Embedding e = classify_embedding(p);
    if (!e.valid()) return false;
    return !has_trivial_loop(p) && !is_composite(p);
}

Fingerprint fingerprint(const Projection& p) {
    Fingerprint f;
    if (p.n == 0) {
        f.emplace_back(0, true);
        return f;
    }
    Embedding e = classify_embedding(p);
    int annular_sum = 0;
    for (std::size_t i = 0; i < e.faces.faces.size(); ++i) {
        int deg = static_cast<int>(e.faces.faces[i].size());
        bool ann = e.kind == EmbeddingKind::annular &&
                   (static_cast<int>(i) == e.annular_faces[0] || static_cast<int>(i) == e.annular_faces[1]);
        if (ann)
            annular_sum += deg;
        else
            f.emplace_back(deg, false);
    }
    if (e.kind == EmbeddingKind::annular) f.emplace_back(annular_sum, true);
    std::sort(f.begin(), f.end());
    return f;
}

std::vector<int> fingerprint_degrees(const Fingerprint& f) {
    std::vector<int> d;
    for (auto [deg, ann] : f) d.push_back(deg);
    std::sort(d.begin(), d.end());
    return d;
}

std::string to_string(const Fingerprint& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i].first) + (f[i].second ? "A" : "");
    }
    return s + "}";
}

std::vector<ProjectionRecord> dedupe_projections(const std::vector<Projection>& shadows) {
    std::map<std::pair<int, std::string>, ProjectionRecord> by_key;
    for (const auto& p : shadows) {
        std::string k = canonical_key(p, true);
        auto key = std::make_pair(p.n, k);
        if (by_key.count(key)) continue;
        ProjectionRecord r;
        r.proj = p;
        r.key = k;
        r.graph = underlying_graph(p);
        r.type = graph_type(r.graph);
        r.fp = fingerprint(p);
        r.prime = is_prime(p);
        by_key.emplace(key, std::move(r));
    }
    std::vector<ProjectionRecord> out;
    std::map<int, int> counter;
    for (auto& [k, r] : by_key) {
        r.name = std::to_string(r.proj.n) + "_" + std::to_string(++counter[r.proj.n]);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ProjectionRecord> prime_projections(int n) {
    std::vector<Projection> prime;
    for (auto& p : enum_shadows(n))
        if (is_prime(p)) prime.push_back(std::move(p));
    return dedupe_projections(prime);
}

std::vector<ProjectionRecord> prime_projections_upto(int max_n) {
    std::vector<ProjectionRecord> out;
    for (int n = 0; n <= max_n; ++n)
        for (auto& r : prime_projections(n)) out.push_back(std::move(r));
    return out;
}

}  // namespace tknot
