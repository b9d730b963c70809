#include "tknot/invariant.hpp"

namespace tknot {

State state_from_mask(int n, unsigned mask) {
    State s(n);
    for (int c = 0; c < n; ++c) s[c] = ((mask >> c) & 1u) ? Marker::B : Marker::A;
    return s;
}

int smoothing_partner(int slot, int over_bit, Marker m) {
    bool joins_01 = (m == Marker::A) == (over_bit == 0);
    if (joins_01) return slot ^ 1;  // (0,1), (2,3)
    return (slot % 2 == 0) ? (slot + 3) % 4 : (slot + 1) % 4;  // (1,2), (3,0)
}

Resolution resolve_state(const Diagram& d, const State& s) {
    Resolution r;
    int n = d.n();
    if (static_cast<int>(s.size()) != n) throw DiagramError("state length differs from crossing count");
    for (Marker m : s) (m == Marker::A ? r.alpha : r.beta)++;
    if (n == 0) {
        r.classes.push_back(d.proj.circle);
        r.circles.emplace_back();
        (d.proj.circle.is_zero() ? r.gamma : r.delta)++;
        return r;
    }
    std::vector<char> seen(4 * n, 0);
    for (int h0 = 0; h0 < 4 * n; ++h0) {
        if (seen[h0]) continue;
        std::vector<int> circ;
        Vec2 cls;
        int h = h0;
        while (!seen[h]) {
            seen[h] = 1;
            circ.push_back(h);
            cls += d.proj.wind[h];
            int g = d.proj.pair[h];
            seen[g] = 1;
            int c = crossing_of(g);
            h = 4 * c + smoothing_partner(slot_of(g), d.over[c], s[c]);
        }
        r.circles.push_back(std::move(circ));
        r.classes.push_back(cls);
        (cls.is_zero() ? r.gamma : r.delta)++;
    }
    return r;
}

XPoly state_sum(const Diagram& d) {
    int n = d.n();
    XPoly total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Resolution r = resolve_state(d, state_from_mask(n, mask));
        total += XPoly::monomial(1, r.delta, r.alpha - r.beta) * circle_power(r.gamma);
    }
    return total;
}

namespace {

// (-a)^k
XPoly neg_a_pow(int k) { return XPoly::monomial((k % 2 == 0) ? 1 : -1, 0, k); }

}  // namespace

XPoly kauffman_x(const Diagram& d) {
    if (d.n() == 0) return state_sum(d);
    return neg_a_pow(-3 * writhe(d)) * state_sum(d);
}

XPoly table_x(const Diagram& d) {
    if (d.n() == 0) return state_sum(d);
    return neg_a_pow(3 * writhe(d)) * state_sum(d);
}

XPoly canonical_invariant(const Diagram& d) { return canonical_mirror_rep(kauffman_x(d)); }

}  // namespace tknot

namespace tknot {

namespace {

Vec2 sign_normal(Vec2 v) { return (v.u < 0 || (v.u == 0 && v.v < 0)) ? -v : v; }

}  // namespace

GradedX graded_x(const Diagram& d) {
    GradedX g;
    int n = d.n();
    XPoly norm = n == 0 ? XPoly::constant(1) : neg_a_pow(-3 * writhe(d));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Resolution r = resolve_state(d, state_from_mask(n, mask));
        Vec2 cls;
        for (Vec2 c : r.classes)
            if (!c.is_zero()) cls = sign_normal(c);
        for (Vec2 c : r.classes)
            if (!c.is_zero() && sign_normal(c) != cls) throw DiagramError("state circles are not parallel");
        g.parts[cls] += XPoly::monomial(1, r.delta, r.alpha - r.beta) * circle_power(r.gamma);
    }
    for (auto it = g.parts.begin(); it != g.parts.end();) {
        if (it->second.is_zero()) {
            it = g.parts.erase(it);
        } else {
            it->second = norm * it->second;
            ++it;
        }
    }
    return g;
}

namespace {

bool maps_onto(const GradedX& g1, const GradedX& g2, const std::array<long long, 4>& m, bool mirror_poly) {
    for (const auto& [v, p] : g1.parts) {
        Vec2 w = sign_normal({m[0] * v.u + m[1] * v.v, m[2] * v.u + m[3] * v.v});
        auto it = g2.parts.find(w);
        if (it == g2.parts.end()) return false;
        if (!((mirror_poly ? it->second.mirror_a() : it->second) == p)) return false;
    }
    return true;
}

}  // namespace

bool graded_equivalent(const GradedX& g1, const GradedX& g2, bool allow_mirror) {
    if (g1.parts.size() != g2.parts.size()) return false;
    std::vector<Vec2> v1, v2;
    for (const auto& kv : g1.parts)
        if (!kv.first.is_zero()) v1.push_back(kv.first);
    for (const auto& kv : g2.parts)
        if (!kv.first.is_zero()) v2.push_back(kv.first);
    for (int mir = 0; mir <= (allow_mirror ? 1 : 0); ++mir) {
        if (v1.size() != v2.size()) return false;
        if (v1.size() <= 1) {
            // any primitive class can be carried to any other
            std::array<long long, 4> id{1, 0, 0, 1};
            GradedX moved = g1;
            if (v1.size() == 1) {
                moved.parts.erase(v1[0]);
                moved.parts[v2[0]] = g1.parts.at(v1[0]);
            }
            if (maps_onto(moved, g2, id, mir)) return true;
            continue;
        }
        // pick a basis-like pair in g1 and try every image pair in g2
        std::size_t i0 = 0, j0 = 1;
        long long det1 = 0;
        for (std::size_t i = 0; i < v1.size() && det1 == 0; ++i)
            for (std::size_t j = i + 1; j < v1.size() && det1 == 0; ++j) {
                det1 = v1[i].u * v1[j].v - v1[i].v * v1[j].u;
                i0 = i;
                j0 = j;
            }
        for (const Vec2& a : v2)
            for (const Vec2& b : v2) {
                for (int sa : {1, -1})
                    for (int sb : {1, -1}) {
                        Vec2 w1{a.u * sa, a.v * sa}, w2{b.u * sb, b.v * sb};
                        long long det2 = w1.u * w2.v - w1.v * w2.u;
                        if (det2 != det1 && det2 != -det1) continue;
                        // M = [w1 w2] [v1 v2]^-1
                        const Vec2 &p = v1[i0], &q = v1[j0];
                        long long n00 = w1.u * q.v - w2.u * p.v, n01 = -w1.u * q.u + w2.u * p.u;
                        long long n10 = w1.v * q.v - w2.v * p.v, n11 = -w1.v * q.u + w2.v * p.u;
                        if (n00 % det1 || n01 % det1 || n10 % det1 || n11 % det1) continue;
                        std::array<long long, 4> m{n00 / det1, n01 / det1, n10 / det1, n11 / det1};
                        long long dm = m[0] * m[3] - m[1] * m[2];
                        if (dm != 1 && dm != -1) continue;
                        if (maps_onto(g1, g2, m, mir)) return true;
                    }
            }
    }
    return false;
}

}  // namespace tknot
