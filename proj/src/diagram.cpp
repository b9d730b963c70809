#include "tknot/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

namespace tknot {

long long gcd_ll(long long a, long long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void validate_pairing(const CombinatorialMap& m) {
    if (m.n < 0) throw DiagramError("negative crossing count");
    if (static_cast<int>(m.pair.size()) != 4 * m.n) throw DiagramError("pairing size is not 4n");
    for (int h = 0; h < 4 * m.n; ++h) {
        int g = m.pair[h];
        if (g < 0 || g >= 4 * m.n) throw DiagramError("pairing target out of range");
        if (g == h) throw DiagramError("pairing has a fixed point");
        if (m.pair[g] != h) throw DiagramError("pairing is not an involution");
    }
}

std::vector<int> trace_strand(const CombinatorialMap& m) {
    std::vector<int> walk;
    if (m.n == 0) return walk;
    int h = 0;
    do {
        walk.push_back(h);
        walk.push_back(m.pair[h]);
        h = rot(m.pair[h], 2);
        if (static_cast<int>(walk.size()) > 4 * m.n) break;
    } while (h != 0);
    if (static_cast<int>(walk.size()) != 4 * m.n)
        throw MultiComponentError("straight-ahead walk closes after " + std::to_string(walk.size() / 2) +
                                  " of " + std::to_string(2 * m.n) + " edges");
    return walk;
}

std::vector<int> strand_out_darts(const CombinatorialMap& m) {
    auto walk = trace_strand(m);
    std::vector<int> out;
    out.reserve(walk.size() / 2);
    for (std::size_t i = 0; i < walk.size(); i += 2) out.push_back(walk[i]);
    return out;
}

FaceStructure trace_faces(const CombinatorialMap& m) {
    FaceStructure fs;
    fs.face_of.assign(4 * m.n, -1);
    for (int h = 0; h < 4 * m.n; ++h) {
        if (fs.face_of[h] >= 0) continue;
        std::vector<int> f;
        int x = h;
        while (fs.face_of[x] < 0) {
            fs.face_of[x] = static_cast<int>(fs.faces.size());
            f.push_back(x);
            x = rot(m.pair[x]);
        }
        fs.faces.push_back(std::move(f));
    }
    return fs;
}

namespace {

// classes of a basis of the cycle space (fundamental cycles of a BFS tree)
std::vector<Vec2> fundamental_classes(const Projection& p) {
    int n = p.n;
    std::vector<Vec2> pot(n);
    std::vector<char> seen(n, 0);
    std::vector<char> tree(4 * n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int c = queue[i];
        for (int s = 0; s < 4; ++s) {
            int h = 4 * c + s, g = p.pair[h], d = crossing_of(g);
            if (!seen[d]) {
                seen[d] = 1;
                pot[d] = pot[c] + p.wind[h];
                tree[h] = tree[g] = 1;
                queue.push_back(d);
            }
        }
    }
    std::vector<Vec2> out;
    for (int h = 0; h < 4 * n; ++h) {
        if (h > p.pair[h] || tree[h]) continue;
        out.push_back(pot[crossing_of(h)] + p.wind[h] - pot[crossing_of(p.pair[h])]);
    }
    return out;
}

bool surjective(const std::vector<Vec2>& vs) {
    long long g = 0;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g = gcd_ll(g, vs[i].u * vs[j].v - vs[i].v * vs[j].u);
    return g == 1;
}

}  // namespace

Embedding classify_embedding(const Projection& p) {
    Embedding e;
    if (p.n == 0) {
        if (p.circle.is_zero()) {
            e.reason = "local: circle bounds a disk";
        } else if (!is_primitive(p.circle)) {
            e.reason = "circle class is not primitive";
        } else {
            e.kind = EmbeddingKind::annular;
        }
        return e;
    }
    if (static_cast<int>(p.wind.size()) != 4 * p.n) {
        e.reason = "winding size mismatch";
        return e;
    }
    for (int h = 0; h < 4 * p.n; ++h)
        if (p.wind[p.pair[h]] != -p.wind[h]) {
            e.reason = "windings are not antisymmetric";
            return e;
        }
    e.faces = trace_faces(p.map());
    auto& fs = e.faces;
    for (const auto& f : fs.faces) {
        Vec2 s;
        for (int h : f) s += p.wind[h];
        fs.boundary_class.push_back(s);
    }
    int F = static_cast<int>(fs.faces.size());
    std::vector<int> nonzero;
    for (int i = 0; i < F; ++i)
        if (!fs.boundary_class[i].is_zero()) nonzero.push_back(i);
    if (F == p.n) {
        if (!nonzero.empty()) {
            e.reason = "cellular map with a face of nonzero boundary class";
        } else if (!surjective(fundamental_classes(p))) {
            e.reason = "cycle classes do not generate Z^2";
        } else {
            e.kind = EmbeddingKind::cellular;
        }
    } else if (F == p.n + 2) {
        if (nonzero.empty()) {
            e.reason = "local: all cycle classes vanish";
        } else if (nonzero.size() != 2) {
            e.reason = "planar map needs exactly two annular boundary faces";
        } else {
            Vec2 a = fs.boundary_class[nonzero[0]], b = fs.boundary_class[nonzero[1]];
            if (a != -b || !is_primitive(a)) {
                e.reason = "annular boundary classes are not +v, -v with v primitive";
            } else {
                e.kind = EmbeddingKind::annular;
                e.annular_faces = {nonzero[0], nonzero[1]};
            }
        }
    } else {
        e.reason = "face count " + std::to_string(F) + " is neither n nor n+2";
    }
    return e;
}

Vec2 cycle_class(const Projection& p, const std::vector<int>& out_darts) {
    Vec2 s;
    for (std::size_t i = 0; i < out_darts.size(); ++i) {
        int h = out_darts[i];
        if (h < 0 || h >= 4 * p.n) throw DiagramError("half-edge out of range");
        int next = out_darts[(i + 1) % out_darts.size()];
        if (crossing_of(p.pair[h]) != crossing_of(next)) throw DiagramError("walk is not closed");
        s += p.wind[h];
    }
    return s;
}

Vec2 knot_class(const Diagram& d) {
    if (d.n() == 0) return d.proj.circle;
    return cycle_class(d.proj, strand_out_darts(d.proj.map()));
}

namespace {

struct Passes {
    int out_over = -1;
    int out_under = -1;
};

std::vector<Passes> crossing_passes(const Diagram& d) {
    std::vector<Passes> ps(d.n());
    for (int h : strand_out_darts(d.proj.map())) {
        int c = crossing_of(h), s = slot_of(h);
        if (s % 2 == d.over[c])
            ps[c].out_over = s;
        else
            ps[c].out_under = s;
    }
    return ps;
}

}  // namespace

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& p : crossing_passes(d)) w += p.out_over == (p.out_under + 1) % 4 ? 1 : -1;
    return w;
}

bool is_alternating(const Diagram& d) {
    if (d.n() == 0) return false;
    auto out = strand_out_darts(d.proj.map());
    std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) {
        bool a = slot_of(out[i]) % 2 == d.over[crossing_of(out[i])];
        bool b = slot_of(out[(i + 1) % m]) % 2 == d.over[crossing_of(out[(i + 1) % m])];
        if (a == b) return false;
    }
    return true;
}

Diagram mirror(const Diagram& d) {
    Diagram r = d;
    for (auto& b : r.over) b ^= 1;
    return r;
}

Projection reflect(const Projection& p) {
    Projection r = p;
    auto f = [](int h) { return 4 * crossing_of(h) + (4 - slot_of(h)) % 4; };
    r.circle = {p.circle.u, -p.circle.v};
    for (int h = 0; h < 4 * p.n; ++h) {
        r.pair[f(h)] = f(p.pair[h]);
        r.wind[f(h)] = {p.wind[h].u, -p.wind[h].v};
    }
    return r;
}

Diagram reflect(const Diagram& d) { return {reflect(d.proj), d.over}; }

Diagram relabel(const Diagram& d, const std::vector<int>& perm, const std::vector<int>& shift) {
    Diagram r = d;
    int n = d.n();
    auto f = [&](int h) { return 4 * perm[crossing_of(h)] + (slot_of(h) + shift[crossing_of(h)]) % 4; };
    for (int h = 0; h < 4 * n; ++h) {
        r.proj.pair[f(h)] = f(d.proj.pair[h]);
        r.proj.wind[f(h)] = d.proj.wind[h];
    }
    for (int c = 0; c < n && !d.over.empty(); ++c) r.over[perm[c]] = d.over[c] ^ (shift[c] & 1);
    return r;
}

Diagram gauge_shift(const Diagram& d, const std::vector<Vec2>& potential) {
    Diagram r = d;
    for (int h = 0; h < 4 * d.n(); ++h)
        r.proj.wind[h] = d.proj.wind[h] + potential[crossing_of(d.proj.pair[h])] - potential[crossing_of(h)];
    return r;
}

Diagram rebasis(const Diagram& d, const std::array<long long, 4>& m) {
    auto apply = [&](Vec2 w) { return Vec2{m[0] * w.u + m[1] * w.v, m[2] * w.u + m[3] * w.v}; };
    Diagram r = d;
    r.proj.circle = apply(d.proj.circle);
    for (auto& w : r.proj.wind) w = apply(w);
    return r;
}

namespace {

struct KeyParts {
    std::vector<int> code;
    std::vector<int> bits;
    std::vector<int> marks;
    auto operator<=>(const KeyParts&) const = default;
};

// Minimum BFS relabeling over all root half-edges and (optionally) both
// orientations.
KeyParts min_relabeling(const Projection& p, const std::vector<int>* over, const std::vector<int>* marks,
                        bool allow_reflect, bool allow_mirror) {
    int n = p.n;
    std::optional<KeyParts> best;
    std::vector<int> label(n), entry(n), order;
    for (int root = 0; root < 4 * n; ++root) {
        for (int eps : {1, -1}) {
            if (eps == -1 && !allow_reflect) continue;
            std::fill(label.begin(), label.end(), -1);
            order.clear();
            label[crossing_of(root)] = 0;
            entry[crossing_of(root)] = slot_of(root);
            order.push_back(crossing_of(root));
            for (std::size_t i = 0; i < order.size(); ++i) {
                int c = order[i];
                for (int k = 0; k < 4; ++k) {
                    int s = ((entry[c] + eps * k) % 4 + 4) % 4;
                    int g = p.pair[4 * c + s];
                    if (label[crossing_of(g)] < 0) {
                        label[crossing_of(g)] = static_cast<int>(order.size());
                        entry[crossing_of(g)] = slot_of(g);
                        order.push_back(crossing_of(g));
                    }
                }
            }
            if (static_cast<int>(order.size()) != n) throw DiagramError("map is disconnected");
            auto nid = [&](int h) {
                int c = crossing_of(h);
                return 4 * label[c] + ((eps * (slot_of(h) - entry[c])) % 4 + 4) % 4;
            };
            KeyParts k;
            k.code.assign(4 * n, 0);
            for (int h = 0; h < 4 * n; ++h) k.code[nid(h)] = nid(p.pair[h]);
            if (over) {
                k.bits.assign(n, 0);
                for (int c = 0; c < n; ++c) k.bits[label[c]] = (*over)[c] ^ (entry[c] & 1);
            }
            if (marks) {
                for (int h : *marks) k.marks.push_back(eps == 1 ? nid(h) : nid(p.pair[h]));
                std::sort(k.marks.begin(), k.marks.end());
            }
            if (over && allow_mirror) {
                KeyParts k2 = k;
                for (auto& b : k2.bits) b ^= 1;
                if (k2 < k) k = std::move(k2);
            }
            if (!best || k < *best) best = std::move(k);
        }
    }
    return *best;
}

std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string key_impl(const Projection& p, const std::vector<int>* over, bool allow_reflect, bool allow_mirror) {
    if (p.n == 0) return p.circle.is_zero() ? "circle:local" : "circle:essential";
    Embedding e = classify_embedding(p);
    std::string kind;
    std::vector<int> marks;
    bool use_marks = false;
    if (e.kind == EmbeddingKind::cellular) {
        kind = "cell";
    } else if (e.kind == EmbeddingKind::annular) {
        kind = "ann";
        use_marks = true;
        for (int fi : e.annular_faces)
            for (int h : e.faces.faces[fi]) marks.push_back(h);
    } else if (e.reason.rfind("local", 0) == 0) {
        kind = "local";
    } else {
        throw DiagramError("canonical_key on invalid projection: " + e.reason);
    }
    KeyParts k = min_relabeling(p, over, use_marks ? &marks : nullptr, allow_reflect, allow_mirror);
    std::string s = kind + ";n=" + std::to_string(p.n) + ";pair=" + join(k.code, ',');
    if (over) {
        s += ";over=";
        for (int b : k.bits) s += static_cast<char>('0' + b);
    }
    if (use_marks) s += ";faces=" + join(k.marks, ',');
    return s;
}

}  // namespace

std::string canonical_key(const Projection& p, bool reflect_flag) {
    return key_impl(p, nullptr, reflect_flag, false);
}

std::string canonical_key(const Diagram& d, KeyFlags flags) {
    return key_impl(d.proj, &d.over, flags.reflect, flags.mirror);
}

std::string encode_tkc(const Projection& p) {
    std::ostringstream os;
    os << "tkc:v1;n=" << p.n;
    if (p.n == 0) {
        os << ";circle=(" << p.circle.u << "," << p.circle.v << ")";
        return os.str();
    }
    os << ";pair=";
    bool first = true;
    for (int h = 0; h < 4 * p.n; ++h) {
        if (h > p.pair[h]) continue;
        os << (first ? "" : ",") << h << "-" << p.pair[h];
        first = false;
    }
    os << ";wind=";
    first = true;
    for (int h = 0; h < 4 * p.n; ++h) {
        if (h > p.pair[h]) continue;
        os << (first ? "" : ",") << h << ":(" << p.wind[h].u << "," << p.wind[h].v << ")";
        first = false;
    }
    return os.str();
}

std::string encode_tkc(const Diagram& d) {
    std::string s = encode_tkc(d.proj);
    if (d.n() > 0) {
        s += ";over=";
        for (int b : d.over) s += static_cast<char>('0' + b);
    }
    return s;
}

namespace {

class TkcReader {
public:
    explicit TkcReader(std::string_view s) : s_(s) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw DiagramError("TKC parse error at position " + std::to_string(pos_) + ": " + what);
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    void expect(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
        pos_ += lit.size();
    }
    bool accept(std::string_view lit) {
        if (s_.substr(pos_, lit.size()) != lit) return false;
        pos_ += lit.size();
        return true;
    }
    long long integer() {
        long long v = 0;
        const char* b = s_.data() + pos_;
        auto [ptr, ec] = std::from_chars(b, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("expected integer");
        pos_ += static_cast<std::size_t>(ptr - b);
        return v;
    }
    Vec2 vec() {
        expect("(");
        long long u = integer();
        expect(",");
        long long v = integer();
        expect(")");
        return {u, v};
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Diagram decode_tkc(std::string_view text, bool* has_over) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    TkcReader r(text);
    r.expect("tkc:v1;n=");
    long long n = r.integer();
    if (n < 0 || n > 64) r.fail("crossing count out of range");
    Diagram d;
    d.proj.n = static_cast<int>(n);
    bool got_over = false;
    if (n == 0) {
        r.expect(";circle=");
        d.proj.circle = r.vec();
    } else {
        d.proj.pair.assign(4 * n, -1);
        d.proj.wind.assign(4 * n, Vec2{});
        r.expect(";pair=");
        do {
            long long i = r.integer();
            r.expect("-");
            long long j = r.integer();
            if (i < 0 || j < 0 || i >= 4 * n || j >= 4 * n) r.fail("half-edge out of range");
            if (d.proj.pair[i] != -1 || d.proj.pair[j] != -1) r.fail("half-edge paired twice");
            d.proj.pair[i] = static_cast<int>(j);
            d.proj.pair[j] = static_cast<int>(i);
        } while (r.accept(","));
        for (int h = 0; h < 4 * n; ++h)
            if (d.proj.pair[h] < 0) r.fail("half-edge " + std::to_string(h) + " is unpaired");
        std::vector<char> have(4 * n, 0);
        r.expect(";wind=");
        do {
            long long k = r.integer();
            r.expect(":");
            Vec2 w = r.vec();
            if (k < 0 || k >= 4 * n || k > d.proj.pair[k]) r.fail("winding key must be the smaller half-edge of an edge");
            if (have[k]) r.fail("duplicate winding key");
            have[k] = 1;
            d.proj.wind[k] = w;
            d.proj.wind[d.proj.pair[k]] = -w;
        } while (r.accept(","));
        for (int h = 0; h < 4 * n; ++h)
            if (h < d.proj.pair[h] && !have[h]) r.fail("missing winding for edge " + std::to_string(h));
        if (r.accept(";over=")) {
            got_over = true;
            for (long long c = 0; c < n; ++c) {
                char ch = r.peek();
                if (ch != '0' && ch != '1') r.fail("over bits must be 0/1, one per crossing");
                d.over.push_back(ch - '0');
                r.accept(std::string_view(&ch, 1));
            }
        }
    }
    if (!r.done()) r.fail("trailing characters");
    if (has_over) *has_over = got_over;
    validate(d.proj);
    return d;
}

void validate(const Projection& p) {
    if (p.n == 0) {
        if (!p.circle.is_zero() && !is_primitive(p.circle)) throw DiagramError("circle class is not primitive");
        return;
    }
    validate_pairing(p.map());
    trace_strand(p.map());
    Embedding e = classify_embedding(p);
    if (!e.valid() && e.reason.rfind("local", 0) != 0) throw DiagramError("invalid embedding: " + e.reason);
}

void validate(const Diagram& d) {
    validate(d.proj);
    if (static_cast<int>(d.over.size()) != d.n()) throw DiagramError("over bits do not match crossing count");
    for (int b : d.over)
        if (b != 0 && b != 1) throw DiagramError("over bit is not 0/1");
}

Diagram circle_diagram(Vec2 cls) {
    Diagram d;
    d.proj.circle = cls;
    return d;
}

}  // namespace tknot
