#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "tknot/diagram.hpp"

using namespace tknot;

namespace {

const char* kOneOne = "tkc:v1;n=1;pair=0-1,2-3;wind=0:(0,1),2:(0,-1);over=0";

}  // namespace

TEST_CASE("straight-ahead strand") {
    CombinatorialMap kink{1, {1, 0, 3, 2}};
    auto s = trace_strand(kink);
    CHECK(s.size() == 4);
    CombinatorialMap opposite{1, {2, 3, 0, 1}};
    CHECK_THROWS(trace_strand(opposite));
    CHECK_THROWS_AS(trace_strand(opposite), MultiComponentError);
}

TEST_CASE("face orbits") {
    auto deg = [](const FaceStructure& fs) {
        std::vector<std::size_t> d;
        for (const auto& f : fs.faces) d.push_back(f.size());
        std::sort(d.begin(), d.end());
        return d;
    };
    auto a = trace_faces(CombinatorialMap{1, {1, 0, 3, 2}});
    auto b = trace_faces(CombinatorialMap{1, {3, 2, 1, 0}});
    CHECK(deg(a) == std::vector<std::size_t>{1, 1, 2});
    CHECK(deg(b) == std::vector<std::size_t>{1, 1, 2});
    CHECK(a.faces != b.faces);
    for (const auto& p : testsupport::shadow_pool()) {
        auto fs = trace_faces(p.map());
        std::size_t total = 0;
        for (const auto& f : fs.faces) total += f.size();
        CHECK(total == 4u * p.n);
        CHECK((fs.faces.size() == std::size_t(p.n) || fs.faces.size() == std::size_t(p.n) + 2));
    }
}

TEST_CASE("embedding classification") {
    Diagram d = decode_tkc(kOneOne);
    CHECK(classify_embedding(d.proj).kind == EmbeddingKind::annular);

    Projection local = d.proj;
    for (auto& w : local.wind) w = {0, 0};
    auto e = classify_embedding(local);
    CHECK(e.kind == EmbeddingKind::invalid);
    CHECK(e.reason.rfind("local", 0) == 0);

    Projection bad = d.proj;
    bad.wind[0] = {0, 1};
    bad.wind[1] = {0, -1};
    bad.wind[2] = {0, 1};
    bad.wind[3] = {0, -1};
    CHECK(classify_embedding(bad).kind == EmbeddingKind::invalid);

    int cellular2 = 0;
    for (const auto& p : testsupport::shadow_pool()) {
        auto k = classify_embedding(p);
        CHECK(k.valid());
        if (p.n == 2 && k.kind == EmbeddingKind::cellular) ++cellular2;
    }
    CHECK(cellular2 > 0);
}

TEST_CASE("cycle classes") {
    Diagram d = decode_tkc(kOneOne);
    CHECK(cycle_class(d.proj, {}) == Vec2{0, 0});
    Vec2 k = knot_class(d);
    CHECK((k == Vec2{0, 2} || k == Vec2{0, -2}));
    CHECK(mod2(k) == Vec2{0, 0});
    CHECK(knot_class(circle_diagram({0, 1})) == Vec2{0, 1});
    CHECK(knot_class(circle_diagram({0, 0})) == Vec2{0, 0});
    for (const auto& p : testsupport::shadow_pool()) {
        if (p.n != 2) continue;
        for (int h = 0; h < 8; ++h)
            if (crossing_of(p.pair[h]) != crossing_of(h)) CHECK_THROWS(cycle_class(p, {h}));
        break;
    }
    for (const auto& p : testsupport::shadow_pool()) {
        auto e = classify_embedding(p);
        auto fs = trace_faces(p.map());
        std::vector<char> annular(fs.faces.size(), 0);
        for (int f : e.annular_faces)
            if (f >= 0) annular[f] = 1;
        for (std::size_t f = 0; f < fs.faces.size(); ++f) {
            if (annular[f]) continue;
            Vec2 s{0, 0};
            for (int h : fs.faces[f]) s += p.wind[h];
            CHECK(s == Vec2{0, 0});
        }
    }
}

TEST_CASE("writhe and alternation") {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        CHECK(writhe(mirror(d)) == -writhe(d));
        CHECK(mirror(mirror(d)) == d);
    }
    Diagram d = decode_tkc(kOneOne);
    CHECK(std::abs(writhe(d)) == 1);
    CHECK(is_alternating(d));
}

TEST_CASE("R2-cancelling pair on a two-crossing shadow has writhe zero") {
    int seen = 0;
    for (const auto& p : testsupport::shadow_pool()) {
        if (p.n != 2) continue;
        Embedding e = classify_embedding(p);
        for (std::size_t f = 0; f < e.faces.faces.size(); ++f) {
            const auto& face = e.faces.faces[f];
            if (face.size() != 2 || crossing_of(face[0]) == crossing_of(face[1])) continue;
            if (std::find(e.annular_faces.begin(), e.annular_faces.end(), int(f)) != e.annular_faces.end()) continue;
            for (int b = 0; b < 4; ++b) {
                Diagram d{p, {b & 1, b >> 1}};
                int h = face[0];
                bool over_h = slot_of(h) % 2 == d.over[crossing_of(h)];
                int g = p.pair[h];
                bool over_g = slot_of(g) % 2 == d.over[crossing_of(g)];
                if (over_h == over_g) {
                    CHECK(writhe(d) == 0);
                    ++seen;
                }
            }
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("reflection and mirror") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        Diagram r = reflect(d);
        CHECK_NOTHROW(validate(r));
        CHECK(canonical_key(reflect(r), {false, false}) == canonical_key(d, {false, false}));
        CHECK(canonical_key(r, {true, false}) == canonical_key(d, {true, false}));
        CHECK(canonical_key(mirror(d), {true, true}) == canonical_key(d, {true, true}));
    }
}

TEST_CASE("gauge and basis changes") {
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        Vec2 k = knot_class(d);
        Diagram g = gauge_shift(d, testsupport::random_potential(d.n(), rng));
        CHECK_NOTHROW(validate(g));
        CHECK(knot_class(g) == k);
        Diagram b = rebasis(d, {2, 1, 1, 1});
        CHECK_NOTHROW(validate(b));
        CHECK(knot_class(b) == Vec2{2 * k.u + k.v, k.u + k.v});
    }
}

TEST_CASE("canonical key") {
    std::mt19937 rng(9);
    for (int i = 0; i < 300; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        Diagram r = relabel(d, testsupport::random_perm(d.n(), rng), testsupport::random_shift(d.n(), rng));
        CHECK_NOTHROW(validate(r));
        CHECK(canonical_key(r, {false, false}) == canonical_key(d, {false, false}));
        CHECK(canonical_key(r.proj, false) == canonical_key(d.proj, false));
    }
    std::set<std::string> prime_keys, kink_keys;
    for (const auto& p : testsupport::shadow_pool())
        if (p.n == 1) (is_prime(p) ? prime_keys : kink_keys).insert(canonical_key(p));
    CHECK(prime_keys.size() == 1);
    CHECK_FALSE(kink_keys.empty());
    for (const auto& k : kink_keys) CHECK(prime_keys.count(k) == 0);
}

TEST_CASE("TKC codec") {
    Diagram z = decode_tkc("tkc:v1;n=0;circle=(0,1)");
    CHECK(z.n() == 0);
    CHECK(z.proj.circle == Vec2{0, 1});
    CHECK(encode_tkc(z) == "tkc:v1;n=0;circle=(0,1)");
    bool has_over = false;
    Diagram d = decode_tkc(kOneOne, &has_over);
    CHECK(has_over);
    CHECK(encode_tkc(d) == kOneOne);
    decode_tkc("tkc:v1;n=1;pair=0-1,2-3;wind=0:(0,1),2:(0,-1)", &has_over);
    CHECK_FALSE(has_over);
    CHECK_THROWS(decode_tkc("tkc:v1;n=1;pair=0-2,1-3;wind=0:(1,0),1:(0,1);over=0"));
    CHECK_THROWS(decode_tkc("tkc:v2;n=0;circle=(0,1)"));
    CHECK_THROWS(decode_tkc("tkc:v1;n=1;pair=0-1,2-3;wind=0:(0,1),2:(0,1);over=0"));
    CHECK_THROWS(decode_tkc("tkc:v1;n=0;circle=(2,0)"));
    std::mt19937 rng(13);
    for (int i = 0; i < 300; ++i) {
        Diagram x = testsupport::random_diagram(rng);
        CHECK(decode_tkc(encode_tkc(x)) == x);
    }
}
