#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tknot/invariant.hpp"
#include "tknot/moves.hpp"

using namespace tknot;

namespace {

Diagram kinked_unknot() { return decode_tkc("tkc:v1;n=1;pair=0-1,2-3;wind=0:(0,0),2:(0,0);over=0"); }

int count_kind(const std::vector<MoveSite>& sites, MoveKind k) {
    int c = 0;
    for (const auto& s : sites) c += s.kind == k;
    return c;
}

}  // namespace

TEST_CASE("R1 on a kinked essential circle") {
    int seen = 0;
    for (const auto& p : testsupport::shadow_pool()) {
        if (p.n != 1 || !has_trivial_loop(p)) continue;
        Diagram d{p, {1}};
        for (const auto& s : find_moves(d)) {
            if (s.kind != MoveKind::R1down) continue;
            Diagram e = apply_move(d, s);
            CHECK(e.n() == 0);
            CHECK(kauffman_x(e) == XPoly::x());
            CHECK(kauffman_x(d) == XPoly::x());
            ++seen;
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("R1 on the kinked unknot") {
    Diagram d = kinked_unknot();
    auto sites = find_moves(d);
    CHECK(count_kind(sites, MoveKind::R1down) >= 1);
    for (const auto& s : sites) {
        if (s.kind != MoveKind::R1down) continue;
        Diagram e = apply_move(d, s);
        CHECK(e.n() == 0);
        CHECK(kauffman_x(e) == XPoly::parse("-a^2-a^-2"));
        CHECK(kauffman_x(d) == kauffman_x(e));
    }
    Diagram u = circle_diagram({0, 0});
    auto r = equivalence_search(d, u, 2, 1000);
    CHECK(r.status == SearchStatus::equivalent);
    CHECK(r.depth == 1);
    CHECK(simplify(d).n() == 0);
}

TEST_CASE("R2 cancelling and irreducible bigons") {
    int cancelling = 0, blocked = 0;
    for (const auto& p : testsupport::shadow_pool()) {
        if (p.n != 2) continue;
        for (int b = 0; b < 4; ++b) {
            Diagram d{p, {b & 1, b >> 1}};
            Embedding e = classify_embedding(p);
            auto disk = disk_faces(d, e);
            int bigons = 0;
            for (std::size_t f = 0; f < e.faces.faces.size(); ++f) {
                const auto& face = e.faces.faces[f];
                if (!disk[f] || face.size() != 2 || crossing_of(face[0]) == crossing_of(face[1])) continue;
                ++bigons;
            }
            if (bigons == 0) continue;
            int r2 = count_kind(find_moves(d), MoveKind::R2down);
            if (r2 > 0) {
                ++cancelling;
                CHECK(writhe(d) == 0);
                for (const auto& s : find_moves(d))
                    if (s.kind == MoveKind::R2down) CHECK(apply_move(d, s).n() == 0);
            } else {
                ++blocked;
            }
        }
    }
    CHECK(cancelling > 0);
    CHECK(blocked > 0);
}

TEST_CASE("R2up is undone by R2down") {
    std::mt19937 rng(37);
    int tried = 0;
    for (int i = 0; i < 60; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        if (d.n() > 3) continue;
        std::string key = canonical_key(d, {true, false});
        auto ups = find_r2up(d);
        for (std::size_t k = 0; k < ups.size(); k += 7) {
            Diagram e = apply_move(d, ups[k]);
            CHECK(e.n() == d.n() + 2);
            bool back = false;
            for (const auto& s : find_moves(e))
                if (s.kind == MoveKind::R2down && canonical_key(apply_move(e, s), {true, false}) == key) back = true;
            CHECK(back);
            ++tried;
        }
    }
    CHECK(tried > 20);
}

TEST_CASE("moves keep diagrams valid and classes fixed") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        Vec2 k = knot_class(d);
        for (const auto& s : find_moves(d, i % 4 == 0)) {
            Diagram e = apply_move(d, s);
            CHECK_NOTHROW(validate(e));
            CHECK(knot_class(e) == k);
            int dn = e.n() - d.n();
            switch (s.kind) {
                case MoveKind::R1down: CHECK(dn == -1); break;
                case MoveKind::R2down: CHECK(dn == -2); break;
                case MoveKind::R3: CHECK(dn == 0); break;
                case MoveKind::R2up: CHECK(dn == 2); break;
            }
        }
    }
}

TEST_CASE("inapplicable sites are rejected") {
    Diagram d = kinked_unknot();
    CHECK_THROWS_AS(apply_move(d, MoveSite{MoveKind::R3, {0, 1, 2}}), MoveError);
    CHECK_THROWS_AS(apply_move(d, MoveSite{MoveKind::R2down, {0, 1}}), MoveError);
}

TEST_CASE("equivalence search") {
    std::mt19937 rng(43);
    for (int i = 0; i < 50; ++i) {
        Diagram d = testsupport::random_diagram(rng);
        Diagram r = relabel(d, testsupport::random_perm(d.n(), rng), testsupport::random_shift(d.n(), rng));
        auto res = equivalence_search(d, r, d.n(), 10);
        CHECK(res.status == SearchStatus::equivalent);
        CHECK(res.depth == 0);
    }
    Diagram a = decode_tkc("tkc:v1;n=0;circle=(0,1)");
    Diagram b = circle_diagram({0, 0});
    auto res = equivalence_search(a, b, 2, 2000);
    CHECK(res.status != SearchStatus::equivalent);
}

TEST_CASE("reduction search") {
    auto r = reduction_search(kinked_unknot(), 3, 1000);
    CHECK(r.reduced);
    REQUIRE(r.smaller.has_value());
    CHECK(r.smaller->n() < 1);
    auto one = reduction_search(decode_tkc("tkc:v1;n=1;pair=0-1,2-3;wind=0:(0,1),2:(0,-1);over=0"), 3, 5000);
    CHECK_FALSE(one.reduced);
}
