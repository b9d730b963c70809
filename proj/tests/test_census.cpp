#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "tknot/census.hpp"
#include "tknot/invariant.hpp"
#include "tknot/render.hpp"

using namespace tknot;

namespace {

const CensusTable& full() {
    static const CensusTable t = build_census({});
    return t;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("tiny censuses") {
    CensusOptions o;
    o.max_crossings = 0;
    auto t0 = build_census(o);
    REQUIRE(t0.records.size() == 1);
    CHECK(t0.records[0].name == "0_1");
    CHECK(t0.records[0].invariant == XPoly::x());

    o.max_crossings = 1;
    auto t1 = build_census(o);
    REQUIRE(t1.records.size() == 2);
    XPoly entry = XPoly::parse("-(x^2*a^-4 - a^-4 - 1)");
    const auto& r = t1.records[1];
    CHECK(r.name == "1_1");
    CHECK((r.table_polynomial == entry || r.table_polynomial == entry.mirror_a()));
    CHECK(r.alternating);
}

TEST_CASE("records are consistent") {
    const auto& t = full();
    std::set<std::string> names;
    std::map<std::string, std::vector<const CensusRecord*>> by_inv;
    for (const auto& r : t.records) {
        CAPTURE(r.name);
        CHECK(names.insert(r.name).second);
        by_inv[r.invariant.str()].push_back(&r);
        CHECK(r.invariant == canonical_invariant(r.diagram));
        CHECK(r.class_z == knot_class(r.diagram));
        CHECK(r.name.rfind(std::to_string(r.diagram.n()) + "_", 0) == 0);
        CHECK(parity_consistent(r.invariant, r.class_z));
    }
    CHECK(t.unresolved_pairs == 0);
    // records sharing X must be told apart by the class-graded refinement
    for (const auto& [inv, rs] : by_inv)
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) {
                CAPTURE(rs[i]->name);
                CAPTURE(rs[j]->name);
                CHECK_FALSE(graded_equivalent(graded_x(rs[i]->diagram), graded_x(rs[j]->diagram)));
            }
}

TEST_CASE("no invariant collides across crossing numbers") {
    CHECK(stats(full()).cross_crossing_collisions.empty());
}

TEST_CASE("monotone in the crossing bound") {
    CensusOptions o;
    o.max_crossings = 3;
    auto small = build_census(o);
    std::set<std::string> big;
    for (const auto& r : full().records) big.insert(r.invariant.str());
    for (const auto& r : small.records) CHECK(big.count(r.invariant.str()) == 1);
}

TEST_CASE("verification against the shipped table") {
    auto expected = load_expected_file(default_expected_path());
    REQUIRE(expected.size() == 64);
    const auto& t = full();

    std::vector<ExpectedEntry> one{{"2_1", XPoly::parse("x^3*a^-8 + x*(-2*a^-8 - a^-4)")}};
    auto rep = verify_expected(t, one);
    CHECK(rep.matched.size() == 1);
    int hits = 0;
    for (const auto& r : t.records)
        hits += r.table_polynomial == one[0].poly || r.table_polynomial == one[0].poly.mirror_a();
    CHECK(hits == 1);

    std::vector<ExpectedEntry> corrupt{{"bogus", XPoly::parse("x^3*a^-8 + 5*x")}};
    auto bad = verify_expected(t, corrupt);
    CHECK(bad.matched.empty());
    REQUIRE(bad.unmatched_expected.size() == 1);
    CHECK(bad.unmatched_expected[0] == "bogus");
    CHECK_FALSE(bad.perfect);
    CHECK(bad.unmatched_records.size() == t.records.size());
    REQUIRE(bad.near.size() == 1);
    CHECK(bad.near[0].distance > 0);
}

TEST_CASE("expected file parsing") {
    std::istringstream ok("# comment\n\n0_1: x\n1_1: -(x^2*a^-4 - a^-4 - 1)  # trailing\n");
    auto e = load_expected(ok);
    REQUIRE(e.size() == 2);
    CHECK(e[0].label == "0_1");
    CHECK(e[1].poly == XPoly::parse("-x^2*a^-4+a^-4+1"));
    std::istringstream no_colon("0_1 x\n");
    CHECK_THROWS(load_expected(no_colon));
    std::istringstream bad_poly("0_1: x^^2\n");
    CHECK_THROWS(load_expected(bad_poly));
}

TEST_CASE("emitters") {
    const auto& t = full();
    std::string json = emit_json(t);
    CHECK(json == emit_json(build_census({})));
    auto back = parse_json(json);
    REQUIRE(back.records.size() == t.records.size());
    for (std::size_t i = 0; i < t.records.size(); ++i) {
        const auto &a = t.records[i], &b = back.records[i];
        CHECK(a.name == b.name);
        CHECK(a.diagram == b.diagram);
        CHECK(a.invariant == b.invariant);
        CHECK(a.table_polynomial == b.table_polynomial);
        CHECK(a.writhe == b.writhe);
        CHECK(a.class_z == b.class_z);
        CHECK(a.class_mod2 == b.class_mod2);
        CHECK(a.alternating == b.alternating);
        CHECK(a.projection_name == b.projection_name);
        CHECK(a.projection_key == b.projection_key);
        CHECK(a.fingerprint == b.fingerprint);
    }
    CHECK(emit_json(back) == json);

    std::string csv = emit_csv(t);
    CHECK(count_of(csv, "\n") == t.records.size() + 1);

    std::string tex = emit_latex(t);
    for (const auto& r : t.records) {
        std::string line;
        for (char c : r.invariant.str()) line += c == '^' ? std::string("\\^{}") : std::string(1, c);
        CHECK(count_of(tex, "\\texttt{" + line + "}") >= 1);
    }
    CHECK(count_of(tex, "\\texttt{") == t.records.size());
}

TEST_CASE("svg rendering") {
    for (const auto& r : full().records) {
        std::string svg = render_svg(r.diagram);
        CHECK(svg.rfind("<svg", 0) == 0);
        std::size_t edges = count_of(svg, "class=\"edge\"");
        if (r.diagram.n() == 0)
            CHECK(edges == 1);
        else
            CHECK(edges == std::size_t(2 * r.diagram.n()));
        CHECK(count_of(svg, "class=\"crossing\"") == std::size_t(r.diagram.n()));
    }
}
