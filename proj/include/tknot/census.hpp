#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tknot/diagram.hpp"
#include "tknot/enumerate.hpp"
#include "tknot/poly.hpp"

namespace tknot {

struct CensusOptions {
    int max_crossings = 4;
    // room above a diagram's crossing number for R2up detours
    int search_extra = 2;
    std::size_t search_steps = 20000;
};

struct CensusRecord {
    std::string name;
    Diagram diagram;
    XPoly invariant;  // canonical X
    XPoly table_polynomial;  // (-a)^{3w} normalization, canonical up to mirror
    int writhe = 0;
    Vec2 class_z;
    Vec2 class_mod2;
    bool alternating = false;
    std::string projection_name;
    std::string projection_key;
    Fingerprint fingerprint;
    int merged_diagrams = 1;
};

struct CensusEvent {
    std::string kind;  // merged | separated | unresolved | nonminimal | unverified
    std::string first;
    std::string second;
    std::string detail;
};

struct CensusTable {
    std::vector<CensusRecord> records;
    std::vector<ProjectionRecord> projections;
    std::vector<CensusEvent> events;
    std::size_t diagrams_generated = 0;
    std::size_t reducible_discarded = 0;
    std::size_t symmetric_duplicates = 0;
    std::size_t nonminimal_discarded = 0;
    std::size_t unresolved_pairs = 0;
};

CensusTable build_census(const CensusOptions& opt = {});

struct ExpectedEntry {
    std::string label;
    XPoly poly;
};

std::vector<ExpectedEntry> load_expected(std::istream& in);
std::vector<ExpectedEntry> load_expected_file(const std::string& path);
std::string default_expected_path();

struct NearMatch {
    std::string label;
    std::string record;
    long long distance = 0;
};

struct MatchReport {
    std::map<std::string, std::string> matched;  // label -> record name
    std::vector<std::string> unmatched_expected;
    std::vector<std::string> unmatched_records;
    std::vector<NearMatch> near;
    bool perfect = false;
};

// Perfect matching of expected polynomials against the records' table
// polynomials, up to a <-> a^-1.
MatchReport verify_expected(const CensusTable& t, const std::vector<ExpectedEntry>& expected);

struct CensusStats {
    int records = 0;
    int projections = 0;
    int homologically_trivial = 0;
    int alternating = 0;
    int max_per_projection = 0;
    double mean_per_projection = 0;
    std::map<std::string, int> per_projection;
    std::vector<std::string> parity_violations;
    std::vector<std::string> cross_crossing_collisions;
};

CensusStats stats(const CensusTable& t);

// x-degrees share one parity, even iff the class vanishes mod 2
bool parity_consistent(const XPoly& p, Vec2 cls);

std::string emit_json(const CensusTable& t);
std::string emit_csv(const CensusTable& t);
std::string emit_latex(const CensusTable& t);
// Records only; projections and events are not serialized.
CensusTable parse_json(const std::string& text);

}  // namespace tknot
