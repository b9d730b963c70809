#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tknot/diagram.hpp"

namespace tknot {

// Connected 4-regular multigraph; loops are stored as (v, v).
struct AbstractGraph {
    int nv = 0;
    std::vector<std::pair<int, int>> edges;

    int loop_count() const;
    // canonical edge list under vertex permutation, as text
    std::string key() const;
};

AbstractGraph canonical_form(const AbstractGraph& g);

std::vector<AbstractGraph> enum_graphs(int max_vertices, int max_loops = 2);
bool lemma1_check(const AbstractGraph& g);
AbstractGraph underlying_graph(const Projection& p);

// Letter a..o for the fifteen graphs, '?' otherwise.
char graph_type(const AbstractGraph& g);

struct WindingMode {
    bool cellular = true;
    // annular: faces receiving boundary classes +v and -v
    int plus_face = -1;
    int minus_face = -1;
};

// Windings with the requested face boundary classes (v = (0,1) for annular).
std::optional<std::vector<Vec2>> winding_solve(const CombinatorialMap& m, const FaceStructure& fs,
                                               const WindingMode& mode);

// All single-strand shadows with n crossings on the torus, before any
// primeness or symmetry reduction.
std::vector<Projection> enum_shadows(int n);

bool has_trivial_loop(const Projection& p);
bool is_composite(const Projection& p);
bool is_prime(const Projection& p);

// Sorted (corner count, annular?) pairs.
using Fingerprint = std::vector<std::pair<int, bool>>;
Fingerprint fingerprint(const Projection& p);
std::vector<int> fingerprint_degrees(const Fingerprint& f);
std::string to_string(const Fingerprint& f);

struct ProjectionRecord {
    std::string name;
    Projection proj;
    std::string key;
    AbstractGraph graph;
    char type = '?';
    Fingerprint fp;
    bool prime = true;
};

std::vector<ProjectionRecord> dedupe_projections(const std::vector<Projection>& shadows);

// Prime projections with n crossings, deduplicated and named n_k.
std::vector<ProjectionRecord> prime_projections(int n);
std::vector<ProjectionRecord> prime_projections_upto(int max_n);

}  // namespace tknot
