#pragma once

#include <map>
#include <vector>

#include "tknot/diagram.hpp"
#include "tknot/poly.hpp"

namespace tknot {

enum class Marker { A, B };

using State = std::vector<Marker>;

struct Resolution {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;  // circles with class (0,0)
    int delta = 0;  // circles with nonzero class
    std::vector<std::vector<int>> circles;
    std::vector<Vec2> classes;
};

// bit c of mask set means marker B at crossing c
State state_from_mask(int n, unsigned mask);

// Slot joined to slot s by the smoothing at a crossing with the given over bit.
int smoothing_partner(int slot, int over_bit, Marker m);

Resolution resolve_state(const Diagram& d, const State& s);

// sum over states of a^(alpha-beta) (-a^2-a^-2)^gamma x^delta
XPoly state_sum(const Diagram& d);

// (-a)^(-3w) * state_sum
XPoly kauffman_x(const Diagram& d);

// (-a)^(+3w) * state_sum, the normalization under which the published
// polynomial list was produced; not invariant under the first move.
XPoly table_x(const Diagram& d);

XPoly canonical_invariant(const Diagram& d);

// Refinement of X that keeps the class (up to sign) of the nontrivial
// circles of each state. Circles of one state are disjoint, hence parallel,
// so each state contributes to exactly one class; key (0,0) collects the
// states without nontrivial circles.
struct GradedX {
    std::map<Vec2, XPoly> parts;
    bool operator==(const GradedX&) const = default;
};

GradedX graded_x(const Diagram& d);

// True when some unimodular change of basis (optionally combined with
// a <-> a^-1) carries one graded polynomial onto the other.
bool graded_equivalent(const GradedX& g1, const GradedX& g2, bool allow_mirror = true);

}  // namespace tknot
