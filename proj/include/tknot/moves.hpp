#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tknot/diagram.hpp"

namespace tknot {

enum class MoveKind { R1down, R2down, R3, R2up };

const char* to_string(MoveKind k);

// R1down: darts = {monogon dart}. R2down: the two bigon darts. R3: the
// three triangle darts. R2up: {a, b}, the edge leaving a is pushed across
// the edge leaving b; over = 0 puts the pushed strand on top; variant
// selects the finger path through an annular region.
struct MoveSite {
    MoveKind kind = MoveKind::R1down;
    std::vector<int> darts;
    int over = 0;
    int variant = 0;
};

class MoveError : public DiagramError {
public:
    using DiagramError::DiagramError;
};

// Faces on which planar moves may act. Annular boundary faces are not disks.
std::vector<char> disk_faces(const Diagram& d, const Embedding& e);

std::vector<MoveSite> find_moves(const Diagram& d, bool include_r2up = false);
std::vector<MoveSite> find_r2up(const Diagram& d);
Diagram apply_move(const Diagram& d, const MoveSite& site);

// Delete crossings, letting both strands pass straight through.
Diagram remove_crossings(const Diagram& d, const std::vector<int>& crossings);

// Greedy R1down/R2down to a fixpoint.
Diagram simplify(const Diagram& d);

enum class SearchStatus { equivalent, not_found, cap_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::not_found;
    int depth = -1;
    std::size_t visited = 0;
};

SearchResult equivalence_search(const Diagram& d1, const Diagram& d2, int max_crossings, std::size_t max_steps);

struct ReductionResult {
    bool reduced = false;
    bool capped = false;
    std::optional<Diagram> smaller;
    std::size_t visited = 0;
};

// Breadth-first search for any equivalent diagram with fewer crossings.
ReductionResult reduction_search(const Diagram& d, int max_crossings, std::size_t max_steps);

}  // namespace tknot
