#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmsyz/quiver.hpp"

namespace cmsyz {

// Validated combinatorial structure of a dimer tree: every arrow lies on one
// (boundary) or two (interior) chordless cycles, the cycle adjacency graph is
// a tree, and the potential is the signed sum of all chordless cycles with
// adjacent cycles carrying opposite signs.
struct DimerAnalysis {
    Quiver q;
    Potential pot;                              // as validated
    std::vector<Word> cycles;                   // canonical chordless cycles
    std::vector<int> sign;                      // per cycle
    std::vector<std::vector<int>> arrow_cycles; // arrow -> incident cycle indices
    bool is_boundary(int arrow) const { return arrow_cycles[arrow].size() == 1; }
};

struct DimerCheck {
    std::string name;
    bool ok;
    std::string detail;
};

struct DimerReport {
    bool ok = false;
    std::vector<DimerCheck> checks;
    std::optional<DimerAnalysis> analysis;
};

DimerReport validate_dimer(const Quiver& q, const Potential& w);
DimerAnalysis require_dimer(const ParsedInput& p);  // throws NotDimerTree

// Forward zigzag from a boundary arrow: repeatedly take the successor inside
// the current cycle, switching to the other cycle after each interior arrow,
// until a boundary arrow ends the path. The backward version chains
// predecessors into the arrow instead.
Word zigzag(const DimerAnalysis& d, int boundary_arrow);
Word co_zigzag(const DimerAnalysis& d, int boundary_arrow);

int weight(const DimerAnalysis& d, int boundary_arrow);     // 1 odd length, 2 even
int co_weight(const DimerAnalysis& d, int boundary_arrow);

int total_weight(const DimerAnalysis& d);  // over boundary arrows; always even
std::string cm_type_a(const DimerAnalysis& d);  // "A_<n>" from half the total

// The reduction criterion at a vertex: a chordless 3-cycle through it whose
// incoming and outgoing arrows are boundary with co-weight resp. weight one,
// and whose closing third arrow is interior.
struct CriterionCell {
    bool qualifies = false;
    int cycle = -1;
    int beta = -1, gamma = -1, delta = -1;
    int beta_co_weight = 0, gamma_weight = 0;
};
CriterionCell criterion_at(const DimerAnalysis& d, int vertex);
bool cm_minimal(const DimerAnalysis& d);

// Potential restricted away from a vertex: cycles through it dropped.
ParsedInput reduce_potential_input(const ParsedInput& p, const std::string& vertex);

// Seeded generator: grows a random dimer tree by repeatedly gluing a fresh
// 3-, 4- or 5-cycle of opposite sign onto a boundary arrow. Deterministic in
// the seed; between 1 and max_cycles chordless cycles.
ParsedInput random_dimer_tree(std::uint64_t seed, int max_cycles);

}  // namespace cmsyz
