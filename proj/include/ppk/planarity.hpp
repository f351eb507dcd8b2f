#ifndef PPK_PLANARITY_HPP
#define PPK_PLANARITY_HPP

#include <string>
#include <vector>

#include "ppk/graph.hpp"

namespace ppk {

// Per-vertex circular order of incident darts.
struct RotationSystem {
    std::vector<std::vector<int>> rot;
};

struct PlanarityResult {
    bool planar = false;
    RotationSystem rotation;            // set when planar; Euler-verified
    std::vector<int> kuratowski_edges;  // edge ids of a K5/K33 subdivision
    std::string kuratowski_kind;        // "K5" or "K33"
};

PlanarityResult planarity_test(const ColoredGraph& g);

// Faces of the embedding as dart sequences (each dart on exactly one face).
std::vector<std::vector<int>> trace_faces(const ColoredGraph& g, const RotationSystem& rot);

// V - E + F == 1 + #components (== 2 when connected).
bool rotation_is_planar(const ColoredGraph& g, const RotationSystem& rot);

// Checks a claimed witness: the edges form a subdivision of K5 or K33.
// Returns "K5", "K33" or "" when neither.
std::string classify_kuratowski(const ColoredGraph& g, const std::vector<int>& edge_ids);

bool valid_rotation(const ColoredGraph& g, const RotationSystem& rot);

} // namespace ppk

#endif
