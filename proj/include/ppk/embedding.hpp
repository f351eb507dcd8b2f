#ifndef PPK_EMBEDDING_HPP
#define PPK_EMBEDDING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ppk/graph.hpp"
#include "ppk/planarity.hpp"
#include "ppk/spin.hpp"
#include "ppk/word.hpp"

namespace ppk {

struct SpinReport {
    bool consistent = false;
    std::vector<std::pair<int, std::string>> witnesses; // vertex/color offenders
    CyclicOrder sigma;            // common spin (S'-indices), up to reflection
    std::vector<uint8_t> tau;     // per color: 0 preserving, 1 reversing
    SymAlphabet alphabet;
};

// Spin of every vertex as the cyclic order of S'-letters; consistent iff
// every color is uniformly spin-preserving or spin-reversing.
SpinReport check_consistent(const ColoredGraph& g, const RotationSystem& rot);

// True iff Y contains a subwalk e.Q.f with Q inside the path X and the end
// edges attached on opposite sides of X. X as a vertex sequence; Y likewise
// (closed walks repeat their first vertex at the end or not, both accepted).
bool walk_crossing(const ColoredGraph& g, const RotationSystem& rot, const std::vector<int>& x,
                   const std::vector<int>& y);

// Number of crossings of the closed walk X by the closed walk Y.
int count_walk_crossings_closed(const ColoredGraph& g, const RotationSystem& rot,
                                const std::vector<int>& x, const std::vector<int>& y);

// All vertex pairs whose removal disconnects G (throws NotTwoConnected when
// G is not 2-connected), and whether each such pair is joined by an edge.
std::vector<std::pair<int, int>> two_separators(const ColoredGraph& g);
bool well_separated(const ColoredGraph& g);

// Does the edge behave as a hinge: {u, v} separates and the edge itself is
// not a bridge.
bool hinge_edge_separates(const ColoredGraph& g, int edge_id);
// All edges with colors from the set behave as hinges.
bool hinge_separation(const ColoredGraph& g, const std::vector<int>& hinge_colors);

struct Extraction {
    Presentation presentation;
    SpecialDecoration decoration;
};

// Facial relators of a consistent embedding plus the involution squares;
// verifies internally that the result is accepted and reproduces G.
Extraction extract_special_presentation(const ColoredGraph& g, const RotationSystem& rot);

} // namespace ppk

#endif
