#ifndef PPK_GRAPH_HPP
#define PPK_GRAPH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ppk/word.hpp"

namespace ppk {

struct ColoredEdge {
    int u = 0, v = 0;
    int color = 0;
    bool undirected = false; // involution convention: one edge per pair
    bool degenerate = false; // loop (s = 1) or involution fixed point
};

// Directed edge-colored graph with the involution single-edge convention.
// Darts: edge e has darts 2e (at u) and 2e+1 (at v).
struct ColoredGraph {
    int n = 0;
    std::vector<std::string> color_names;
    std::vector<bool> color_involution;
    std::vector<ColoredEdge> edges;

    int dart_count() const { return 2 * (int)edges.size(); }
    int dart_vertex(int d) const { return d % 2 ? edges[d / 2].v : edges[d / 2].u; }
    int dart_other(int d) const { return d % 2 ? edges[d / 2].u : edges[d / 2].v; }
    int mate(int d) const { return d ^ 1; }

    // The S'-letter read when leaving along this dart.
    Letter dart_letter(int d) const {
        const ColoredEdge& e = edges[d / 2];
        if (e.undirected) return Letter(e.color, false);
        return Letter(e.color, d % 2 != 0);
    }

    std::vector<std::vector<int>> incident_darts() const;
    std::vector<int> degrees() const; // edge-end counts, loops twice
    bool connected() const;
};

// Deterministic per-color successor: v -> v.s (and v.s^-1). Throws when the
// graph does not define a unique action.
struct ColorAction {
    std::vector<std::vector<int>> fwd, bwd; // [color][vertex]
    explicit ColorAction(const ColoredGraph& g);
    int step(int v, Letter l) const { return l.inv ? bwd[l.gen][v] : fwd[l.gen][v]; }
};

bool color_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

// connectivity helpers (desk scale, exhaustive)
bool connected_without(const ColoredGraph& g, const std::vector<int>& removed);
int vertex_connectivity_at_most_3(const ColoredGraph& g); // 0,1,2 exact, 3 means ">= 3"

// ==================== file formats ====================

void write_dot(const ColoredGraph& g, std::ostream& os);
void write_graphml(const ColoredGraph& g, std::ostream& os);
// Reads the dialect write_dot emits. Exit-2 material on anything else.
ColoredGraph read_dot(std::istream& is);

} // namespace ppk

#endif
