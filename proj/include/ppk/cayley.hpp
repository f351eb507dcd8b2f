#ifndef PPK_CAYLEY_HPP
#define PPK_CAYLEY_HPP

#include <vector>

#include "ppk/graph.hpp"
#include "ppk/word.hpp"

namespace ppk {

struct CosetTable {
    int n_generators = 0;
    bool complete = false;
    int coset_count = 0;                 // live cosets; row 0 is the identity
    std::vector<std::vector<int>> fwd;   // [gen][coset], -1 undefined
    std::vector<std::vector<int>> bwd;

    int act(int coset, Letter l) const { return l.inv ? bwd[l.gen][coset] : fwd[l.gen][coset]; }
};

// HLT-style coset enumeration with row filling; deterministic. Returns an
// incomplete table when the bound on live cosets is hit.
CosetTable coset_enumerate(const Presentation& p, int max_cosets);

// Throws IncompleteTable. Involution generators get single undirected edges;
// loops and fixed points are kept and flagged.
ColoredGraph build_cayley_graph(const Presentation& p, const CosetTable& t);

// Induced subgraph on vertices within undirected distance r of v. The
// optional out-parameter receives the original vertex ids.
ColoredGraph ball(const ColoredGraph& g, int v, int r, std::vector<int>* vertex_map = nullptr);

// Closed-walk check: every relator acts trivially on every coset.
bool relators_close(const Presentation& p, const CosetTable& t);

// GF(2) span of all relator-induced closed walks equals the cycle space.
bool relators_span_cycle_space(const Presentation& p, const CosetTable& t, const ColoredGraph& g);

} // namespace ppk

#endif
