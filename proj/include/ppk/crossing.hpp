#ifndef PPK_CROSSING_HPP
#define PPK_CROSSING_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppk/spin.hpp"
#include "ppk/word.hpp"

namespace ppk {

// Witness for a crossing: the two rays overlap along U (possibly empty) and
// branch apart with letters s,t (the W side) and s',t' (the Z side).
struct Alignment {
    Word shared;
    Letter w_branch_in, w_branch_out;
    Letter z_branch_in, z_branch_out;
    int w_offset = 0;
    int z_offset = 0; // offset into Z when forward, into Z^-1 when inverted
    bool z_inverted = false;
};

// Per-vertex block indices assigned by blockedness along a cyclic word, plus
// whether they are uniquely determined.
struct BlockChain {
    std::vector<int> vertex_block; // block at the vertex before letter j
    bool determinate = true;
};

struct BlockedResult {
    bool blocked = true;
    std::string reason; // first failing clause, for witnesses
    BlockChain chain;
};

// Blockedness of a cyclic word with respect to the decoration's structure,
// checked on R^inf and (R^-1)^inf including the mu clause at hinges.
BlockedResult analyze_blocked(const Word& w, const GenericDecoration& d);

// True iff W^inf labels a 2-way infinite path of T = Cay<S | s^2, s in I>,
// i.e. W is nonempty and cyclically reduced in the free product.
bool induces_double_ray(const Word& w, const InvolutionSet& I);

struct CrossResult {
    bool crosses = false;
    std::optional<Alignment> witness;
};

// Fast alignment-analysis decision. Preconditions: both words plainly
// cyclically reduced (NotReduced) and blocked with respect to D (NotBlocked).
CrossResult decide_crossing(const Word& w, const Word& z, const GenericDecoration& d);

// Ground truth by explicit construction: build both rays in the tree around
// every possible contact, realize canonical rotations, classify sides.
CrossResult crossing_oracle(const Word& w, const Word& z, const GenericDecoration& d);

// Convenience overloads for special decorations (lifted to C = {S'}).
CrossResult decide_crossing(const Word& w, const Word& z, const SpecialDecoration& d);
CrossResult crossing_oracle(const Word& w, const Word& z, const SpecialDecoration& d);

} // namespace ppk

#endif
