#ifndef PPK_SPIN_HPP
#define PPK_SPIN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ppk/word.hpp"

namespace ppk {

// Circular sequence of distinct S'-indices. Equality is rotation-equality;
// the reflection is the reversed ring.
struct CyclicOrder {
    std::vector<int> ring;

    CyclicOrder() = default;
    explicit CyclicOrder(std::vector<int> r) : ring(std::move(r)) {}

    CyclicOrder reflected() const;
    CyclicOrder normalized() const; // least rotation
    bool same_up_to_rotation(const CyclicOrder& o) const;
    bool same_up_to_rotation_or_reflection(const CyclicOrder& o) const;

    // +1 if walking the ring forward from x meets y before z, else -1.
    // All three must be distinct members of the ring.
    int orient(int x, int y, int z) const;
    // true iff chords {a,b} and {c,d} interleave (all four distinct members).
    bool interleaved(int a, int b, int c, int d) const;
    bool contains(int x) const;
};

// Cover B_1..B_k of S' whose block/letter incidence graph X is a tree.
struct SpinStructure {
    SymAlphabet alphabet;
    std::vector<std::vector<int>> blocks; // sorted S'-indices

    int block_count() const { return (int)blocks.size(); }
    bool block_has(int b, int sym) const;
};

struct HingeSet {
    std::vector<int> members; // S'-indices, sorted
    bool contains(int sym) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> violations; // (condition id, witness)

    void fail(const std::string& cond, const std::string& witness) {
        ok = false;
        violations.push_back({cond, witness});
    }
};

// sigma per block, tau on S x blocks, mu per generator (block -> block).
// tau/mu are stored on base generators; values on inverses are derived.
struct GenericDecoration {
    SpinStructure structure;
    std::vector<CyclicOrder> sigma;            // one per block, support = block
    std::vector<std::vector<uint8_t>> tau;     // tau[gen][block]
    std::vector<std::map<int, int>> mu;        // mu[gen]: block index -> block index

    int tau_of(int gen, int block) const { return tau[gen][block]; }
    // mu extended to S'-letters: for an inverse letter the inverse mapping.
    // Returns -1 when undefined.
    int mu_of_letter(int sym_idx, int block) const;
};

struct SpecialDecoration {
    SymAlphabet alphabet;
    CyclicOrder sigma;             // over all of S'
    std::vector<uint8_t> tau;      // per generator
};

// ==================== operations ====================

ValidationReport validate_spin_structure(const Presentation& p, const SpinStructure& c);
// Structure-only validation (the alphabet is carried by the structure).
ValidationReport validate_spin_structure(const SpinStructure& c);

HingeSet hinges(const SpinStructure& c); // throws InvalidStructure when c invalid

ValidationReport validate_decoration(const Presentation& p, const GenericDecoration& d);
ValidationReport validate_special_decoration(const Presentation& p, const SpecialDecoration& d);

// The block containing {s^-1, t} for consecutive letters s, t.
struct BlockLookup {
    enum Kind { None, Unique, Ambiguous } kind = None;
    std::vector<int> candidates;
};
BlockLookup block_of_adjacent_letters(Letter s, Letter t, const SpinStructure& c);

// Lift of a special decoration to C = {S'} (mu forced).
GenericDecoration lift_to_generic(const SpecialDecoration& d);

// All valid spin structures over the alphabet (pairwise-distinct blocks),
// deterministic order. Exponential; intended for small S'.
std::vector<SpinStructure> enumerate_spin_structures(const SymAlphabet& a);

// All cyclic orders of the given support up to rotation (and optionally
// reflection), deterministic order.
std::vector<CyclicOrder> cyclic_orders(const std::vector<int>& support, bool up_to_reflection);

std::string sym_name(const SymAlphabet& a, int idx, const Presentation& p);

} // namespace ppk

#endif
