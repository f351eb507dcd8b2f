#ifndef PPK_CONDITIONS_HPP
#define PPK_CONDITIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ppk/crossing.hpp"
#include "ppk/spin.hpp"
#include "ppk/word.hpp"

namespace ppk {

struct Failure {
    std::string condition; // S1, S2, sP1, sP2, P1, P2, P3, P4, DECOR
    std::string witness;
};

struct Verdict {
    bool accepted = true;
    std::vector<Failure> failures;

    void reject(const std::string& cond, const std::string& witness) {
        accepted = false;
        failures.push_back({cond, witness});
    }
};

struct CheckOptions {
    // Crossing checks run over all unordered relator pairs including
    // self-pairs (a word against its own translates). Self-pairs are what
    // make acceptance imply planarity; the switch reproduces the weaker
    // distinct-pairs reading some classical examples assume.
    bool include_self_pairs = true;
    // Also reject relators that are subwords of rotations of other relators'
    // inverses (the stated condition names rotations only).
    bool strict_subword_inverses = false;
    // Stop at the first failure instead of collecting all witnesses.
    bool fail_fast = false;
};

bool is_blocked(const Word& r, const GenericDecoration& d);
BlockedResult is_blocked_with_chain(const Word& r, const GenericDecoration& d);

// (P3)/(sP2): the number of spin-reversing letter occurrences is even.
// Square relators of involutions are exempt. Generic form needs the chain.
bool reversal_parity_even(const Word& r, const GenericDecoration& d);
bool reversal_parity_even(const Word& r, const SpecialDecoration& d);

Verdict check_special(const Presentation& p, const SpecialDecoration& d,
                      const CheckOptions& opts = {});
Verdict check_generic(const Presentation& p, const GenericDecoration& d,
                      const CheckOptions& opts = {});

// Standing property: the special checker agrees with the generic checker on
// the singleton structure lift.
bool check_special_as_generic_consistency(const Presentation& p, const SpecialDecoration& d,
                                          const CheckOptions& opts = {});

struct SearchOptions {
    long max_candidates = 1000000;
    CheckOptions check;
};

// Exhaustive search over (sigma up to rotation+reflection) x tau, first
// accepted decoration in lexicographic order. Throws SearchBudgetExceeded.
std::optional<SpecialDecoration> search_special_decoration(const Presentation& p,
                                                           const SearchOptions& opts = {});

} // namespace ppk

#endif
