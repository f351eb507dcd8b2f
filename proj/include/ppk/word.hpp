#ifndef PPK_WORD_HPP
#define PPK_WORD_HPP

#include <compare>
#include <string>
#include <vector>

namespace ppk {

// A letter is a generator index together with a sign. Generator names live in
// the ambient Presentation; words are meaningless without one.
struct Letter {
    int gen = 0;
    bool inv = false;

    Letter() = default;
    Letter(int g, bool i) : gen(g), inv(i) {}

    Letter inverse() const { return Letter(gen, !inv); }
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

Word inverse_word(const Word& w);

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    int generator_index(const std::string& name) const; // -1 when absent
    bool operator==(const Presentation&) const = default;
};

// I(P): generators with an explicit square relator.
struct InvolutionSet {
    std::vector<bool> member; // indexed by generator

    bool contains(int gen) const { return gen >= 0 && gen < (int)member.size() && member[gen]; }
    bool operator==(const InvolutionSet&) const = default;
};

// S' = S u (S \ I)^-1 with a fixed order: S first, then inverses of S \ I.
// Involution letters are identified with their inverses throughout.
struct SymAlphabet {
    int n_gens = 0;
    std::vector<bool> invol;     // per generator
    std::vector<Letter> letters; // S' in canonical order
    std::vector<int> pos_index;  // gen -> index of the positive letter
    std::vector<int> neg_index;  // gen -> index of the inverse letter, -1 for involutions

    int size() const { return (int)letters.size(); }

    // Index of a letter in S'; involution letters of either sign map to the
    // same entry. Throws UnknownLetter for out-of-range generators.
    int index(Letter l) const;
    int inverse(int idx) const;
    Letter letter(int idx) const { return letters[idx]; }
    bool is_involution(int gen) const { return invol[gen]; }

    // Sign-normalized copy of a letter (involutions always positive).
    Letter normalize(Letter l) const { return invol[l.gen] ? Letter(l.gen, false) : l; }
    Word normalize(const Word& w) const;

    bool operator==(const SymAlphabet&) const = default;
};

// ==================== operations ====================

// Free-group reduction (I empty) or free-product reduction: cancels x x^-1
// and, for s in I, any adjacent pair of s-letters. Involution letters are
// sign-normalized so the result is the unique normal form.
Word free_product_reduce(const Word& w, const InvolutionSet& I);

// Reduce, then cancel matching first/last letters until stable under rotation.
Word cyclic_reduce(const Word& w, const InvolutionSet& I);

bool is_reduced(const Word& w, const InvolutionSet& I);
bool is_cyclically_reduced(const Word& w, const InvolutionSet& I);

// All cyclic shifts of w, de-duplicated and sorted. rotations(eps) = {eps}.
std::vector<Word> rotations(const Word& w);

// True iff w occurs as a contiguous factor of some rotation of r.
bool is_subword_of_rotation(const Word& w, const Word& r);

InvolutionSet involution_set(const Presentation& p);
SymAlphabet symmetrized_alphabet(const Presentation& p);

// <S u {x} | R u {x^-1 u v}>
Presentation tietze_add_product_generator(const Presentation& p, Letter u, Letter v,
                                          const std::string& name);

// One presentation per generator that occurs exactly once in exactly one
// relator: that generator and its relator removed.
std::vector<Presentation> remove_obviously_redundant(const Presentation& p);

} // namespace ppk

#endif
