#include "ppk/conditions.hpp"

#include <algorithm>

#include "ppk/errors.hpp"
#include "ppk/parse.hpp"

namespace ppk {

bool is_blocked(const Word& r, const GenericDecoration& d) {
    return analyze_blocked(r, d).blocked;
}

BlockedResult is_blocked_with_chain(const Word& r, const GenericDecoration& d) {
    return analyze_blocked(r, d);
}

namespace {

bool square_involution_relator(const Word& r, const SymAlphabet& a) {
    if (r.size() != 2) return false;
    if (r[0].gen != r[1].gen) return false;
    return a.is_involution(r[0].gen);
}

} // namespace

bool reversal_parity_even(const Word& r, const GenericDecoration& d) {
    const SymAlphabet& a = d.structure.alphabet;
    if (r.empty()) return true;
    if (square_involution_relator(r, a)) return true; // exempt
    BlockedResult b = analyze_blocked(r, d);
    if (!b.blocked) throw NotBlocked("reversal_parity_even: relator is not blocked: " + b.reason);
    int count = 0;
    for (size_t j = 0; j < r.size(); ++j) {
        int block = b.chain.vertex_block[j]; // block of (preceding letter, r[j])
        if (d.tau[r[j].gen][block]) ++count;
    }
    return count % 2 == 0;
}

bool reversal_parity_even(const Word& r, const SpecialDecoration& d) {
    if (r.empty()) return true;
    if (square_involution_relator(r, d.alphabet)) return true;
    int count = 0;
    for (Letter l : r)
        if (d.tau[l.gen]) ++count;
    return count % 2 == 0;
}

namespace {

// Shared (sP1)/(P2) driver: every unordered pair of relators, optionally
// including self-pairs; words that do not induce double rays never cross.
void check_crossings(const Presentation& p, const GenericDecoration& d, const CheckOptions& opts,
                     const char* cond, Verdict& v) {
    const std::vector<Word>& rel = p.relators;
    for (size_t i = 0; i < rel.size(); ++i) {
        for (size_t j = i; j < rel.size(); ++j) {
            if (i == j && !opts.include_self_pairs) continue;
            CrossResult cr;
            try {
                cr = decide_crossing(rel[i], rel[j], d);
            } catch (const NotReduced&) {
                continue; // flagged separately by the blockedness/parity path
            } catch (const NotBlocked&) {
                continue; // (P1) already rejected
            }
            if (cr.crosses) {
                v.reject(cond, "relators " + format_word(rel[i], p) + " and " +
                                   format_word(rel[j], p) + " cross");
                return;
            }
        }
    }
}

// s^2 or s^-2 exactly as written
bool literal_square(const Word& r) {
    return r.size() == 2 && r[0] == r[1];
}

} // namespace

Verdict check_special(const Presentation& p, const SpecialDecoration& d, const CheckOptions& opts) {
    // a special planar presentation is exactly a generic one on the singleton
    // structure; run the one checker and relabel the condition ids
    Verdict rep;
    ValidationReport val = validate_special_decoration(p, d);
    if (!val.ok) {
        for (auto& [c, w] : val.violations) rep.reject("DECOR", w);
        return rep;
    }
    Verdict v = check_generic(p, lift_to_generic(d), opts);
    for (Failure& f : v.failures) {
        if (f.condition == "P2") f.condition = "sP1";
        if (f.condition == "P3") f.condition = "sP2";
    }
    return v;
}

Verdict check_generic(const Presentation& p, const GenericDecoration& d, const CheckOptions& opts) {
    Verdict v;
    ValidationReport rep = validate_decoration(p, d);
    if (!rep.ok) {
        for (auto& [c, w] : rep.violations) v.reject(c == "S1" || c == "S2" ? c : "DECOR", w);
        return v;
    }
    InvolutionSet I = involution_set(p);
    for (const Word& r : p.relators) {
        if (r.empty()) {
            v.reject("DECOR", "empty relator");
            continue;
        }
        if (literal_square(r)) continue; // the involution convention itself
        if (!induces_double_ray(r, I))
            v.reject("DECOR", "relator " + format_word(r, p) +
                                  " backtracks in the free product (not cyclically reduced)");
    }
    if (!v.accepted) return v;

    // (P1)
    bool all_blocked = true;
    for (const Word& r : p.relators) {
        BlockedResult b = analyze_blocked(r, d);
        if (!b.blocked) {
            v.reject("P1", "relator " + format_word(r, p) + ": " + b.reason);
            all_blocked = false;
            if (opts.fail_fast) return v;
        }
    }
    // (P3)
    if (all_blocked)
        for (const Word& r : p.relators)
            if (!reversal_parity_even(r, d)) {
                v.reject("P3", "relator " + format_word(r, p) + " has odd spin-reversing count");
                if (opts.fail_fast) return v;
            }
    // (P4): no relator is a subword of a rotation of another relator
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (size_t j = 0; j < p.relators.size(); ++j) {
            if (i == j) continue;
            bool hit = is_subword_of_rotation(p.relators[i], p.relators[j]);
            if (!hit && opts.strict_subword_inverses)
                hit = is_subword_of_rotation(p.relators[i], inverse_word(p.relators[j]));
            if (hit) {
                v.reject("P4", "relator " + format_word(p.relators[i], p) +
                                   " is a subword of a rotation of " +
                                   format_word(p.relators[j], p));
                if (opts.fail_fast) return v;
                i = p.relators.size(); // one witness is enough
                break;
            }
        }
    // (P2)
    if (all_blocked) check_crossings(p, d, opts, "P2", v);
    return v;
}

bool check_special_as_generic_consistency(const Presentation& p, const SpecialDecoration& d,
                                          const CheckOptions& opts) {
    Verdict a = check_special(p, d, opts);
    Verdict b = check_generic(p, lift_to_generic(d), opts);
    return a.accepted == b.accepted;
}

std::optional<SpecialDecoration> search_special_decoration(const Presentation& p,
                                                           const SearchOptions& opts) {
    SymAlphabet a = symmetrized_alphabet(p);
    std::vector<int> support(a.size());
    for (int i = 0; i < a.size(); ++i) support[i] = i;
    std::vector<CyclicOrder> sigmas = cyclic_orders(support, true);
    long tau_count = 1L << a.n_gens;
    long tried = 0;
    for (const CyclicOrder& sigma : sigmas) {
        for (long bits = 0; bits < tau_count; ++bits) {
            if (++tried > opts.max_candidates)
                throw SearchBudgetExceeded("search_special_decoration: candidate budget exhausted");
            SpecialDecoration d;
            d.alphabet = a;
            d.sigma = sigma;
            d.tau.assign(a.n_gens, 0);
            for (int g = 0; g < a.n_gens; ++g) d.tau[g] = (bits >> g) & 1;
            if (check_special(p, d, opts.check).accepted) return d;
        }
    }
    return std::nullopt;
}

} // namespace ppk
