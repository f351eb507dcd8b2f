#include "ppk/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "ppk/errors.hpp"
#include "ppk/parse.hpp"

namespace ppk {

namespace {

// comparable encodings: words as (length, letter codes), relator lists sorted
int letter_code(Letter l) { return 2 * l.gen + (l.inv ? 1 : 0); }

std::vector<int> word_key(const Word& w) {
    std::vector<int> k;
    k.reserve(w.size() + 1);
    k.push_back((int)w.size());
    for (Letter l : w) k.push_back(letter_code(l));
    return k;
}

std::vector<std::vector<int>> presentation_key(const Presentation& p) {
    std::vector<std::vector<int>> key;
    key.push_back({(int)p.generators.size()});
    for (const Word& w : p.relators) key.push_back(word_key(w));
    return key;
}

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    Word best = w, cur = w;
    for (size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (word_key(cur) < word_key(best)) best = cur;
    }
    return best;
}

std::string canonical_name(int i) {
    if (i < 26) return std::string(1, char('a' + i));
    return "g" + std::to_string(i);
}

} // namespace

Presentation canonical_form(const Presentation& p) {
    int n = (int)p.generators.size();
    std::vector<Word> reduced;
    InvolutionSet none;
    none.member.assign(n, false);
    for (const Word& w : p.relators) reduced.push_back(cyclic_reduce(w, none));

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<std::vector<int>>> best_key;
    Presentation best;

    // minimize over signed renamings: a permutation of the generators
    // together with an optional inversion per generator
    do {
        for (unsigned flips = 0; flips < (1u << n); ++flips) {
            Presentation q;
            for (int i = 0; i < n; ++i) q.generators.push_back(canonical_name(i));
            std::vector<int> pos(n); // pos[old] = new index
            for (int i = 0; i < n; ++i) pos[perm[i]] = i;
            for (const Word& w : reduced) {
                Word r;
                for (Letter l : w) {
                    bool inv = l.inv ^ ((flips >> l.gen) & 1);
                    r.push_back(Letter(pos[l.gen], inv));
                }
                q.relators.push_back(least_rotation(r));
            }
            std::sort(q.relators.begin(), q.relators.end(),
                      [](const Word& x, const Word& y) { return word_key(x) < word_key(y); });
            auto key = presentation_key(q);
            if (!best_key || key < *best_key) {
                best_key = key;
                best = q;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_canonical_form(const Presentation& p) { return canonical_form(p) == p; }

// ==================== presentation stream ====================

namespace {

// cyclically reduced nonempty words of the given length, in key order
void gen_words(int n_gens, int length, const std::function<void(const Word&)>& f) {
    Word w;
    std::function<void()> rec = [&]() {
        if ((int)w.size() == length) {
            if (!w.empty() && w.front().gen == w.back().gen && w.front().inv != w.back().inv &&
                w.size() >= 2)
                return; // cyclic cancellation
            f(w);
            return;
        }
        for (int code = 0; code < 2 * n_gens; ++code) {
            Letter l(code / 2, code % 2);
            if (!w.empty() && w.back().gen == l.gen && w.back().inv != l.inv) continue;
            w.push_back(l);
            rec();
            w.pop_back();
        }
    };
    rec();
}

} // namespace

void enumerate_presentations(const Budget& b,
                             const std::function<bool(const Presentation&)>& sink) {
    long emitted = 0;
    auto emit = [&](const Presentation& p) -> bool {
        if (b.max_outputs >= 0 && emitted >= b.max_outputs) return false;
        ++emitted;
        return sink(p);
    };

    for (int n = 1; n <= b.max_generators; ++n) {
        // words by length, in key order
        std::vector<std::vector<Word>> by_len(b.max_total_relator_length + 1);
        for (int len = 1; len <= b.max_total_relator_length; ++len)
            gen_words(n, len, [&](const Word& w) { by_len[len].push_back(w); });

        for (int total = 0; total <= b.max_total_relator_length; ++total) {
            std::set<std::vector<std::vector<int>>> seen;
            std::vector<Presentation> batch;
            std::vector<Word> chosen;
            std::function<void(int, int)> rec = [&](int remaining, int min_len) {
                if (remaining == 0) {
                    Presentation p;
                    for (int i = 0; i < n; ++i) p.generators.push_back(canonical_name(i));
                    p.relators = chosen;
                    Presentation c = canonical_form(p);
                    if (!(c == p)) return; // only canonical representatives
                    auto key = presentation_key(c);
                    if (seen.insert(key).second) batch.push_back(std::move(c));
                    return;
                }
                if ((int)chosen.size() >= b.max_relators) return;
                for (int len = min_len; len <= remaining; ++len) {
                    for (const Word& w : by_len[len]) {
                        if (!chosen.empty() && word_key(w) < word_key(chosen.back())) continue;
                        chosen.push_back(w);
                        rec(remaining - len, len);
                        chosen.pop_back();
                    }
                }
            };
            if (total == 0) {
                Presentation p;
                for (int i = 0; i < n; ++i) p.generators.push_back(canonical_name(i));
                if (is_canonical_form(p)) batch.push_back(p);
            } else {
                rec(total, 1);
            }
            std::sort(batch.begin(), batch.end(), [](const Presentation& x, const Presentation& y) {
                return presentation_key(x) < presentation_key(y);
            });
            for (const Presentation& p : batch)
                if (!emit(p)) return;
        }
    }
}

// ==================== decoration stream ====================

namespace {

// tau is enumerated only on pairs (g, i) where g or g^-1 lies in block i;
// the remaining entries are carried as 0.
std::vector<std::pair<int, int>> relevant_tau_pairs(const SpinStructure& c) {
    std::vector<std::pair<int, int>> out;
    const SymAlphabet& a = c.alphabet;
    for (int g = 0; g < a.n_gens; ++g)
        for (int b = 0; b < c.block_count(); ++b) {
            bool rel = c.block_has(b, a.pos_index[g]);
            if (!rel && !a.is_involution(g)) rel = c.block_has(b, a.neg_index[g]);
            if (rel) out.push_back({g, b});
        }
    return out;
}

bool enumerate_generic_for_structure(const SpinStructure& c,
                                     const std::function<bool(const AnyDecoration&)>& sink) {
    const SymAlphabet& a = c.alphabet;
    int k = c.block_count();

    // sigma candidates per block, up to reflection
    std::vector<std::vector<CyclicOrder>> sig(k);
    for (int b = 0; b < k; ++b) sig[b] = cyclic_orders(c.blocks[b], true);

    // mu candidates per generator: bijections pos-blocks -> neg-blocks
    std::vector<std::vector<std::map<int, int>>> mus(a.n_gens);
    for (int g = 0; g < a.n_gens; ++g) {
        std::vector<int> dom, cod;
        int pos = a.pos_index[g];
        int neg = a.is_involution(g) ? pos : a.neg_index[g];
        for (int b = 0; b < k; ++b) {
            if (c.block_has(b, pos)) dom.push_back(b);
            if (c.block_has(b, neg)) cod.push_back(b);
        }
        if (dom.size() != cod.size()) return true; // (S1) would have failed
        std::sort(cod.begin(), cod.end());
        do {
            std::map<int, int> m;
            for (size_t i = 0; i < dom.size(); ++i) m[dom[i]] = cod[i];
            mus[g].push_back(std::move(m));
        } while (std::next_permutation(cod.begin(), cod.end()));
    }

    std::vector<std::pair<int, int>> tp = relevant_tau_pairs(c);
    if (tp.size() > 24) throw Error("decoration enumeration: tau space too large");
    long tau_count = 1L << tp.size();

    // odometers over sigma choices and mu choices
    std::vector<size_t> si(k, 0);
    while (true) {
        std::vector<size_t> mi(a.n_gens, 0);
        while (true) {
            for (long bits = 0; bits < tau_count; ++bits) {
                GenericDecoration d;
                d.structure = c;
                for (int b = 0; b < k; ++b) d.sigma.push_back(sig[b][si[b]]);
                d.tau.assign(a.n_gens, std::vector<uint8_t>(k, 0));
                for (size_t t = 0; t < tp.size(); ++t)
                    d.tau[tp[t].first][tp[t].second] = (bits >> t) & 1;
                d.mu.assign(a.n_gens, {});
                for (int g = 0; g < a.n_gens; ++g) d.mu[g] = mus[g][mi[g]];
                AnyDecoration any;
                any.generic = std::move(d);
                if (!sink(any)) return false;
            }
            int g = 0;
            for (; g < a.n_gens; ++g) {
                if (++mi[g] < mus[g].size()) break;
                mi[g] = 0;
            }
            if (g == a.n_gens) break;
        }
        int b = 0;
        for (; b < k; ++b) {
            if (++si[b] < sig[b].size()) break;
            si[b] = 0;
        }
        if (b == k) break;
    }
    return true;
}

} // namespace

void enumerate_decorations(const Presentation& p, DecorationKind kind,
                           const std::function<bool(const AnyDecoration&)>& sink) {
    SymAlphabet a = symmetrized_alphabet(p);
    if (kind == DecorationKind::Special) {
        std::vector<int> support(a.size());
        std::iota(support.begin(), support.end(), 0);
        for (const CyclicOrder& sigma : cyclic_orders(support, true)) {
            for (long bits = 0; bits < (1L << a.n_gens); ++bits) {
                SpecialDecoration d;
                d.alphabet = a;
                d.sigma = sigma;
                d.tau.assign(a.n_gens, 0);
                for (int g = 0; g < a.n_gens; ++g) d.tau[g] = (bits >> g) & 1;
                AnyDecoration any;
                any.special = std::move(d);
                if (!sink(any)) return;
            }
        }
        return;
    }
    for (const SpinStructure& c : enumerate_spin_structures(a))
        if (!enumerate_generic_for_structure(c, sink)) return;
}

// ==================== planar stream ====================

namespace {

// cheap structure-level filter: every consecutive pair of every relator (and
// its inverse) must fit in some block, else no decoration on this structure
// can satisfy (P1)
bool structure_can_block(const Presentation& p, const SpinStructure& c) {
    const SymAlphabet& a = c.alphabet;
    for (const Word& r : p.relators) {
        if (r.empty()) return false;
        size_t n = r.size();
        for (size_t j = 0; j < n; ++j) {
            int x = a.inverse(a.index(r[(j + n - 1) % n]));
            int y = a.index(r[j]);
            bool found = false;
            for (int b = 0; b < c.block_count() && !found; ++b)
                if (c.block_has(b, x) && c.block_has(b, y)) found = true;
            if (!found) return false;
        }
    }
    return true;
}

// decoration-independent rejections, applied once per presentation
bool presentation_can_pass(const Presentation& p, const CheckOptions& opts) {
    InvolutionSet I = involution_set(p);
    for (const Word& r : p.relators) {
        if (r.empty()) return false;
        bool square = r.size() == 2 && r[0] == r[1];
        if (!square && !induces_double_ray(r, I)) return false;
    }
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (size_t j = 0; j < p.relators.size(); ++j) {
            if (i == j) continue;
            if (is_subword_of_rotation(p.relators[i], p.relators[j])) return false;
            if (opts.strict_subword_inverses &&
                is_subword_of_rotation(p.relators[i], inverse_word(p.relators[j])))
                return false;
        }
    return true;
}

std::vector<PlanarItem> accepted_items(const Presentation& p, PlanarKind kind,
                                       const EnumerateOptions& opts) {
    std::vector<PlanarItem> out;
    CheckOptions check = opts.check;
    check.fail_fast = true;
    if (!presentation_can_pass(p, check)) return out;
    if (kind == PlanarKind::Special) {
        enumerate_decorations(p, DecorationKind::Special, [&](const AnyDecoration& d) {
            if (check_special(p, *d.special, check).accepted)
                out.push_back({p, d, std::nullopt, {}});
            return true;
        });
        return out;
    }
    SymAlphabet a = symmetrized_alphabet(p);
    for (const SpinStructure& c : enumerate_spin_structures(a)) {
        if (!structure_can_block(p, c)) continue;
        enumerate_generic_for_structure(c, [&](const AnyDecoration& d) {
            if (check_generic(p, *d.generic, check).accepted)
                out.push_back({p, d, std::nullopt, {}});
            return true;
        });
    }
    return out;
}

} // namespace

void enumerate_planar(PlanarKind kind, const Budget& b,
                      const std::function<bool(const PlanarItem&)>& sink,
                      const EnumerateOptions& opts) {
    std::set<std::vector<std::vector<int>>> emitted_general;
    long outputs = 0;

    // descendant dedup happens here so the parallel path stays race-free
    auto deliver = [&](const PlanarItem& item) -> bool {
        if (item.parent && !emitted_general.insert(presentation_key(item.presentation)).second)
            return true;
        if (b.max_outputs >= 0 && outputs >= b.max_outputs) return false;
        ++outputs;
        return sink(item);
    };

    auto process = [&](const Presentation& p) -> std::vector<PlanarItem> {
        std::vector<PlanarItem> items =
            accepted_items(p, kind == PlanarKind::General ? PlanarKind::Generic : kind, opts);
        if (kind != PlanarKind::General) return items;
        std::vector<PlanarItem> with_desc;
        for (const PlanarItem& it : items) {
            with_desc.push_back(it);
            // iterated removals, depth-first with the chain recorded
            std::function<void(const Presentation&, std::vector<std::string>&)> rec =
                [&](const Presentation& q, std::vector<std::string>& chain) {
                    int n = (int)q.generators.size();
                    for (int g = 0; g < n; ++g) {
                        int total = 0, host = -1;
                        for (int r = 0; r < (int)q.relators.size(); ++r)
                            for (Letter l : q.relators[r])
                                if (l.gen == g) ++total, host = r;
                        if (total != 1) continue;
                        (void)host;
                        Presentation desc;
                        std::vector<Presentation> all = remove_obviously_redundant(q);
                        // locate the removal for this generator
                        for (const Presentation& cands : all) {
                            if ((int)cands.generators.size() == n - 1 &&
                                std::find(cands.generators.begin(), cands.generators.end(),
                                          q.generators[g]) == cands.generators.end()) {
                                desc = cands;
                                break;
                            }
                        }
                        if (desc.generators.empty() && n > 1) continue;
                        chain.push_back(q.generators[g]);
                        PlanarItem di;
                        di.presentation = canonical_form(desc);
                        di.parent = it.presentation;
                        di.removed = chain;
                        with_desc.push_back(di);
                        rec(desc, chain);
                        chain.pop_back();
                    }
                };
            std::vector<std::string> chain;
            rec(it.presentation, chain);
        }
        return with_desc;
    };

    if (opts.threads <= 1) {
        enumerate_presentations(b, [&](const Presentation& p) {
            for (const PlanarItem& it : process(p))
                if (!deliver(it)) return false;
            return true;
        });
        return;
    }

    // batch-parallel: presentations are dealt to workers in fixed-size
    // batches and results re-serialized in input order
    const size_t batch_size = 64;
    std::vector<Presentation> batch;
    bool stopped = false;
    auto flush = [&]() {
        if (batch.empty() || stopped) return;
        std::vector<std::vector<PlanarItem>> results(batch.size());
        std::atomic<size_t> next{0};
        int nt = std::max(1, opts.threads);
        std::vector<std::thread> pool;
        for (int t = 0; t < nt; ++t)
            pool.emplace_back([&]() {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= batch.size()) return;
                    results[i] = process(batch[i]);
                }
            });
        for (auto& th : pool) th.join();
        for (const auto& items : results)
            for (const PlanarItem& it : items)
                if (!deliver(it)) {
                    stopped = true;
                    return;
                }
        batch.clear();
    };
    enumerate_presentations(b, [&](const Presentation& p) {
        batch.push_back(p);
        if (batch.size() >= batch_size) flush();
        return !stopped;
    });
    flush();
}

} // namespace ppk
