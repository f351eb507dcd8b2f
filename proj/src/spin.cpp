#include "ppk/spin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "ppk/errors.hpp"
#include "ppk/parse.hpp"

namespace ppk {

// ==================== CyclicOrder ====================

CyclicOrder CyclicOrder::reflected() const {
    CyclicOrder r = *this;
    std::reverse(r.ring.begin(), r.ring.end());
    return r;
}

CyclicOrder CyclicOrder::normalized() const {
    if (ring.empty()) return *this;
    CyclicOrder best = *this;
    CyclicOrder cur = *this;
    for (size_t i = 1; i < ring.size(); ++i) {
        std::rotate(cur.ring.begin(), cur.ring.begin() + 1, cur.ring.end());
        if (cur.ring < best.ring) best = cur;
    }
    return best;
}

bool CyclicOrder::same_up_to_rotation(const CyclicOrder& o) const {
    if (ring.size() != o.ring.size()) return false;
    return normalized().ring == o.normalized().ring;
}

bool CyclicOrder::same_up_to_rotation_or_reflection(const CyclicOrder& o) const {
    return same_up_to_rotation(o) || same_up_to_rotation(o.reflected());
}

bool CyclicOrder::contains(int x) const {
    return std::find(ring.begin(), ring.end(), x) != ring.end();
}

int CyclicOrder::orient(int x, int y, int z) const {
    size_t n = ring.size();
    size_t px = n, py = n, pz = n;
    for (size_t i = 0; i < n; ++i) {
        if (ring[i] == x) px = i;
        if (ring[i] == y) py = i;
        if (ring[i] == z) pz = i;
    }
    if (px == n || py == n || pz == n) throw Error("orient: letter not in ring");
    size_t dy = (py + n - px) % n;
    size_t dz = (pz + n - px) % n;
    return dy < dz ? +1 : -1;
}

bool CyclicOrder::interleaved(int a, int b, int c, int d) const {
    // c and d lie in different arcs of the chord {a, b}
    return orient(a, b, c) != orient(a, b, d);
}

// ==================== SpinStructure ====================

bool SpinStructure::block_has(int b, int sym) const {
    const auto& blk = blocks[b];
    return std::binary_search(blk.begin(), blk.end(), sym);
}

bool HingeSet::contains(int sym) const {
    return std::binary_search(members.begin(), members.end(), sym);
}

ValidationReport validate_spin_structure(const SpinStructure& c) {
    ValidationReport rep;
    const SymAlphabet& a = c.alphabet;
    int m = a.size();
    int k = c.block_count();
    if (k == 0) {
        rep.fail("S2", "no blocks");
        return rep;
    }

    for (int b = 0; b < k; ++b) {
        if (c.blocks[b].empty()) rep.fail("S2", "block " + std::to_string(b) + " is empty");
        for (int sym : c.blocks[b])
            if (sym < 0 || sym >= m)
                throw UnknownLetter("block " + std::to_string(b) + " contains a symbol outside S'");
    }

    std::vector<int> cover(m, 0);
    for (const auto& blk : c.blocks)
        for (int sym : blk) ++cover[sym];
    for (int s = 0; s < m; ++s)
        if (cover[s] == 0) rep.fail("S2", "letter #" + std::to_string(s) + " not covered");

    // (S1): for non-involution generators, #blocks containing b == #blocks containing b^-1
    for (int g = 0; g < a.n_gens; ++g) {
        if (a.is_involution(g)) continue;
        if (cover[a.pos_index[g]] != cover[a.neg_index[g]])
            rep.fail("S1", "generator #" + std::to_string(g) + " has unbalanced block counts");
    }

    // (S2): the incidence graph X on blocks u S' is a tree
    long edges = 0;
    for (const auto& blk : c.blocks) edges += (long)blk.size();
    long vertices = k + m;
    if (edges != vertices - 1) {
        rep.fail("S2", "auxiliary graph X has " + std::to_string(edges) + " edges on " +
                           std::to_string(vertices) + " vertices");
    } else {
        std::vector<int> parent(m);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool cyclic = false;
        for (const auto& blk : c.blocks) {
            for (size_t i = 1; i < blk.size(); ++i) {
                int u = find(blk[0]), v = find(blk[i]);
                if (u == v) cyclic = true;
                parent[u] = v;
            }
        }
        int comps = 0;
        for (int s = 0; s < m; ++s)
            if (find(s) == s) ++comps;
        if (cyclic || comps != 1) rep.fail("S2", "auxiliary graph X is not a tree");
    }

    if (rep.ok) {
        // derived facts (1) and (2); failures here are internal inconsistencies
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                std::vector<int> inter;
                std::set_intersection(c.blocks[i].begin(), c.blocks[i].end(), c.blocks[j].begin(),
                                      c.blocks[j].end(), std::back_inserter(inter));
                if (inter.size() > 1)
                    rep.fail("S2", "internal: blocks " + std::to_string(i) + "," +
                                       std::to_string(j) + " share " +
                                       std::to_string(inter.size()) + " letters");
            }
        if (k >= 2)
            for (int b = 0; b < k; ++b) {
                bool has_hinge = false;
                for (int sym : c.blocks[b])
                    if (cover[sym] >= 2) has_hinge = true;
                if (!has_hinge)
                    rep.fail("S2", "internal: block " + std::to_string(b) + " has no hinge");
            }
    }
    return rep;
}

ValidationReport validate_spin_structure(const Presentation& p, const SpinStructure& c) {
    ValidationReport rep = validate_spin_structure(c);
    if (!(c.alphabet == symmetrized_alphabet(p)))
        rep.fail("S2", "structure alphabet does not match the presentation's S'");
    return rep;
}

HingeSet hinges(const SpinStructure& c) {
    ValidationReport rep = validate_spin_structure(c);
    if (!rep.ok)
        throw InvalidStructure("hinges: structure failed validation (" + rep.violations[0].second + ")");
    std::vector<int> cover(c.alphabet.size(), 0);
    for (const auto& blk : c.blocks)
        for (int sym : blk) ++cover[sym];
    HingeSet h;
    for (int s = 0; s < c.alphabet.size(); ++s)
        if (cover[s] >= 2) h.members.push_back(s);
    return h;
}

// ==================== decorations ====================

int GenericDecoration::mu_of_letter(int sym_idx, int block) const {
    const SymAlphabet& a = structure.alphabet;
    Letter l = a.letter(sym_idx);
    if (!l.inv) {
        auto it = mu[l.gen].find(block);
        return it == mu[l.gen].end() ? -1 : it->second;
    }
    // inverse letter: mu(b^-1, j) = i iff mu(b, i) = j
    for (auto [i, j] : mu[l.gen])
        if (j == block) return i;
    return -1;
}

ValidationReport validate_decoration(const Presentation& p, const GenericDecoration& d) {
    ValidationReport rep = validate_spin_structure(p, d.structure);
    const SpinStructure& c = d.structure;
    const SymAlphabet& a = c.alphabet;
    int k = c.block_count();

    if ((int)d.sigma.size() != k) {
        rep.fail("DECOR", "sigma must assign one cyclic order per block");
        return rep;
    }
    for (int b = 0; b < k; ++b) {
        std::vector<int> support = d.sigma[b].ring;
        std::sort(support.begin(), support.end());
        if (std::adjacent_find(support.begin(), support.end()) != support.end())
            rep.fail("DECOR", "sigma(" + std::to_string(b) + ") repeats a letter");
        if (support != c.blocks[b])
            rep.fail("DECOR", "sigma(" + std::to_string(b) + ") support differs from its block");
    }

    if ((int)d.tau.size() != a.n_gens) {
        rep.fail("DECOR", "tau must be total on S");
    } else {
        for (int g = 0; g < a.n_gens; ++g)
            if ((int)d.tau[g].size() != k) rep.fail("DECOR", "tau must be total on S x blocks");
    }

    if ((int)d.mu.size() != a.n_gens) {
        rep.fail("DECOR", "mu must be defined per generator");
        return rep;
    }
    for (int g = 0; g < a.n_gens; ++g) {
        int pos = a.pos_index[g];
        int neg = a.is_involution(g) ? pos : a.neg_index[g];
        std::set<int> image;
        for (auto [b, j] : d.mu[g]) {
            if (b < 0 || b >= k || !c.block_has(b, pos))
                rep.fail("DECOR", "mu(" + p.generators[g] + "," + std::to_string(b) +
                                      ") defined but generator not in block");
        }
        for (int b = 0; b < k; ++b) {
            if (!c.block_has(b, pos)) continue;
            auto it = d.mu[g].find(b);
            if (it == d.mu[g].end()) {
                rep.fail("DECOR", "mu(" + p.generators[g] + "," + std::to_string(b) + ") missing");
                continue;
            }
            int j = it->second;
            if (j < 0 || j >= k || !c.block_has(j, neg))
                rep.fail("DECOR", "mu(" + p.generators[g] + "," + std::to_string(b) +
                                      ") target lacks the inverse letter");
            else if (!image.insert(j).second)
                rep.fail("DECOR", "mu(" + p.generators[g] + ",.) is not injective");
        }
    }
    return rep;
}

ValidationReport validate_special_decoration(const Presentation& p, const SpecialDecoration& d) {
    ValidationReport rep;
    SymAlphabet a = symmetrized_alphabet(p);
    if (!(d.alphabet == a)) rep.fail("DECOR", "decoration alphabet does not match S'");
    std::vector<int> support = d.sigma.ring;
    std::sort(support.begin(), support.end());
    std::vector<int> full(a.size());
    std::iota(full.begin(), full.end(), 0);
    if (support != full) rep.fail("DECOR", "sigma must be a cyclic order of all of S'");
    if ((int)d.tau.size() != a.n_gens) rep.fail("DECOR", "tau must be total on S");
    return rep;
}

BlockLookup block_of_adjacent_letters(Letter s, Letter t, const SpinStructure& c) {
    const SymAlphabet& a = c.alphabet;
    int si = a.inverse(a.index(s));
    int ti = a.index(t);
    BlockLookup out;
    for (int b = 0; b < c.block_count(); ++b)
        if (c.block_has(b, si) && c.block_has(b, ti)) out.candidates.push_back(b);
    if (out.candidates.empty()) {
        out.kind = BlockLookup::None;
    } else if (si != ti) {
        if (out.candidates.size() != 1)
            throw InvalidStructure("fact (1) violated: a pair lies in several blocks");
        out.kind = BlockLookup::Unique;
    } else {
        out.kind = out.candidates.size() == 1 ? BlockLookup::Unique : BlockLookup::Ambiguous;
    }
    return out;
}

GenericDecoration lift_to_generic(const SpecialDecoration& d) {
    GenericDecoration g;
    g.structure.alphabet = d.alphabet;
    std::vector<int> all(d.alphabet.size());
    std::iota(all.begin(), all.end(), 0);
    g.structure.blocks = {all};
    g.sigma = {d.sigma};
    g.tau.assign(d.alphabet.n_gens, std::vector<uint8_t>(1, 0));
    for (int i = 0; i < d.alphabet.n_gens; ++i) g.tau[i][0] = d.tau[i];
    g.mu.assign(d.alphabet.n_gens, {});
    for (int i = 0; i < d.alphabet.n_gens; ++i) g.mu[i][0] = 0;
    return g;
}

// ==================== enumeration ====================

std::vector<CyclicOrder> cyclic_orders(const std::vector<int>& support, bool up_to_reflection) {
    std::vector<CyclicOrder> out;
    if (support.empty()) return out;
    std::vector<int> base = support;
    std::sort(base.begin(), base.end());
    std::vector<int> rest(base.begin() + 1, base.end());
    do {
        if (up_to_reflection && rest.size() >= 2 && rest.front() > rest.back())
            continue; // one representative per reflection pair
        std::vector<int> ring;
        ring.push_back(base[0]);
        ring.insert(ring.end(), rest.begin(), rest.end());
        out.push_back(CyclicOrder(ring));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

std::vector<SpinStructure> enumerate_spin_structures(const SymAlphabet& a) {
    int m = a.size();
    std::vector<SpinStructure> out;
    if (m > 20) throw Error("enumerate_spin_structures: alphabet too large");
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(i);
        subsets.push_back(std::move(s));
    }
    std::sort(subsets.begin(), subsets.end());

    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<int> chosen;
    std::vector<int> cover(m, 0);
    // DFS over increasing subset indices; the incidence graph must stay a
    // forest, so every added block joins pairwise-distinct letter components.
    std::function<void(int, int, long)> dfs = [&](int next, int covered, long edges) {
        if (covered == m && edges == (long)chosen.size() + m - 1) {
            SpinStructure c;
            c.alphabet = a;
            for (int idx : chosen) c.blocks.push_back(subsets[idx]);
            if (validate_spin_structure(c).ok) out.push_back(std::move(c));
        }
        for (int idx = next; idx < (int)subsets.size(); ++idx) {
            const auto& blk = subsets[idx];
            if (edges + (long)blk.size() > (long)(chosen.size() + 1) + m - 1) continue;
            std::set<int> roots;
            bool okay = true;
            for (int sym : blk)
                if (!roots.insert(find(sym)).second) okay = false;
            if (!okay) continue;
            std::vector<int> saved_parent = parent;
            int newly = 0;
            for (int sym : blk)
                if (cover[sym]++ == 0) ++newly;
            int base = find(blk[0]);
            for (int sym : blk) parent[find(sym)] = base;
            chosen.push_back(idx);
            dfs(idx + 1, covered + newly, edges + (long)blk.size());
            chosen.pop_back();
            parent = saved_parent;
            for (int sym : blk) --cover[sym];
        }
    };
    dfs(0, 0, 0);
    return out;
}

std::string sym_name(const SymAlphabet& a, int idx, const Presentation& p) {
    return format_letter(a.letter(idx), p);
}

} // namespace ppk
