#include "ppk/word.hpp"

#include <algorithm>
#include <set>

#include "ppk/errors.hpp"

namespace ppk {

Word inverse_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

int Presentation::generator_index(const std::string& name) const {
    for (int i = 0; i < (int)generators.size(); ++i)
        if (generators[i] == name) return i;
    return -1;
}

int SymAlphabet::index(Letter l) const {
    if (l.gen < 0 || l.gen >= n_gens) throw UnknownLetter("letter refers to generator #" + std::to_string(l.gen));
    if (invol[l.gen]) return pos_index[l.gen];
    return l.inv ? neg_index[l.gen] : pos_index[l.gen];
}

int SymAlphabet::inverse(int idx) const {
    Letter l = letters[idx];
    if (invol[l.gen]) return idx;
    return l.inv ? pos_index[l.gen] : neg_index[l.gen];
}

Word SymAlphabet::normalize(const Word& w) const {
    Word out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(normalize(l));
    return out;
}

static bool cancels(Letter a, Letter b, const InvolutionSet& I) {
    if (a.gen != b.gen) return false;
    if (I.contains(a.gen)) return true; // any adjacent pair on an involution base
    return a.inv != b.inv;
}

Word free_product_reduce(const Word& w, const InvolutionSet& I) {
    Word stack;
    stack.reserve(w.size());
    for (Letter l : w) {
        if (I.contains(l.gen)) l.inv = false;
        if (!stack.empty() && cancels(stack.back(), l, I))
            stack.pop_back();
        else
            stack.push_back(l);
    }
    return stack;
}

Word cyclic_reduce(const Word& w, const InvolutionSet& I) {
    Word r = free_product_reduce(w, I);
    while (r.size() >= 2 && cancels(r.back(), r.front(), I)) {
        r.erase(r.begin());
        r.pop_back();
    }
    return r;
}

bool is_reduced(const Word& w, const InvolutionSet& I) {
    return free_product_reduce(w, I) == w;
}

bool is_cyclically_reduced(const Word& w, const InvolutionSet& I) {
    return cyclic_reduce(w, I) == w;
}

std::vector<Word> rotations(const Word& w) {
    std::set<Word> out;
    if (w.empty()) return {Word{}};
    Word r = w;
    for (size_t i = 0; i < w.size(); ++i) {
        out.insert(r);
        std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    return std::vector<Word>(out.begin(), out.end());
}

bool is_subword_of_rotation(const Word& w, const Word& r) {
    if (w.empty()) return true;
    if (w.size() > r.size()) return false;
    Word doubled = r;
    doubled.insert(doubled.end(), r.begin(), r.end());
    return std::search(doubled.begin(), doubled.end(), w.begin(), w.end()) != doubled.end();
}

InvolutionSet involution_set(const Presentation& p) {
    InvolutionSet I;
    I.member.assign(p.generators.size(), false);
    InvolutionSet empty;
    empty.member.assign(p.generators.size(), false);
    for (const Word& r : p.relators) {
        Word red = free_product_reduce(r, empty);
        if (red.size() != 2) continue;
        if (red[0].gen == red[1].gen && red[0].inv == red[1].inv) I.member[red[0].gen] = true;
    }
    return I;
}

SymAlphabet symmetrized_alphabet(const Presentation& p) {
    InvolutionSet I = involution_set(p);
    SymAlphabet a;
    a.n_gens = (int)p.generators.size();
    a.invol.assign(a.n_gens, false);
    a.pos_index.assign(a.n_gens, -1);
    a.neg_index.assign(a.n_gens, -1);
    for (int g = 0; g < a.n_gens; ++g) a.invol[g] = I.contains(g);
    for (int g = 0; g < a.n_gens; ++g) {
        a.pos_index[g] = (int)a.letters.size();
        a.letters.push_back(Letter(g, false));
    }
    for (int g = 0; g < a.n_gens; ++g) {
        if (a.invol[g]) continue;
        a.neg_index[g] = (int)a.letters.size();
        a.letters.push_back(Letter(g, true));
    }
    return a;
}

static void check_letter(const Presentation& p, Letter l) {
    if (l.gen < 0 || l.gen >= (int)p.generators.size())
        throw UnknownLetter("letter refers to generator #" + std::to_string(l.gen));
}

Presentation tietze_add_product_generator(const Presentation& p, Letter u, Letter v,
                                          const std::string& name) {
    check_letter(p, u);
    check_letter(p, v);
    if (p.generator_index(name) >= 0)
        throw DuplicateGenerator("generator '" + name + "' already declared");
    Presentation q = p;
    int x = (int)q.generators.size();
    q.generators.push_back(name);
    q.relators.push_back(Word{Letter(x, true), u, v});
    return q;
}

std::vector<Presentation> remove_obviously_redundant(const Presentation& p) {
    std::vector<Presentation> out;
    int n = (int)p.generators.size();
    for (int g = 0; g < n; ++g) {
        int total = 0, host = -1;
        for (int r = 0; r < (int)p.relators.size(); ++r)
            for (Letter l : p.relators[r])
                if (l.gen == g) {
                    ++total;
                    host = r;
                }
        if (total != 1) continue;
        Presentation q;
        std::vector<int> remap(n, -1);
        for (int i = 0; i < n; ++i) {
            if (i == g) continue;
            remap[i] = (int)q.generators.size();
            q.generators.push_back(p.generators[i]);
        }
        for (int r = 0; r < (int)p.relators.size(); ++r) {
            if (r == host) continue;
            Word w;
            for (Letter l : p.relators[r]) w.push_back(Letter(remap[l.gen], l.inv));
            q.relators.push_back(std::move(w));
        }
        out.push_back(std::move(q));
    }
    return out;
}

} // namespace ppk
