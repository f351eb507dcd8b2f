#include "ppk/decoration_io.hpp"

#include <algorithm>

#include "json.hpp"
#include "ppk/errors.hpp"
#include "ppk/parse.hpp"

namespace ppk {

namespace {

using json = nlohmann::ordered_json;

int sym_index_of(const SymAlphabet& a, const Presentation& p, const std::string& name) {
    // letters written as the term grammar: "c" or "c^-1"
    Word w = parse_word(name, p);
    if (w.size() != 1) throw InputError("decoration: '" + name + "' is not a single letter");
    return a.index(w[0]);
}

std::string sym_text(const SymAlphabet& a, const Presentation& p, int idx) {
    return format_letter(a.letter(idx), p);
}

// fill mu entries that are forced because the inverse letter lies in exactly
// one block
void complete_mu(GenericDecoration& d) {
    const SpinStructure& c = d.structure;
    const SymAlphabet& a = c.alphabet;
    for (int g = 0; g < a.n_gens; ++g) {
        int pos = a.pos_index[g];
        int neg = a.is_involution(g) ? pos : a.neg_index[g];
        std::vector<int> targets;
        for (int b = 0; b < c.block_count(); ++b)
            if (c.block_has(b, neg)) targets.push_back(b);
        for (int b = 0; b < c.block_count(); ++b) {
            if (!c.block_has(b, pos)) continue;
            if (d.mu[g].count(b)) continue;
            if (targets.size() == 1) d.mu[g][b] = targets[0];
        }
    }
}

} // namespace

DecorationFile read_decoration_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw InputError(std::string("decoration JSON: ") + e.what());
    }
    DecorationFile out;
    if (!j.contains("presentation") || !j["presentation"].is_string())
        throw InputError("decoration JSON: missing \"presentation\"");
    out.presentation = parse_presentation(j["presentation"].get<std::string>());
    const Presentation& p = out.presentation;
    SymAlphabet a = symmetrized_alphabet(p);

    if (!j.contains("sigma")) throw InputError("decoration JSON: missing \"sigma\"");

    if (!j.contains("blocks")) {
        SpecialDecoration d;
        d.alphabet = a;
        for (const auto& item : j["sigma"]) d.sigma.ring.push_back(sym_index_of(a, p, item.get<std::string>()));
        d.tau.assign(a.n_gens, 0);
        if (j.contains("tau"))
            for (auto& [k, v] : j["tau"].items()) {
                int g = p.generator_index(k);
                if (g < 0) throw InputError("decoration JSON: tau names unknown generator " + k);
                d.tau[g] = v.get<int>() ? 1 : 0;
            }
        out.special = std::move(d);
        return out;
    }

    out.generic = true;
    GenericDecoration d;
    d.structure.alphabet = a;
    for (const auto& blk : j["blocks"]) {
        std::vector<int> b;
        for (const auto& item : blk) b.push_back(sym_index_of(a, p, item.get<std::string>()));
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        d.structure.blocks.push_back(std::move(b));
    }
    int k = d.structure.block_count();
    for (const auto& ring : j["sigma"]) {
        CyclicOrder o;
        for (const auto& item : ring) o.ring.push_back(sym_index_of(a, p, item.get<std::string>()));
        d.sigma.push_back(std::move(o));
    }
    d.tau.assign(a.n_gens, std::vector<uint8_t>(k, 0));
    if (j.contains("tau")) {
        if (!j["tau"].is_array() || (int)j["tau"].size() != k)
            throw InputError("decoration JSON: tau must list one object per block");
        for (int b = 0; b < k; ++b)
            for (auto& [key, v] : j["tau"][b].items()) {
                int g = p.generator_index(key);
                if (g < 0) throw InputError("decoration JSON: tau names unknown generator " + key);
                d.tau[g][b] = v.get<int>() ? 1 : 0;
            }
    }
    d.mu.assign(a.n_gens, {});
    if (j.contains("mu"))
        for (auto& [key, entry] : j["mu"].items()) {
            int g = p.generator_index(key);
            if (g < 0) throw InputError("decoration JSON: mu names unknown generator " + key);
            for (auto& [from, to] : entry.items()) d.mu[g][std::stoi(from)] = to.get<int>();
        }
    complete_mu(d);
    out.generic_decoration = std::move(d);
    return out;
}

std::string write_decoration_json(const Presentation& p, const SpecialDecoration& d) {
    json j;
    j["presentation"] = format_presentation(p);
    json sigma = json::array();
    for (int idx : d.sigma.ring) sigma.push_back(sym_text(d.alphabet, p, idx));
    j["sigma"] = sigma;
    json tau = json::object();
    for (int g = 0; g < d.alphabet.n_gens; ++g) tau[p.generators[g]] = (int)d.tau[g];
    j["tau"] = tau;
    return j.dump();
}

std::string write_decoration_json(const Presentation& p, const GenericDecoration& d) {
    const SymAlphabet& a = d.structure.alphabet;
    json j;
    j["presentation"] = format_presentation(p);
    json blocks = json::array();
    for (const auto& blk : d.structure.blocks) {
        json b = json::array();
        for (int idx : blk) b.push_back(sym_text(a, p, idx));
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    json sigma = json::array();
    for (const CyclicOrder& o : d.sigma) {
        json ring = json::array();
        for (int idx : o.ring) ring.push_back(sym_text(a, p, idx));
        sigma.push_back(ring);
    }
    j["sigma"] = sigma;
    json tau = json::array();
    for (int b = 0; b < d.structure.block_count(); ++b) {
        json tb = json::object();
        for (int g = 0; g < a.n_gens; ++g) {
            bool rel = d.structure.block_has(b, a.pos_index[g]) ||
                       (!a.is_involution(g) && d.structure.block_has(b, a.neg_index[g]));
            if (rel) tb[p.generators[g]] = (int)d.tau[g][b];
        }
        tau.push_back(tb);
    }
    j["tau"] = tau;
    json mu = json::object();
    for (int g = 0; g < a.n_gens; ++g) {
        if (d.mu[g].empty()) continue;
        json entry = json::object();
        for (auto [from, to] : d.mu[g]) entry[std::to_string(from)] = to;
        mu[p.generators[g]] = entry;
    }
    j["mu"] = mu;
    return j.dump();
}

std::string verdict_json(const Verdict& v) {
    json j;
    j["kind"] = v.accepted ? "accepted" : "rejected";
    json fails = json::array();
    for (const Failure& f : v.failures) {
        json jf;
        jf["condition"] = f.condition;
        jf["witness"] = f.witness;
        fails.push_back(jf);
    }
    j["failures"] = fails;
    return j.dump();
}

std::string alignment_json(const Alignment& a, const Presentation& p) {
    json j;
    j["shared"] = a.shared.empty() ? std::string() : format_word(a.shared, p);
    j["wBranchIn"] = format_letter(a.w_branch_in, p);
    j["wBranchOut"] = format_letter(a.w_branch_out, p);
    j["zBranchIn"] = format_letter(a.z_branch_in, p);
    j["zBranchOut"] = format_letter(a.z_branch_out, p);
    j["wOffset"] = a.w_offset;
    j["zOffset"] = a.z_offset;
    j["zDirection"] = a.z_inverted ? "inverted" : "forward";
    return j.dump();
}

} // namespace ppk
