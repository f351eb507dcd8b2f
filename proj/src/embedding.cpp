#include "ppk/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ppk/cayley.hpp"
#include "ppk/conditions.hpp"
#include "ppk/errors.hpp"
#include "ppk/parse.hpp"

namespace ppk {

namespace {

SymAlphabet alphabet_of(const ColoredGraph& g) {
    SymAlphabet a;
    a.n_gens = (int)g.color_names.size();
    a.invol = std::vector<bool>(g.color_involution.begin(), g.color_involution.end());
    a.pos_index.assign(a.n_gens, -1);
    a.neg_index.assign(a.n_gens, -1);
    for (int c = 0; c < a.n_gens; ++c) {
        a.pos_index[c] = (int)a.letters.size();
        a.letters.push_back(Letter(c, false));
    }
    for (int c = 0; c < a.n_gens; ++c) {
        if (a.invol[c]) continue;
        a.neg_index[c] = (int)a.letters.size();
        a.letters.push_back(Letter(c, true));
    }
    return a;
}

} // namespace

SpinReport check_consistent(const ColoredGraph& g, const RotationSystem& rot) {
    if (!valid_rotation(g, rot)) throw InvalidRotation("check_consistent: invalid rotation");
    SpinReport rep;
    rep.alphabet = alphabet_of(g);
    int m = rep.alphabet.size();

    std::vector<CyclicOrder> spin(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> ring;
        for (int d : rot.rot[v]) ring.push_back(rep.alphabet.index(g.dart_letter(d)));
        std::vector<int> sorted = ring;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < (int)sorted.size(); ++i)
            if (sorted[i] != i) {
                rep.witnesses.push_back({v, "vertex darts do not realize S' exactly once"});
                return rep;
            }
        if ((int)ring.size() != m) {
            rep.witnesses.push_back({v, "vertex degree does not match |S'|"});
            return rep;
        }
        spin[v] = CyclicOrder(std::move(ring));
    }

    std::vector<int> orient(g.n, 0);
    CyclicOrder base = spin[0];
    for (int v = 0; v < g.n; ++v) {
        if (spin[v].same_up_to_rotation(base))
            orient[v] = +1;
        else if (spin[v].same_up_to_rotation(base.reflected()))
            orient[v] = -1;
        else {
            rep.witnesses.push_back({v, "spin is neither the base spin nor its reflection"});
            return rep;
        }
    }

    rep.tau.assign(g.color_names.size(), 0);
    std::vector<int> seen(g.color_names.size(), -1); // -1 unseen, else 0/1
    for (const ColoredEdge& e : g.edges) {
        int same = orient[e.u] == orient[e.v] ? 0 : 1;
        if (seen[e.color] < 0)
            seen[e.color] = same;
        else if (seen[e.color] != same) {
            rep.witnesses.push_back({e.u, "color " + g.color_names[e.color] +
                                              " is neither spin-preserving nor spin-reversing"});
            return rep;
        }
    }
    for (size_t c = 0; c < seen.size(); ++c) rep.tau[c] = seen[c] < 0 ? 0 : (uint8_t)seen[c];
    rep.consistent = true;
    rep.sigma = base.normalized();
    return rep;
}

// ==================== walk crossing ====================

namespace {

// resolve consecutive vertices to the unique connecting edge
int edge_between(const ColoredGraph& g, int u, int v) {
    int found = -1;
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        const ColoredEdge& ed = g.edges[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) {
            if (found >= 0) throw NotAPath("ambiguous edge between consecutive walk vertices");
            found = e;
        }
    }
    if (found < 0) throw NotAPath("consecutive walk vertices are not adjacent");
    return found;
}

int dart_at(const ColoredGraph& g, int edge, int v) {
    return g.edges[edge].u == v ? 2 * edge : 2 * edge + 1;
}

struct WalkContext {
    const ColoredGraph& g;
    const RotationSystem& rot;
    std::vector<int> xpos;        // vertex -> index in X, -1 otherwise
    std::vector<int> xedges;      // X's edges in order
    std::vector<int> xverts;      // X's vertices
    bool closed;

    // side of a non-X dart at the i-th X vertex; nullopt at open endpoints
    std::optional<bool> side(int i, int dart) const {
        int k = (int)xverts.size();
        int back_dart, fwd_dart;
        if (closed) {
            back_dart = dart_at(g, xedges[(i + k - 1) % k], xverts[i]);
            fwd_dart = dart_at(g, xedges[i % k], xverts[i]);
        } else {
            if (i == 0 || i == k - 1) return std::nullopt;
            back_dart = dart_at(g, xedges[i - 1], xverts[i]);
            fwd_dart = dart_at(g, xedges[i], xverts[i]);
        }
        const auto& ring = rot.rot[xverts[i]];
        int n = (int)ring.size();
        int pf = -1, pb = -1, pd = -1;
        for (int t = 0; t < n; ++t) {
            if (ring[t] == fwd_dart) pf = t;
            if (ring[t] == back_dart) pb = t;
            if (ring[t] == dart) pd = t;
        }
        if (pf < 0 || pb < 0 || pd < 0) throw Error("walk side: dart not in rotation");
        int db = (pb + n - pf) % n, dd = (pd + n - pf) % n;
        return dd < db;
    }
};

int count_crossings(const ColoredGraph& g, const RotationSystem& rot, const std::vector<int>& xin,
                    bool x_closed, const std::vector<int>& yin) {
    if (!valid_rotation(g, rot)) throw InvalidRotation("walk_crossing: invalid rotation");
    std::vector<int> x = xin;
    if (x.size() >= 2 && x.front() == x.back()) {
        x.pop_back();
        x_closed = true;
    }
    if (x.empty()) throw NotAPath("empty path");
    WalkContext ctx{g, rot, std::vector<int>(g.n, -1), {}, x, x_closed};
    for (int i = 0; i < (int)x.size(); ++i) {
        if (ctx.xpos[x[i]] >= 0 && !x_closed) throw NotAPath("path repeats a vertex");
        ctx.xpos[x[i]] = i;
    }
    int steps = x_closed ? (int)x.size() : (int)x.size() - 1;
    std::set<int> xedge_set;
    for (int i = 0; i < steps; ++i) {
        int e = edge_between(g, x[i], x[(i + 1) % x.size()]);
        ctx.xedges.push_back(e);
        xedge_set.insert(e);
    }

    std::vector<int> y = yin;
    if (y.size() >= 2 && y.front() == y.back()) y.pop_back();
    if (y.empty()) return 0;
    int ylen = (int)y.size();
    std::vector<int> yedge(ylen);
    for (int i = 0; i < ylen; ++i) yedge[i] = edge_between(g, y[i], y[(i + 1) % ylen]);

    // maximal runs of Y inside X; a run may be a single vertex
    int crossings = 0;
    auto on_x = [&](int v) { return ctx.xpos[v] >= 0; };
    auto x_edge = [&](int e) { return xedge_set.count(e) > 0; };

    // if Y never leaves X there is no attachment at all
    bool all_inside = true;
    for (int i = 0; i < ylen; ++i)
        if (!x_edge(yedge[i])) all_inside = false;
    if (all_inside) return 0;

    for (int i = 0; i < ylen; ++i) {
        // a run starts at position j where edge (j-1) is off X and vertex j on X
        int prev = (i + ylen - 1) % ylen;
        if (x_edge(yedge[prev]) || !on_x(y[i])) continue;
        // walk the run while edges stay on X
        int j = i;
        while (x_edge(yedge[j % ylen])) j = j + 1;
        int entry_vertex = y[i];
        int exit_vertex = y[j % ylen];
        if (!on_x(exit_vertex)) throw Error("walk run left X unexpectedly");
        int e_in = yedge[prev];
        int e_out = yedge[j % ylen];
        auto s1 = ctx.side(ctx.xpos[entry_vertex], dart_at(g, e_in, entry_vertex));
        auto s2 = ctx.side(ctx.xpos[exit_vertex], dart_at(g, e_out, exit_vertex));
        if (s1 && s2 && *s1 != *s2) ++crossings;
    }
    return crossings;
}

} // namespace

bool walk_crossing(const ColoredGraph& g, const RotationSystem& rot, const std::vector<int>& x,
                   const std::vector<int>& y) {
    return count_crossings(g, rot, x, false, y) > 0;
}

int count_walk_crossings_closed(const ColoredGraph& g, const RotationSystem& rot,
                                const std::vector<int>& x, const std::vector<int>& y) {
    return count_crossings(g, rot, x, true, y);
}

// ==================== separators ====================

std::vector<std::pair<int, int>> two_separators(const ColoredGraph& g) {
    if (g.n < 3 || !g.connected()) throw NotTwoConnected("graph is not 2-connected");
    for (int v = 0; v < g.n; ++v)
        if (!connected_without(g, {v})) throw NotTwoConnected("graph has a cutvertex");
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!connected_without(g, {u, v})) out.push_back({u, v});
    return out;
}

bool well_separated(const ColoredGraph& g) {
    auto seps = two_separators(g);
    for (auto [u, v] : seps) {
        bool adjacent = false;
        for (const ColoredEdge& e : g.edges)
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) adjacent = true;
        if (!adjacent) return false;
    }
    return true;
}

bool hinge_edge_separates(const ColoredGraph& g, int edge_id) {
    const ColoredEdge& e = g.edges[edge_id];
    if (e.u == e.v) return false; // loops are not hinges
    if (connected_without(g, {e.u, e.v})) return false;
    // a bridge separates without its endvertices being removed; a hinge does not
    std::vector<char> skip_edge(g.edges.size(), 0);
    skip_edge[edge_id] = 1;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{e.u};
    seen[e.u] = 1;
    int count = 1;
    auto darts = g.incident_darts();
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int d : darts[v]) {
            if (skip_edge[d / 2]) continue;
            int w = g.dart_other(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    bool bridge = count != g.n;
    return !bridge;
}

bool hinge_separation(const ColoredGraph& g, const std::vector<int>& hinge_colors) {
    std::set<int> colors(hinge_colors.begin(), hinge_colors.end());
    for (int e = 0; e < (int)g.edges.size(); ++e)
        if (colors.count(g.edges[e].color) && !hinge_edge_separates(g, e)) return false;
    return true;
}

// ==================== extraction ====================

Extraction extract_special_presentation(const ColoredGraph& g, const RotationSystem& rot) {
    if (!g.connected()) throw NotPlanar("extraction requires a connected graph");
    if (!valid_rotation(g, rot)) throw InvalidRotation("extraction: invalid rotation");
    if (!rotation_is_planar(g, rot)) throw NotPlanar("rotation system is not a sphere embedding");

    int kappa = vertex_connectivity_at_most_3(g);
    if (kappa < 3) {
        // cycles and smaller degenerate graphs still have essentially unique
        // embeddings; anything else with kappa <= 2 is rejected
        bool degenerate = true;
        for (int d : g.degrees())
            if (d > 2) degenerate = false;
        if (!degenerate)
            throw NotThreeConnected("extraction requires 3-connectivity (or a cycle graph)");
    }

    SpinReport rep = check_consistent(g, rot);
    if (!rep.consistent)
        throw NotConsistent("embedding is not consistent: " +
                            (rep.witnesses.empty() ? std::string("?") : rep.witnesses[0].second));

    Presentation p;
    p.generators = g.color_names;
    InvolutionSet I;
    I.member = std::vector<bool>(g.color_involution.begin(), g.color_involution.end());

    auto normalize = [&](Word w) {
        for (Letter& l : w)
            if (I.contains(l.gen)) l.inv = false;
        return w;
    };
    auto class_key = [&](const Word& w) {
        // canonical form up to rotation and inversion
        std::vector<std::vector<int>> keys;
        for (const Word& cand : {w, normalize(inverse_word(w))}) {
            Word cur = cand;
            for (size_t i = 0; i < cur.size(); ++i) {
                std::vector<int> k;
                for (Letter l : cur) k.push_back(2 * l.gen + (l.inv ? 1 : 0));
                keys.push_back(std::move(k));
                std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            }
        }
        return *std::min_element(keys.begin(), keys.end());
    };

    std::set<std::vector<int>> seen;
    for (int c = 0; c < (int)p.generators.size(); ++c) {
        if (!I.contains(c)) continue;
        Word sq{Letter(c, false), Letter(c, false)};
        seen.insert(class_key(sq));
        p.relators.push_back(sq);
    }
    std::vector<std::pair<std::vector<int>, Word>> face_words;
    for (const auto& face : trace_faces(g, rot)) {
        Word w;
        for (int d : face) w.push_back(g.dart_letter(d));
        w = normalize(w);
        auto key = class_key(w);
        if (seen.insert(key).second) face_words.push_back({key, w});
    }
    std::sort(face_words.begin(), face_words.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, w] : face_words) p.relators.push_back(w);

    Extraction out;
    out.presentation = p;
    out.decoration.alphabet = symmetrized_alphabet(p);
    if (!(out.decoration.alphabet == rep.alphabet))
        throw Error("extraction: alphabet mismatch between graph and presentation");
    out.decoration.sigma = rep.sigma;
    out.decoration.tau = rep.tau;

    // verify: the output is accepted and rebuilds a color-isomorphic graph
    Verdict v = check_special(out.presentation, out.decoration);
    if (!v.accepted)
        throw Error("extraction postcondition failed: " + v.failures[0].condition + ": " +
                    v.failures[0].witness);
    CosetTable t = coset_enumerate(p, 10 * g.n + 100);
    if (!t.complete || t.coset_count != g.n)
        throw Error("extraction postcondition failed: coset enumeration does not reproduce |V|");
    ColoredGraph rebuilt = build_cayley_graph(p, t);
    if (!color_isomorphic(g, rebuilt))
        throw Error("extraction postcondition failed: rebuilt graph is not color-isomorphic");
    return out;
}

} // namespace ppk
