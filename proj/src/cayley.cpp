#include "ppk/cayley.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

// Todd-Coxeter working state. Columns: 2g = generator g, 2g+1 = its inverse.
struct TC {
    int ncols;
    int max_cosets;
    long max_created;
    std::vector<std::vector<int>> tab; // [col][coset]
    std::vector<int> parent;           // union-find; live iff parent[i] == i
    std::deque<int> dead;              // coincidence queue
    int live = 0;
    bool overflow = false;

    explicit TC(int ngens, int maxc) : ncols(2 * ngens), max_cosets(maxc) {
        max_created = 50L * maxc + 1000;
        tab.assign(ncols, {});
        new_coset();
    }

    int size() const { return (int)parent.size(); }

    int new_coset() {
        if (live >= max_cosets || (long)size() >= max_created) {
            overflow = true;
            return -1;
        }
        int c = size();
        parent.push_back(c);
        for (auto& col : tab) col.push_back(-1);
        ++live;
        return c;
    }

    int rep(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }

    static int inv_col(int col) { return col ^ 1; }

    void set(int c, int col, int d) {
        tab[col][c] = d;
        tab[inv_col(col)][d] = c;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        --live;
        dead.push_back(b);
    }

    void process_coincidences() {
        while (!dead.empty()) {
            int y = dead.front();
            dead.pop_front();
            for (int col = 0; col < ncols; ++col) {
                int d = tab[col][y];
                if (d < 0) continue;
                if (tab[inv_col(col)][d] == y) tab[inv_col(col)][d] = -1;
                tab[col][y] = -1;
                int mu = rep(y), nu = rep(d);
                if (tab[col][mu] >= 0)
                    merge(nu, tab[col][mu]);
                else if (tab[inv_col(col)][nu] >= 0)
                    merge(mu, tab[inv_col(col)][nu]);
                else
                    set(mu, col, nu);
            }
        }
    }

    // scan relator (as column word) at coset c, defining cosets as needed
    bool scan_and_fill(int c, const std::vector<int>& w) {
        if (w.empty()) return true;
        int f = rep(c), b = rep(c);
        int i = 0, j = (int)w.size() - 1;
        while (true) {
            while (i <= j && tab[w[i]][f] >= 0) f = rep(tab[w[i]][f]), ++i;
            if (i > j) {
                if (f != b) {
                    merge(f, b);
                    process_coincidences();
                }
                return true;
            }
            while (j >= i && tab[inv_col(w[j])][b] >= 0) b = rep(tab[inv_col(w[j])][b]), --j;
            if (j < i) {
                merge(f, b);
                process_coincidences();
                return true;
            }
            if (i == j) {
                set(f, w[i], b);
                return true;
            }
            int n = new_coset();
            if (n < 0) return false;
            set(f, w[i], n);
            f = n;
            ++i;
        }
    }
};

} // namespace

CosetTable coset_enumerate(const Presentation& p, int max_cosets) {
    int ngens = (int)p.generators.size();
    TC tc(ngens, std::max(1, max_cosets));
    std::vector<std::vector<int>> rel_cols;
    for (const Word& r : p.relators) {
        std::vector<int> cols;
        for (Letter l : r) cols.push_back(2 * l.gen + (l.inv ? 1 : 0));
        rel_cols.push_back(std::move(cols));
    }

    bool ok = true;
    for (int c = 0; ok && c < tc.size(); ++c) {
        if (tc.rep(c) != c) continue;
        for (const auto& w : rel_cols) {
            if (tc.rep(c) != c) break; // died during a scan
            if (!tc.scan_and_fill(c, w)) {
                ok = false;
                break;
            }
        }
        if (!ok) break;
        if (tc.rep(c) != c) continue;
        for (int col = 0; col < tc.ncols; ++col) {
            if (tc.rep(c) != c) break;
            if (tc.tab[col][c] >= 0) continue;
            int n = tc.new_coset();
            if (n < 0) {
                ok = false;
                break;
            }
            tc.set(c, col, n);
        }
    }

    CosetTable t;
    t.n_generators = ngens;
    // compress live cosets, identity first
    std::vector<int> remap(tc.size(), -1);
    int live = 0;
    for (int i = 0; i < tc.size(); ++i)
        if (tc.rep(i) == i) remap[i] = live++;
    t.coset_count = live;
    t.fwd.assign(ngens, std::vector<int>(live, -1));
    t.bwd.assign(ngens, std::vector<int>(live, -1));
    for (int i = 0; i < tc.size(); ++i) {
        if (tc.rep(i) != i) continue;
        for (int g = 0; g < ngens; ++g) {
            int f = tc.tab[2 * g][i];
            int b = tc.tab[2 * g + 1][i];
            if (f >= 0) t.fwd[g][remap[i]] = remap[tc.rep(f)];
            if (b >= 0) t.bwd[g][remap[i]] = remap[tc.rep(b)];
        }
    }
    bool filled = true;
    for (int g = 0; g < ngens; ++g)
        for (int c = 0; c < live; ++c)
            if (t.fwd[g][c] < 0 || t.bwd[g][c] < 0) filled = false;
    t.complete = ok && filled;
    return t;
}

ColoredGraph build_cayley_graph(const Presentation& p, const CosetTable& t) {
    if (!t.complete) throw IncompleteTable("build_cayley_graph: coset table is incomplete");
    InvolutionSet I = involution_set(p);
    ColoredGraph g;
    g.n = t.coset_count;
    g.color_names = p.generators;
    g.color_involution.assign(p.generators.size(), false);
    for (int c = 0; c < (int)p.generators.size(); ++c) g.color_involution[c] = I.contains(c);

    for (int c = 0; c < (int)p.generators.size(); ++c) {
        for (int v = 0; v < g.n; ++v) {
            int w = t.fwd[c][v];
            if (I.contains(c)) {
                if (v < w) g.edges.push_back({v, w, c, true, false});
                if (v == w) g.edges.push_back({v, w, c, true, true}); // fixed point
            } else {
                g.edges.push_back({v, w, c, false, v == w});
            }
        }
    }
    return g;
}

ColoredGraph ball(const ColoredGraph& g, int v, int r, std::vector<int>* vertex_map) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[v] = 0;
    q.push(v);
    auto darts = g.incident_darts();
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (dist[x] == r) continue;
        for (int d : darts[x]) {
            int y = g.dart_other(d);
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    std::vector<int> keep;
    std::vector<int> remap(g.n, -1);
    for (int x = 0; x < g.n; ++x)
        if (dist[x] >= 0) {
            remap[x] = (int)keep.size();
            keep.push_back(x);
        }
    ColoredGraph b;
    b.n = (int)keep.size();
    b.color_names = g.color_names;
    b.color_involution = g.color_involution;
    for (const ColoredEdge& e : g.edges)
        if (remap[e.u] >= 0 && remap[e.v] >= 0)
            b.edges.push_back({remap[e.u], remap[e.v], e.color, e.undirected, e.degenerate});
    if (vertex_map) *vertex_map = keep;
    return b;
}

bool relators_close(const Presentation& p, const CosetTable& t) {
    for (int c = 0; c < t.coset_count; ++c)
        for (const Word& r : p.relators) {
            int v = c;
            for (Letter l : r) {
                v = t.act(v, l);
                if (v < 0) return false;
            }
            if (v != c) return false;
        }
    return true;
}

namespace {

struct Gf2Basis {
    std::vector<std::vector<uint64_t>> rows; // reduced echelon-ish
    int bits;

    explicit Gf2Basis(int nbits) : bits(nbits) {}

    bool insert(std::vector<uint64_t> v) {
        for (auto& row : rows) {
            int lead = leading(row);
            if (lead >= 0 && get(v, lead)) xor_into(v, row);
        }
        if (leading(v) < 0) return false;
        rows.push_back(std::move(v));
        return true;
    }
    static int leading(const std::vector<uint64_t>& v) {
        for (int w = 0; w < (int)v.size(); ++w)
            if (v[w]) return 64 * w + __builtin_ctzll(v[w]);
        return -1;
    }
    static bool get(const std::vector<uint64_t>& v, int i) { return (v[i / 64] >> (i % 64)) & 1; }
    static void xor_into(std::vector<uint64_t>& v, const std::vector<uint64_t>& w) {
        for (size_t i = 0; i < v.size(); ++i) v[i] ^= w[i];
    }
};

} // namespace

bool relators_span_cycle_space(const Presentation& p, const CosetTable& t, const ColoredGraph& g) {
    // edge lookup: for color c at vertex v, the edge traversed by letter c
    int nc = (int)p.generators.size();
    std::vector<std::vector<int>> out_edge(nc, std::vector<int>(g.n, -1));
    std::vector<std::vector<int>> in_edge(nc, std::vector<int>(g.n, -1));
    for (int e = 0; e < (int)g.edges.size(); ++e) {
        const ColoredEdge& ed = g.edges[e];
        out_edge[ed.color][ed.u] = e;
        in_edge[ed.color][ed.v] = e;
        if (ed.undirected) {
            out_edge[ed.color][ed.v] = e;
            in_edge[ed.color][ed.u] = e;
        }
    }
    int m = (int)g.edges.size();
    int words = (m + 63) / 64;
    Gf2Basis basis(m);
    int rank = 0;
    for (int v = 0; v < g.n; ++v) {
        for (const Word& r : p.relators) {
            std::vector<uint64_t> vec(words, 0);
            int x = v;
            for (Letter l : r) {
                int e = l.inv ? in_edge[l.gen][x] : out_edge[l.gen][x];
                if (g.color_involution[l.gen]) e = out_edge[l.gen][x];
                if (e < 0) return false;
                vec[e / 64] ^= (uint64_t)1 << (e % 64);
                x = t.act(x, l);
            }
            if (x != v) return false;
            if (basis.insert(std::move(vec))) ++rank;
        }
    }
    int expected = m - g.n + 1; // connected
    return rank == expected;
}

} // namespace ppk
