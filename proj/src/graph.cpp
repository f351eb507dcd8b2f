#include "ppk/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "ppk/errors.hpp"

namespace ppk {

std::vector<std::vector<int>> ColoredGraph::incident_darts() const {
    std::vector<std::vector<int>> out(n);
    for (int e = 0; e < (int)edges.size(); ++e) {
        out[edges[e].u].push_back(2 * e);
        out[edges[e].v].push_back(2 * e + 1);
    }
    return out;
}

std::vector<int> ColoredGraph::degrees() const {
    std::vector<int> deg(n, 0);
    for (const ColoredEdge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

bool ColoredGraph::connected() const {
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    auto darts = incident_darts();
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : darts[v]) {
            int w = dart_other(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n;
}

ColorAction::ColorAction(const ColoredGraph& g) {
    int nc = (int)g.color_names.size();
    fwd.assign(nc, std::vector<int>(g.n, -1));
    bwd.assign(nc, std::vector<int>(g.n, -1));
    auto put = [&](std::vector<int>& col, int v, int w) {
        if (col[v] >= 0 && col[v] != w)
            throw InputError("graph does not define a unique color action");
        col[v] = w;
    };
    for (const ColoredEdge& e : g.edges) {
        if (e.undirected) {
            put(fwd[e.color], e.u, e.v);
            put(fwd[e.color], e.v, e.u);
            put(bwd[e.color], e.u, e.v);
            put(bwd[e.color], e.v, e.u);
        } else {
            put(fwd[e.color], e.u, e.v);
            put(bwd[e.color], e.v, e.u);
        }
    }
    for (int c = 0; c < nc; ++c)
        for (int v = 0; v < g.n; ++v)
            if (fwd[c][v] < 0 || bwd[c][v] < 0)
                throw InputError("graph color action is not total");
}

bool color_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
    if (a.n != b.n || a.color_names.size() != b.color_names.size()) return false;
    if (a.color_names != b.color_names) return false;
    ColorAction aa(a), bb(b);
    // a color isomorphism of Cayley graphs may be normalized to fix the base
    // vertex; it is then forced along every edge
    std::vector<int> phi(a.n, -1);
    phi[0] = 0;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int c = 0; c < (int)a.color_names.size(); ++c) {
            for (bool inv : {false, true}) {
                Letter l(c, inv);
                int w = aa.step(v, l);
                int w2 = bb.step(phi[v], l);
                if (phi[w] < 0) {
                    phi[w] = w2;
                    q.push(w);
                } else if (phi[w] != w2) {
                    return false;
                }
            }
        }
    }
    for (int v = 0; v < a.n; ++v)
        if (phi[v] < 0) return false; // disconnected
    // edge multiset must be preserved (covers undirected/degenerate flags)
    auto key = [](const ColoredGraph& g, const std::vector<int>& map) {
        std::vector<std::tuple<int, int, int, bool, bool>> k;
        for (const ColoredEdge& e : g.edges) {
            int u = map.empty() ? e.u : map[e.u];
            int v = map.empty() ? e.v : map[e.v];
            if (e.undirected && u > v) std::swap(u, v);
            k.push_back({u, v, e.color, e.undirected, e.degenerate});
        }
        std::sort(k.begin(), k.end());
        return k;
    };
    return key(a, phi) == key(b, {});
}

bool connected_without(const ColoredGraph& g, const std::vector<int>& removed) {
    std::vector<char> gone(g.n, 0);
    for (int v : removed) gone[v] = 1;
    int start = -1, total = 0;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) {
            ++total;
            if (start < 0) start = v;
        }
    if (total == 0) return true;
    auto darts = g.incident_darts();
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int count = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int d : darts[v]) {
            int w = g.dart_other(d);
            if (!seen[w] && !gone[w]) {
                seen[w] = 1;
                ++count;
                q.push(w);
            }
        }
    }
    return count == total;
}

int vertex_connectivity_at_most_3(const ColoredGraph& g) {
    if (!g.connected()) return 0;
    for (int v = 0; v < g.n; ++v)
        if (!connected_without(g, {v})) return 1;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!connected_without(g, {u, v})) return 2;
    return 3;
}

// ==================== formats ====================

void write_dot(const ColoredGraph& g, std::ostream& os) {
    os << "digraph cayley {\n";
    os << "  // vertices: " << g.n << "\n";
    for (int v = 0; v < g.n; ++v) os << "  " << v << ";\n";
    for (const ColoredEdge& e : g.edges) {
        os << "  " << e.u << " -> " << e.v << " [color=" << g.color_names[e.color];
        if (e.undirected) os << ", dir=none";
        if (e.degenerate) os << ", degenerate=true";
        if (g.color_involution[e.color]) os << ", involution=true";
        os << "];\n";
    }
    os << "}\n";
}

void write_graphml(const ColoredGraph& g, std::ostream& os) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    os << "  <key id=\"color\" for=\"edge\" attr.name=\"color\" attr.type=\"string\"/>\n";
    os << "  <key id=\"undirected\" for=\"edge\" attr.name=\"undirected\" attr.type=\"boolean\"/>\n";
    os << "  <graph id=\"cayley\" edgedefault=\"directed\">\n";
    for (int v = 0; v < g.n; ++v) os << "    <node id=\"n" << v << "\"/>\n";
    for (const ColoredEdge& e : g.edges) {
        os << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\">"
           << "<data key=\"color\">" << g.color_names[e.color] << "</data>"
           << "<data key=\"undirected\">" << (e.undirected ? "true" : "false") << "</data>"
           << "</edge>\n";
    }
    os << "  </graph>\n";
    os << "</graphml>\n";
}

namespace {

void strip(std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    size_t e = s.find_last_not_of(" \t\r\n");
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

} // namespace

ColoredGraph read_dot(std::istream& is) {
    ColoredGraph g;
    std::map<std::string, int> colors;
    std::string line;
    bool in_graph = false;
    int max_vertex = -1;
    while (std::getline(is, line)) {
        size_t comment = line.find("//");
        if (comment != std::string::npos) line = line.substr(0, comment);
        strip(line);
        if (line.empty()) continue;
        if (!in_graph) {
            if (line.rfind("digraph", 0) == 0) in_graph = true;
            else throw InputError("dot: expected 'digraph'");
            continue;
        }
        if (line == "}") break;
        if (line.back() == ';') line.pop_back();
        size_t arrow = line.find("->");
        if (arrow == std::string::npos) {
            // bare vertex
            try {
                max_vertex = std::max(max_vertex, std::stoi(line));
            } catch (...) {
                throw InputError("dot: cannot parse vertex line '" + line + "'");
            }
            continue;
        }
        std::string us = line.substr(0, arrow);
        std::string rest = line.substr(arrow + 2);
        strip(us);
        std::string vs = rest;
        std::string attrs;
        size_t br = rest.find('[');
        if (br != std::string::npos) {
            vs = rest.substr(0, br);
            attrs = rest.substr(br + 1);
            size_t close = attrs.find(']');
            if (close == std::string::npos) throw InputError("dot: unterminated attribute list");
            attrs = attrs.substr(0, close);
        }
        strip(vs);
        ColoredEdge e;
        try {
            e.u = std::stoi(us);
            e.v = std::stoi(vs);
        } catch (...) {
            throw InputError("dot: cannot parse edge '" + line + "'");
        }
        std::string color;
        bool involution = false;
        std::stringstream as(attrs);
        std::string item;
        while (std::getline(as, item, ',')) {
            size_t eq = item.find('=');
            if (eq == std::string::npos) continue;
            std::string k = item.substr(0, eq), v = item.substr(eq + 1);
            strip(k);
            strip(v);
            if (k == "color") color = v;
            if (k == "dir" && v == "none") e.undirected = true;
            if (k == "degenerate" && v == "true") e.degenerate = true;
            if (k == "involution" && v == "true") involution = true;
        }
        if (color.empty()) throw InputError("dot: edge without color attribute");
        auto it = colors.find(color);
        if (it == colors.end()) {
            it = colors.insert({color, (int)g.color_names.size()}).first;
            g.color_names.push_back(color);
            g.color_involution.push_back(false);
        }
        e.color = it->second;
        if (involution || e.undirected) g.color_involution[e.color] = true;
        max_vertex = std::max({max_vertex, e.u, e.v});
        g.edges.push_back(e);
    }
    g.n = max_vertex + 1;
    return g;
}

} // namespace ppk
