#include <set>

#include "doctest.h"
#include "ppk/cayley.hpp"
#include "ppk/errors.hpp"
#include "ppk/parse.hpp"
#include "testsupport.hpp"

using namespace ppk;

TEST_CASE("coset counts: anchors") {
    // the one-element group
    CosetTable t1 = coset_enumerate(parse_presentation("< a, b | a^2, b^3, a b^-1 >"), 100);
    CHECK(t1.complete);
    CHECK(t1.coset_count == 1);

    // prism: Z4 x Z2
    CosetTable t2 = coset_enumerate(ppktest::prism_presentation(), 100);
    CHECK(t2.complete);
    CHECK(t2.coset_count == 8);

    CosetTable t3 = coset_enumerate(parse_presentation("< a | a^5 >"), 100);
    CHECK(t3.complete);
    CHECK(t3.coset_count == 5);
}

TEST_CASE("coset counts: more known orders") {
    struct Case {
        const char* text;
        int order;
    };
    for (Case c : {Case{"< a | a^7 >", 7},
                   Case{"< a, b | a^2, b^2, abab >", 4},             // Z2 x Z2
                   Case{"< a, b | a^3, b^2, abab >", 6},             // S3
                   Case{"< a, b | a^4, b^2, abab >", 8},             // D4
                   Case{"< a, b | a^5, b^5, a^2 b^-1 >", 5},         // Z5 (K5 circulant)
                   Case{"< a, b | a^4, a^2 b^-2, a b a b^-1 >", 8},  // quaternions
                   Case{"< a, b | a^2, b^3, ababab >", 12},          // A4-ish triangle group
                   Case{"< a | a >", 1}}) {
        CAPTURE(c.text);
        CosetTable t = coset_enumerate(parse_presentation(c.text), 2000);
        CHECK(t.complete);
        CHECK(t.coset_count == c.order);
    }
}

TEST_CASE("incomplete on infinite groups") {
    CosetTable t = coset_enumerate(parse_presentation("< a, b | >"), 50);
    CHECK_FALSE(t.complete);
    CosetTable z = coset_enumerate(parse_presentation("< a | >"), 50);
    CHECK_FALSE(z.complete);
    CHECK_THROWS_AS(build_cayley_graph(parse_presentation("< a | >"), z), IncompleteTable);
}

TEST_CASE("relator closure") {
    Presentation p = ppktest::prism_presentation();
    CosetTable t = coset_enumerate(p, 100);
    CHECK(relators_close(p, t));
}

TEST_CASE("prism graph shape") {
    Presentation p = ppktest::prism_presentation();
    CosetTable t = coset_enumerate(p, 100);
    ColoredGraph g = build_cayley_graph(p, t);
    CHECK(g.n == 8);
    int undirected_b = 0, directed_a = 0;
    for (const ColoredEdge& e : g.edges) {
        if (e.undirected) ++undirected_b;
        else ++directed_a;
        CHECK_FALSE(e.degenerate);
    }
    CHECK(undirected_b == 4);
    CHECK(directed_a == 8);
    // 3-regular counting edge-ends
    for (int d : g.degrees()) CHECK(d == 3);
    CHECK(g.connected());
}

TEST_CASE("single vertex with loops") {
    Presentation p = parse_presentation("< a, b | a^2, b^3, a b^-1 >");
    CosetTable t = coset_enumerate(p, 100);
    ColoredGraph g = build_cayley_graph(p, t);
    CHECK(g.n == 1);
    REQUIRE(g.edges.size() == 2);
    for (const ColoredEdge& e : g.edges) CHECK(e.degenerate);
}

TEST_CASE("triangle") {
    Presentation p = parse_presentation("< a | a^3 >");
    CosetTable t = coset_enumerate(p, 100);
    ColoredGraph g = build_cayley_graph(p, t);
    CHECK(g.n == 3);
    CHECK(g.edges.size() == 3);
    for (const ColoredEdge& e : g.edges) {
        CHECK_FALSE(e.undirected);
        CHECK_FALSE(e.degenerate);
    }
}

TEST_CASE("degree invariant") {
    for (const char* text : {"< a, b | a^4, b^2, a b a^-1 b >", "< a, b | a^3, b^2, abab >",
                             "< a, b | a^2, b^2, abab >", "< a | a^6 >"}) {
        Presentation p = parse_presentation(text);
        InvolutionSet I = involution_set(p);
        int ninv = 0;
        for (bool b : I.member) ninv += b;
        int expect = 2 * ((int)p.generators.size() - ninv) + ninv;
        CosetTable t = coset_enumerate(p, 1000);
        REQUIRE(t.complete);
        ColoredGraph g = build_cayley_graph(p, t);
        bool degenerate = false;
        for (const ColoredEdge& e : g.edges) degenerate |= e.degenerate;
        if (degenerate) continue;
        for (int d : g.degrees()) CHECK(d == expect);
    }
}

TEST_CASE("vertex transitivity: bfs label trees agree") {
    Presentation p = ppktest::prism_presentation();
    CosetTable t = coset_enumerate(p, 100);
    // canonical serialization of the radius-2 action tree from v
    auto certificate = [&](int v) {
        std::vector<int> order;
        std::vector<int> seen(t.coset_count, -1);
        std::vector<int> frontier{v};
        seen[v] = 0;
        std::vector<int> cert;
        for (int depth = 0; depth < 2; ++depth) {
            std::vector<int> next;
            for (int x : frontier)
                for (int gidx = 0; gidx < t.n_generators; ++gidx)
                    for (bool inv : {false, true}) {
                        int y = t.act(x, Letter(gidx, inv));
                        cert.push_back(seen[y] == -1 ? -1 : seen[y]);
                        if (seen[y] == -1) {
                            seen[y] = (int)next.size() + 100 * (depth + 1);
                            next.push_back(y);
                        }
                    }
            frontier = next;
        }
        return cert;
    };
    auto base = certificate(0);
    for (int v = 1; v < t.coset_count; ++v) CHECK(certificate(v) == base);
}

TEST_CASE("cycle space spanned by relator walks") {
    for (const char* text : {"< a, b | a^4, b^2, a b a^-1 b >", "< a | a^5 >",
                             "< a, b | a^3, b^2, abab >", "< a, b | a^2, b^2, abab >"}) {
        CAPTURE(text);
        Presentation p = parse_presentation(text);
        CosetTable t = coset_enumerate(p, 1000);
        REQUIRE(t.complete);
        ColoredGraph g = build_cayley_graph(p, t);
        CHECK(relators_span_cycle_space(p, t, g));
    }
}

TEST_CASE("ball") {
    Presentation p = ppktest::prism_presentation();
    CosetTable t = coset_enumerate(p, 100);
    ColoredGraph g = build_cayley_graph(p, t);
    ColoredGraph b0 = ball(g, 0, 0);
    CHECK(b0.n == 1);
    CHECK(b0.edges.empty());
    ColoredGraph b3 = ball(g, 0, 3);
    CHECK(b3.n == 8); // cube diameter 3
    CHECK(b3.edges.size() == g.edges.size());
    Presentation tri = parse_presentation("< a | a^3 >");
    CosetTable tt = coset_enumerate(tri, 10);
    ColoredGraph tg = build_cayley_graph(tri, tt);
    CHECK(ball(tg, 0, 1).n == 3);
}

TEST_CASE("color isomorphism") {
    Presentation p = ppktest::prism_presentation();
    CosetTable t = coset_enumerate(p, 100);
    ColoredGraph g1 = build_cayley_graph(p, t);
    ColoredGraph g2 = build_cayley_graph(p, t);
    CHECK(color_isomorphic(g1, g2));
    Presentation q = parse_presentation("< a, b | a^4, b^2, abab >"); // D4 instead
    CosetTable tq = coset_enumerate(q, 100);
    ColoredGraph g3 = build_cayley_graph(q, tq);
    CHECK_FALSE(color_isomorphic(g1, g3));
}
