#include <set>

#include "doctest.h"
#include "ppk/conditions.hpp"
#include "ppk/crossing.hpp"
#include "ppk/errors.hpp"
#include "ppk/parse.hpp"
#include "testsupport.hpp"

using namespace ppk;
using ppktest::amalgam_file;
using ppktest::grid_decoration;
using ppktest::grid_presentation;

namespace {

Word wd(const std::string& s, const Presentation& p) { return parse_word(s, p); }

} // namespace

TEST_CASE("induces_double_ray") {
    Presentation g = grid_presentation();
    InvolutionSet I = involution_set(g);
    CHECK(induces_double_ray(wd("n s", g), I));
    CHECK_FALSE(induces_double_ray(wd("n n", g), I)); // backtracks
    CHECK_FALSE(induces_double_ray(Word{}, I));

    Presentation p = parse_presentation("< a, b | b^2 >");
    CHECK(induces_double_ray(wd("a b a^-1 b", p), involution_set(p)));
    CHECK_FALSE(induces_double_ray(wd("a a^-1", p), involution_set(p)));
}

TEST_CASE("grid: ns crosses ew, nesw crosses nothing") {
    Presentation g = grid_presentation();
    SpecialDecoration d = grid_decoration();
    CHECK(decide_crossing(wd("n s", g), wd("e w", g), d).crosses);
    CHECK(crossing_oracle(wd("n s", g), wd("e w", g), d).crosses);

    for (const char* z : {"nesw", "ns", "ew", "ne", "new", "nes", "nws"}) {
        CAPTURE(z);
        CHECK_FALSE(decide_crossing(wd("nesw", g), wd(z, g), d).crosses);
        CHECK_FALSE(crossing_oracle(wd("nesw", g), wd(z, g), d).crosses);
    }
    // squares never participate
    CHECK_FALSE(decide_crossing(wd("n^2", g), wd("e w", g), d).crosses);
}

TEST_CASE("single ray: a^3 against itself") {
    Presentation p = parse_presentation("< a | a^3 >");
    SpecialDecoration d;
    d.alphabet = symmetrized_alphabet(p);
    d.sigma = CyclicOrder({0, 1});
    d.tau = {0};
    CHECK_FALSE(decide_crossing(wd("a^3", p), wd("a^3", p), d).crosses);
    CHECK_FALSE(crossing_oracle(wd("a^3", p), wd("a^3", p), d).crosses);
}

TEST_CASE("crossing requires reduced words") {
    Presentation p = parse_presentation("< a, b | >");
    SpecialDecoration d;
    d.alphabet = symmetrized_alphabet(p);
    d.sigma = CyclicOrder({0, 1, 2, 3});
    d.tau = {0, 0};
    CHECK_THROWS_AS(decide_crossing(wd("a a^-1 b", p), wd("b", p), d), NotReduced);
}

TEST_CASE("generic: amalgam relators are pairwise nested") {
    auto f = amalgam_file();
    const Presentation& p = f.presentation;
    const GenericDecoration& d = *f.generic_decoration;
    // the two non-square block relators live in different pre-blocks
    CHECK_FALSE(decide_crossing(wd("a b a^-1 b", p), wd("c b c", p), d).crosses);
    CHECK_FALSE(crossing_oracle(wd("a b a^-1 b", p), wd("c b c", p), d).crosses);
    CHECK_FALSE(decide_crossing(wd("a^3", p), wd("c^3", p), d).crosses);
    CHECK_FALSE(decide_crossing(wd("a^3", p), wd("a b a^-1 b", p), d).crosses);
    CHECK_FALSE(decide_crossing(wd("c^3", p), wd("c b c", p), d).crosses);
    // the square relator never crosses
    CHECK_FALSE(decide_crossing(wd("b^2", p), wd("c b c", p), d).crosses);
}

TEST_CASE("generic: tau flip on the hinge saves the prism square") {
    // within a single block, a b a^-1 b self-translates need tau(b) = 1
    Presentation p = ppktest::prism_presentation();
    SpecialDecoration d;
    d.alphabet = symmetrized_alphabet(p); // a, b, a^-1
    d.sigma = CyclicOrder({0, 1, 2});
    d.tau = {0, 1};
    Word w = wd("a b a^-1 b", p);
    CHECK_FALSE(decide_crossing(w, w, d).crosses);
    CHECK_FALSE(crossing_oracle(w, w, d).crosses);
    SpecialDecoration flat = d;
    flat.tau = {0, 0};
    CHECK(decide_crossing(w, w, flat).crosses);
    CHECK(crossing_oracle(w, w, flat).crosses);
}

TEST_CASE("not blocked raises") {
    auto f = amalgam_file();
    CHECK_THROWS_AS(decide_crossing(wd("c a", f.presentation), wd("a^3", f.presentation),
                                    *f.generic_decoration),
                    NotBlocked);
}

TEST_CASE("symmetry and invariance properties") {
    Presentation g = grid_presentation();
    SpecialDecoration d = grid_decoration();
    auto words = ppktest::reduced_words(g, 3);
    InvolutionSet I = involution_set(g);
    int checked = 0;
    for (size_t i = 0; i < words.size() && checked < 400; i += 7) {
        for (size_t j = i; j < words.size() && checked < 400; j += 5) {
            const Word &w = words[i], &z = words[j];
            bool a = decide_crossing(w, z, d).crosses;
            // symmetry
            CHECK(a == decide_crossing(z, w, d).crosses);
            // inversion invariance
            CHECK(a == decide_crossing(inverse_word(w), z, d).crosses);
            // rotation invariance
            Word wr = w;
            std::rotate(wr.begin(), wr.begin() + (i % w.size()), wr.end());
            CHECK(a == decide_crossing(wr, z, d).crosses);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("reflection invariance") {
    Presentation g = grid_presentation();
    SpecialDecoration d = grid_decoration();
    SpecialDecoration r = d;
    r.sigma = d.sigma.reflected();
    auto words = ppktest::reduced_words(g, 3);
    for (size_t i = 0; i < words.size(); i += 11)
        for (size_t j = 0; j < words.size(); j += 13)
            CHECK(decide_crossing(words[i], words[j], d).crosses ==
                  decide_crossing(words[i], words[j], r).crosses);
}

// the oracle acceptance gate at unit scale: all special decorations over two
// generators with all involution patterns, shorter words; the acceptance
// suite runs the full version
TEST_CASE("oracle equivalence, words up to length 3") {
    std::vector<std::string> pres = {"< a, b | >", "< a, b | a^2 >", "< a, b | b^2 >",
                                     "< a, b | a^2, b^2 >"};
    for (const auto& text : pres) {
        Presentation p = parse_presentation(text);
        SymAlphabet alph = symmetrized_alphabet(p);
        std::vector<int> support(alph.size());
        for (int i = 0; i < alph.size(); ++i) support[i] = i;
        auto words = ppktest::reduced_words(p, 3);
        for (const CyclicOrder& sigma : cyclic_orders(support, true)) {
            for (int bits = 0; bits < 4; ++bits) {
                SpecialDecoration d;
                d.alphabet = alph;
                d.sigma = sigma;
                d.tau = {(uint8_t)(bits & 1), (uint8_t)((bits >> 1) & 1)};
                for (size_t i = 0; i < words.size(); ++i)
                    for (size_t j = i; j < words.size(); ++j) {
                        bool fast = decide_crossing(words[i], words[j], d).crosses;
                        bool slow = crossing_oracle(words[i], words[j], d).crosses;
                        if (fast != slow) {
                            CAPTURE(text);
                            CAPTURE(format_word(words[i], p));
                            CAPTURE(format_word(words[j], p));
                            CAPTURE(bits);
                            REQUIRE(fast == slow);
                        }
                    }
            }
        }
    }
}

TEST_CASE("oracle equivalence on random generic instances") {
    auto f = amalgam_file();
    const Presentation& p = f.presentation;
    const GenericDecoration& d = *f.generic_decoration;
    ppktest::Rng rng(12345);
    int done = 0;
    for (int t = 0; t < 200 && done < 60; ++t) {
        auto w = ppktest::random_blocked_word(rng, p, d, 2 + rng.below(3));
        auto z = ppktest::random_blocked_word(rng, p, d, 2 + rng.below(3));
        if (!w || !z) continue;
        bool fast = decide_crossing(*w, *z, d).crosses;
        bool slow = crossing_oracle(*w, *z, d).crosses;
        CAPTURE(format_word(*w, p));
        CAPTURE(format_word(*z, p));
        REQUIRE(fast == slow);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("witness alignment is sound when crossing") {
    Presentation g = grid_presentation();
    SpecialDecoration d = grid_decoration();
    CrossResult r = decide_crossing(wd("n s", g), wd("e w", g), d);
    REQUIRE(r.crosses);
    REQUIRE(r.witness);
    CHECK(r.witness->shared.empty()); // vertex contact in the grid example
}
