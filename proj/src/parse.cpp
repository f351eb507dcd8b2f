#include "ppk/parse.hpp"

#include <cctype>
#include <sstream>

#include "ppk/errors.hpp"

namespace ppk {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    void expect(char c) {
        skip_ws();
        if (eof() || s[i] != c)
            throw SyntaxError(std::string("expected '") + c + "'", i);
        ++i;
    }
};

bool ident_start(char c) { return std::isalpha((unsigned char)c); }
bool ident_char(char c) { return std::isalnum((unsigned char)c); }

std::string read_ident(Cursor& c) {
    c.skip_ws();
    if (c.eof() || !ident_start(c.peek()))
        throw SyntaxError("expected identifier", c.i);
    size_t start = c.i;
    while (!c.eof() && ident_char(c.peek())) ++c.i;
    return c.s.substr(start, c.i - start);
}

long read_integer(Cursor& c) {
    size_t start = c.i;
    bool neg = false;
    if (!c.eof() && (c.peek() == '-' || c.peek() == '+')) {
        neg = c.peek() == '-';
        ++c.i;
    }
    if (c.eof() || !std::isdigit((unsigned char)c.peek()))
        throw SyntaxError("expected integer exponent", c.i);
    long v = 0;
    while (!c.eof() && std::isdigit((unsigned char)c.peek())) {
        v = v * 10 + (c.peek() - '0');
        if (v > 1000000) throw SyntaxError("exponent too large", start);
        ++c.i;
    }
    return neg ? -v : v;
}

void append_power(Word& w, int gen, long exp) {
    bool inv = exp < 0;
    long n = inv ? -exp : exp;
    for (long k = 0; k < n; ++k) w.push_back(Letter(gen, inv));
}

// One whitespace-free chunk of a word. In compact mode every generator is a
// single character and the chunk may concatenate several terms.
void parse_chunk(const std::string& chunk, size_t base, const Presentation& p, bool compact,
                 Word& out) {
    if (compact) {
        size_t i = 0;
        while (i < chunk.size()) {
            std::string name(1, chunk[i]);
            int g = p.generator_index(name);
            if (!ident_start(chunk[i]))
                throw SyntaxError("expected generator letter", base + i);
            if (g < 0) throw UnknownGenerator("unknown generator '" + name + "'");
            ++i;
            long exp = 1;
            if (i < chunk.size() && chunk[i] == '^') {
                ++i;
                Cursor c{chunk, i};
                exp = read_integer(c);
                i = c.i;
            }
            append_power(out, g, exp);
        }
    } else {
        Cursor c{chunk, 0};
        std::string name = read_ident(c);
        long exp = 1;
        if (!c.eof() && c.peek() == '^') {
            ++c.i;
            exp = read_integer(c);
        }
        if (!c.eof()) throw SyntaxError("trailing characters in term", base + c.i);
        int g = p.generator_index(name);
        if (g < 0) throw UnknownGenerator("unknown generator '" + name + "'");
        append_power(out, g, exp);
    }
}

Word parse_word_span(const std::string& text, size_t begin, size_t end, const Presentation& p,
                     bool compact) {
    Word out;
    size_t i = begin;
    bool saw_term = false;
    while (i < end) {
        while (i < end && std::isspace((unsigned char)text[i])) ++i;
        if (i >= end) break;
        size_t j = i;
        while (j < end && !std::isspace((unsigned char)text[j])) ++j;
        parse_chunk(text.substr(i, j - i), i, p, compact, out);
        saw_term = true;
        i = j;
    }
    if (!saw_term) throw SyntaxError("empty word", begin);
    return out;
}

bool all_single_char(const Presentation& p) {
    for (const auto& g : p.generators)
        if (g.size() != 1) return false;
    return true;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Cursor c{text, 0};
    c.expect('<');
    Presentation p;
    while (true) {
        std::string name = read_ident(c);
        if (p.generator_index(name) >= 0)
            throw DuplicateGenerator("generator '" + name + "' declared twice");
        p.generators.push_back(name);
        c.skip_ws();
        if (!c.eof() && c.peek() == ',') {
            ++c.i;
            continue;
        }
        break;
    }
    c.expect('|');
    bool compact = all_single_char(p);
    // split the relator section on commas, stopping at '>'
    c.skip_ws();
    size_t section_end = text.find_last_of('>');
    if (section_end == std::string::npos || section_end < c.i)
        throw SyntaxError("expected '>'", text.size());
    size_t i = c.i;
    bool any = false;
    std::vector<std::pair<size_t, size_t>> spans;
    size_t start = i;
    for (size_t k = i; k < section_end; ++k) {
        if (text[k] == ',') {
            spans.push_back({start, k});
            start = k + 1;
        }
    }
    spans.push_back({start, section_end});
    // a single all-whitespace span means: no relators
    if (spans.size() == 1) {
        bool blank = true;
        for (size_t k = spans[0].first; k < spans[0].second; ++k)
            if (!std::isspace((unsigned char)text[k])) blank = false;
        any = !blank;
    } else {
        any = true;
    }
    if (any)
        for (auto [b, e] : spans) p.relators.push_back(parse_word_span(text, b, e, p, compact));
    c.i = section_end + 1;
    c.skip_ws();
    if (!c.eof()) throw SyntaxError("trailing characters after '>'", c.i);
    return p;
}

std::string format_letter(Letter l, const Presentation& p) {
    std::string s = p.generators.at(l.gen);
    if (l.inv) s += "^-1";
    return s;
}

std::string format_word(const Word& w, const Presentation& p) {
    if (w.empty()) return p.generators.empty() ? "" : p.generators[0] + "^0";
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long run = (long)(j - i);
        if (!first) os << ' ';
        first = false;
        os << p.generators.at(w[i].gen);
        if (w[i].inv)
            os << "^-" << run;
        else if (run > 1)
            os << '^' << run;
        i = j;
    }
    return os.str();
}

std::string format_presentation(const Presentation& p) {
    std::ostringstream os;
    os << "< ";
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (i) os << ", ";
        os << p.generators[i];
    }
    os << " |";
    for (size_t i = 0; i < p.relators.size(); ++i) {
        os << (i ? ", " : " ") << format_word(p.relators[i], p);
    }
    os << " >";
    return os.str();
}

Word parse_word(const std::string& text, const Presentation& p) {
    return parse_word_span(text, 0, text.size(), p, all_single_char(p));
}

} // namespace ppk
