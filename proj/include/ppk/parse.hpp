#ifndef PPK_PARSE_HPP
#define PPK_PARSE_HPP

#include <string>

#include "ppk/word.hpp"

namespace ppk {

// Grammar:
//   presentation := "<" gens "|" relators ">"
//   gens         := ident ("," ident)*
//   relators     := eps | word ("," word)*
//   word         := term+   (whitespace-separated; compact concatenation is
//                            allowed iff every generator name is one char)
//   term         := ident ("^" integer)?
// Exponents are expanded at parse time: s^n stores |n| letters.
Presentation parse_presentation(const std::string& text);

// Canonical formatter: "< a, b | a^2, b^3, a b a^-1 b >". Runs of one letter
// collapse to powers; the empty relator prints as "<gen>^0".
std::string format_presentation(const Presentation& p);

// A single word over p's generators, same grammar as a relator.
Word parse_word(const std::string& text, const Presentation& p);
std::string format_word(const Word& w, const Presentation& p);
std::string format_letter(Letter l, const Presentation& p);

} // namespace ppk

#endif
