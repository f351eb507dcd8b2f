#ifndef PPK_DECORATION_IO_HPP
#define PPK_DECORATION_IO_HPP

#include <string>

#include "ppk/conditions.hpp"
#include "ppk/crossing.hpp"
#include "ppk/spin.hpp"
#include "ppk/word.hpp"

namespace ppk {

// One JSON document holds the presentation and a decoration. A special
// decoration has a flat "sigma"/"tau"; a generic one adds "blocks" and "mu"
// (block indices are 0-based). Missing tau entries default to 0; mu entries
// forced by uniqueness are filled in.
struct DecorationFile {
    Presentation presentation;
    bool generic = false;
    std::optional<SpecialDecoration> special;
    std::optional<GenericDecoration> generic_decoration;
};

DecorationFile read_decoration_json(const std::string& text);
std::string write_decoration_json(const Presentation& p, const SpecialDecoration& d);
std::string write_decoration_json(const Presentation& p, const GenericDecoration& d);

std::string verdict_json(const Verdict& v);
std::string alignment_json(const Alignment& a, const Presentation& p);

} // namespace ppk

#endif
