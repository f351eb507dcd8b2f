#ifndef PPK_ENUMERATE_HPP
#define PPK_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppk/conditions.hpp"
#include "ppk/spin.hpp"
#include "ppk/word.hpp"

namespace ppk {

struct Budget {
    int max_generators = 1;
    int max_relators = 1;
    int max_total_relator_length = 4;
    long max_outputs = -1; // < 0: unlimited
};

// Generators renamed a, b, c, ...; relators cyclically reduced (free group),
// rotated to least rotation, sorted; least encoding over all renamings.
Presentation canonical_form(const Presentation& p);
bool is_canonical_form(const Presentation& p);

// Emits every canonical presentation within budget exactly once, in
// nondecreasing (|S|, total relator length, encoding). The sink returns
// false to stop the stream.
void enumerate_presentations(const Budget& b, const std::function<bool(const Presentation&)>& sink);

enum class DecorationKind { Special, Generic };

struct AnyDecoration {
    std::optional<SpecialDecoration> special;
    std::optional<GenericDecoration> generic;
};

void enumerate_decorations(const Presentation& p, DecorationKind kind,
                           const std::function<bool(const AnyDecoration&)>& sink);

enum class PlanarKind { Special, Generic, General };

struct PlanarItem {
    Presentation presentation;
    AnyDecoration decoration;       // empty for removal descendants
    std::optional<Presentation> parent; // generic parent, kind = General only
    std::vector<std::string> removed;   // removed generator names, in order
};

struct EnumerateOptions {
    CheckOptions check;
    int threads = 1;
};

void enumerate_planar(PlanarKind kind, const Budget& b,
                      const std::function<bool(const PlanarItem&)>& sink,
                      const EnumerateOptions& opts = {});

} // namespace ppk

#endif
