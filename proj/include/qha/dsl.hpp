#pragma once
#include "element.hpp"

namespace qha {

// A parsed algebra presentation KQ/I: field, quiver, generating relations.
struct Presentation {
    Field field;
    Quiver quiver;
    std::vector<UniformElement> relations;

    PathAlgebra algebra() const { return PathAlgebra(quiver, field); }
};

// Parses the textual presentation format:
//
//   field Q            # or F<p>
//   quiver {
//     vertex v1, v2;
//     arrow a: v1 -> v2;
//   }
//   relations {
//     a b - 2/3 c d;
//   }
//
// '#' starts a comment. Relation terms need length >= 2 (the ideal must sit
// inside the square of the arrow ideal) and every relation must be uniform.
// Errors carry "line L, col C" positions.
Presentation parse_presentation(const std::string& text);

// Canonical form: one vertex/arrow per line, declaration order, relations via
// PathAlgebra::to_string. parse(print(p)) reproduces p; print is idempotent.
std::string print_presentation(const Presentation& pres);

} // namespace qha
