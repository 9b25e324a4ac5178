#pragma once
// Shared test helpers: field shortcuts, tiny fixed presentations, and a few
// reusable checks. Everything heavier goes through compute_all from the
// pipeline so lifetimes are handled in one place.
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qha/dsl.hpp"
#include "qha/families.hpp"
#include "qha/hochschild.hpp"
#include "qha/pipeline.hpp"
#include "qha/resolution.hpp"
#include "qha/rewrite.hpp"

namespace qhatest {

inline qha::Field rationals() { return qha::Field(qha::FieldSpec{}); }
inline qha::Field prime(std::uint64_t p) {
    return qha::Field(qha::FieldSpec{qha::FieldKind::Prime, p});
}

// K[x]/(x^2): one vertex, one loop, one square.
inline const char* kDualNumbers = R"(field Q
quiver {
  vertex v;
  arrow x: v -> v;
}
relations {
  x x;
})";

// Two vertices, arrows both ways, both 2-cycles killed.
inline const char* kTwoVertex = R"(field Q
quiver {
  vertex u, v;
  arrow a: u -> v;
  arrow b: v -> u;
}
relations {
  a b;
  b a;
})";

// The one-vertex zero-arrow algebra K.
inline const char* kPoint = R"(field Q
quiver {
  vertex v;
}
relations {
})";

inline qha::ComputeResult computed(const std::string& dsl) {
    return qha::compute_all(qha::parse_presentation(dsl));
}

inline qha::ComputeResult computed(const qha::Presentation& pres) {
    return qha::compute_all(pres);
}

// endpoint-pair multiset of the degree-n generators, n = 1, 2, 3
inline std::vector<std::pair<int, int>> summand_pairs(const std::vector<qha::Summand>& q) {
    std::vector<std::pair<int, int>> out;
    for (const auto& s : q) out.push_back({s.o, s.t});
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qhatest
