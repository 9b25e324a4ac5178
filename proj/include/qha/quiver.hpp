#pragma once
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>
#include "error.hpp"

namespace qha {

struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
};

// Finite quiver. Vertices and arrows are referred to by their declaration
// index everywhere in the engine; names only matter at the DSL boundary.
class Quiver {
public:
    int add_vertex(const std::string& name);
    int add_arrow(const std::string& name, int src, int tgt);

    int num_vertices() const { return (int)vertex_names_.size(); }
    int num_arrows() const { return (int)arrows_.size(); }
    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    // -1 when absent
    int find_vertex(const std::string& name) const;
    int find_arrow(const std::string& name) const;

    const std::vector<int>& arrows_from(int v) const { return out_[v]; }
    const std::vector<int>& arrows_into(int v) const { return in_[v]; }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> arrow_index_;
    std::vector<std::vector<int>> out_, in_;
};

// A path a1 a2 ... an read left to right: a1's target is a2's source.
// The trivial path at v has empty `as` and src == v.
struct Path {
    int src = 0;
    std::vector<int> as;

    int length() const { return (int)as.size(); }
    bool trivial() const { return as.empty(); }
    int source() const { return src; }
    int target(const Quiver& q) const { return as.empty() ? src : q.arrow(as.back()).tgt; }

    bool operator==(const Path& o) const { return src == o.src && as == o.as; }
};

// Total monomial order: length first, then lexicographic on arrow indices,
// then source vertex (which can only differ for trivial paths).
// Returns <0, 0, >0. Multiplicative: p<q implies upv < uqv for composable u,v.
int path_cmp(const Path& a, const Path& b);

inline bool path_lt(const Path& a, const Path& b) { return path_cmp(a, b) < 0; }

// Concatenation; fails on non-composable factors.
Path concat(const Quiver& q, const Path& a, const Path& b);
bool composable(const Quiver& q, const Path& a, const Path& b);

std::string path_str(const Quiver& q, const Path& p);

// Build a path from arrow names; fails on unknown names or non-composable steps.
Path path_from_names(const Quiver& q, const std::vector<std::string>& names);

struct PathHash {
    size_t operator()(const Path& p) const {
        size_t h = 1469598103934665603ull;
        auto mix = [&h](size_t v) { h ^= v; h *= 1099511628211ull; };
        mix((size_t)p.src);
        for (int a : p.as) mix((size_t)a + 0x9e3779b9);
        return h;
    }
};

} // namespace qha
