#pragma once
#include "dsl.hpp"
#include "linalg.hpp"

#include <map>
#include <optional>
#include <unordered_map>

namespace qha {

// One c * (l . gen . r) term of a two-sided cofactor expression over the
// generator list a Groebner basis was completed from.
struct TraceTerm {
    Scalar c;
    Path l;
    int gen = 0;
    Path r;
};

struct GBMember {
    UniformElement u;              // monic; tip = u.el.tip().p
    std::vector<TraceTerm> trace;  // member = sum c * l * gens[gen] * r, exact in KQ
};

struct GBOptions {
    int cap = 0;        // max tip/basis path length; 0 picks the default
    bool trace = false; // carry two-sided cofactor expressions on members
};

// The effective tip/basis length cap for a generator list: 0 picks the
// default max(4 * longest relation term + 4, num_vertices + 1). Validates
// that every relation term has length >= 2 and that the cap covers the
// longest term, so callers that persist or compare caps agree with
// buchberger on the value actually used.
int resolve_cap(const Quiver& q, const std::vector<UniformElement>& gens, int cap);

// Reduced, complete rewriting system for the two-sided ideal generated by the
// input. Tips are pairwise non-subword, members monic and inter-reduced, all
// overlap remainders reduce to zero. Normal forms are unique representatives
// mod the ideal. Holds pointers into the quiver/field it was built from, which
// must outlive it.
class Groebner {
public:
    Groebner(const PathAlgebra& pa, int cap, bool traced)
        : pa_(pa), cap_(cap), traced_(traced) {}

    const PathAlgebra& algebra() const { return pa_; }
    const std::vector<GBMember>& members() const { return members_; }
    int cap() const { return cap_; }
    bool traced() const { return traced_; }

    // Occurrence of some member's tip as a subword of w at position >= min_pos.
    // Leftmost position wins by default (rightmost when asked); at one
    // position, the smallest member index wins. Returns (member, position).
    std::optional<std::pair<int, int>> find_tip(const Path& w, int min_pos = 0,
                                                bool rightmost = false) const;

    bool reducible(const Path& p) const { return find_tip(p).has_value(); }
    // Cheap test for BFS extension: only suffixes of p can be new tips.
    bool suffix_reducible(const Path& p) const;

    FreeElement normal_form(const FreeElement& x) const;
    const FreeElement& normal_form_path(const Path& p) const; // memoized

    // Used by completion and by the cache loader.
    void adopt_members(std::vector<GBMember> ms);

private:
    PathAlgebra pa_;
    int cap_;
    bool traced_;
    std::vector<GBMember> members_;
    // member indices by tip's first arrow / last arrow
    std::unordered_map<int, std::vector<int>> by_first_, by_last_;
    mutable std::unordered_map<Path, FreeElement, PathHash> nf_cache_;
};

// Overlap-based completion (processing overlaps by increasing overlapped-word
// length) followed by inter-reduction; the result is the unique reduced
// Groebner basis of the ideal. Fails with CapExceeded when a member tip would
// exceed cap or when irreducible paths still exist at length cap (the algebra
// is infinite-dimensional or the cap is too small).
Groebner buchberger(const PathAlgebra& pa, const std::vector<UniformElement>& gens,
                    GBOptions opts = {});
Groebner buchberger(const Presentation& pres, GBOptions opts = {});

// The finite path basis of KQ/I: irreducible paths in ascending monomial
// order, grouped by endpoints; contains all trivial paths and is closed under
// subpaths. nil_index is the least L with every path of length >= L reducible.
struct AlgebraBasis {
    std::vector<Path> paths;
    std::unordered_map<Path, int, PathHash> index;
    std::map<std::pair<int, int>, std::vector<int>> by_pair; // (src,tgt) -> indices
    std::vector<std::vector<int>> by_source;                 // vertex -> indices
    int dim = 0;
    int nil_index = 0;

    int find(const Path& p) const {
        auto it = index.find(p);
        return it == index.end() ? -1 : it->second;
    }
};

AlgebraBasis enumerate_basis(const Groebner& gb);

// Least D with J(Lambda)^D = 0, via the radical series J^L = span{NF(p) :
// |p| = L}. Equals nil_index when relations are length-homogeneous or
// monomial; can exceed it otherwise, and it is this value that bounds the
// degrees where I, JI, IJ are generated, so truncation levels use it.
int radical_nil_index(const Groebner& gb, const AlgebraBasis& basis);

// Coordinates of an already-reduced element over basis.paths.
SVec basis_coords(const AlgebraBasis& basis, const FreeElement& nf);

} // namespace qha
