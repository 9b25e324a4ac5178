#pragma once
#include "resolution.hpp"

namespace qha {

// Hom(Q^n, Lambda) ~ sum over summands x of o(x) Lambda t(x), by evaluation at
// the generators e(x)e. Coordinates are (summand, path) in summand order, each
// bucket listing its basis path indices ascending.
struct CochainSpace {
    std::vector<int> offset;              // per summand
    std::vector<std::vector<int>> paths;  // per summand: basis path indices
    int dim = 0;
};

struct HochschildResult {
    CochainSpace c0, c1, c2, c3;
    // columns of Hom(A_n), domain coordinate order, over codomain coordinates
    std::vector<SVec> m1, m2, m3;
    int rank_m1 = 0, rank_m2 = 0, rank_m3 = 0;
    int hh0 = 0, hh1 = 0, hh2 = 0;
    // representatives of a basis of HH^2 = Ker m3 / Im m2, reduced and monic,
    // each given by its values on the f2 generators
    std::vector<std::vector<std::pair<int, FreeElement>>> hh2_basis;
};

HochschildResult hochschild(const Groebner& gb, const AlgebraBasis& basis, const Resolution& res);

// coordinates of the cochain with the given values (normal forms) per summand
SVec cochain_coords(const CochainSpace& cs, const AlgebraBasis& basis,
                    const std::vector<std::pair<int, FreeElement>>& values);

// Degrees 0..2 of Hochschild cohomology from the unnormalized bar complex of
// the algebra itself, idempotents included. An independent cross-check; cubic
// in dim Lambda, so it refuses algebras above the bound.
struct BarDims {
    int hh0 = 0, hh1 = 0, hh2 = 0;
};
BarDims bar_hh_dims(const Groebner& gb, const AlgebraBasis& basis, int bound = 12);

} // namespace qha
