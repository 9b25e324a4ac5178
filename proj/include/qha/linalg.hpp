#pragma once
#include <map>
#include <vector>
#include "field.hpp"

namespace qha {

// Sparse vector: (index, coeff) pairs, ascending index, no zero coeffs.
using SVec = std::vector<std::pair<int, Scalar>>;

SVec svec_scale(const Field& f, const Scalar& c, const SVec& a);
// a + c*b
SVec svec_axpy(const Field& f, const SVec& a, const Scalar& c, const SVec& b);

// Row echelon basis with pivot = largest index of a row. Rows are monic at
// their pivot. In reduced mode rows form a reduced echelon basis (no row
// contains another row's pivot) and reduction against it yields canonical
// coset representatives; in rank mode insert() does cheaper tip-only
// elimination, which is enough for rank and membership-as-zero tests.
class Echelon {
public:
    explicit Echelon(const Field& f, bool reduced = true) : f_(&f), reduced_(reduced) {}

    // eliminates every pivot index from v (canonical representative when reduced)
    SVec reduce(SVec v) const;
    bool insert(SVec v); // false iff v reduced to zero (already in span)
    bool contains(SVec v) const { return reduce(std::move(v)).empty(); }
    int rank() const { return (int)rows_.size(); }
    const std::map<int, SVec>& rows() const { return rows_; }

private:
    SVec tip_reduce(SVec v) const;
    const Field* f_;
    bool reduced_;
    std::map<int, SVec> rows_;
};

// Basis of { x : sum_i x_i * im[i] == 0 }, where the im[i] are coordinates in
// 0..dim_main-1 and x lives in coordinates 0..im.size()-1. The result is a
// reduced echelon basis over the x coordinates (pivot = largest index).
std::vector<SVec> kernel_basis(const Field& f, const std::vector<SVec>& im, int dim_main);

// sum_c x_c * cols[c]
SVec mat_apply(const Field& f, const std::vector<SVec>& cols, const SVec& x);

} // namespace qha
