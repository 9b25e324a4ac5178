#include "qha/hochschild.hpp"

#include <algorithm>
#include <map>

namespace qha {
namespace {

CochainSpace make_cochains(const AlgebraBasis& basis, const std::vector<Summand>& sums) {
    CochainSpace cs;
    cs.offset.reserve(sums.size());
    cs.paths.reserve(sums.size());
    for (const Summand& s : sums) {
        cs.offset.push_back(cs.dim);
        auto it = basis.by_pair.find({s.o, s.t});
        cs.paths.push_back(it == basis.by_pair.end() ? std::vector<int>{} : it->second);
        cs.dim += (int)cs.paths.back().size();
    }
    return cs;
}

int bucket_pos(const std::vector<int>& bucket, int bi) {
    auto it = std::lower_bound(bucket.begin(), bucket.end(), bi);
    if (it == bucket.end() || *it != bi) return -1;
    return (int)(it - bucket.begin());
}

// columns of Hom(A): phi |-> phi . A, over cochains of A's codomain level
std::vector<SVec> induced_matrix(const Groebner& gb, const AlgebraBasis& basis,
                                 const BimoduleMap& A, const CochainSpace& dom,
                                 const CochainSpace& cod) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    std::vector<SVec> cols;
    cols.reserve(dom.dim);
    for (int s0 = 0; s0 < (int)dom.paths.size(); ++s0)
        for (int pi : dom.paths[s0]) {
            FreeElement val0 = pa.monomial(f.one(), basis.paths[pi]);
            SVec col;
            for (int s = 0; s < (int)A.size(); ++s) {
                FreeElement v;
                for (const MapComponent& c : A[s]) {
                    if (c.dst != s0) continue;
                    v = pa.add(v, gb.normal_form(pa.mul(pa.mul(c.l, val0), c.r)));
                }
                // coordinates within bucket s, ascending path index
                for (auto it = v.terms.rbegin(); it != v.terms.rend(); ++it) {
                    int pos = bucket_pos(cod.paths[s], basis.find(it->p));
                    if (pos < 0) fail(ErrKind::Internal, "cochain value outside its bucket");
                    col.emplace_back(cod.offset[s] + pos, it->c);
                }
            }
            cols.push_back(std::move(col));
        }
    return cols;
}

int rank_of(const Field& f, const std::vector<SVec>& cols) {
    Echelon e(f, /*reduced=*/false);
    for (const SVec& c : cols) e.insert(c);
    return e.rank();
}

} // namespace

SVec cochain_coords(const CochainSpace& cs, const AlgebraBasis& basis,
                    const std::vector<std::pair<int, FreeElement>>& values) {
    std::map<int, Scalar> acc;
    for (const auto& [s, val] : values) {
        if (s < 0 || s >= (int)cs.paths.size())
            fail(ErrKind::Validation, "cochain value on an unknown summand");
        for (const Term& t : val.terms) {
            int bi = basis.find(t.p);
            int pos = bi < 0 ? -1 : bucket_pos(cs.paths[s], bi);
            if (pos < 0)
                fail(ErrKind::Validation, "cochain value is not reduced or not uniform");
            acc[cs.offset[s] + pos] = t.c;
        }
    }
    SVec out;
    for (auto& [i, c] : acc) out.emplace_back(i, c);
    return out;
}

HochschildResult hochschild(const Groebner& gb, const AlgebraBasis& basis,
                            const Resolution& res) {
    const Field& f = gb.algebra().field();
    HochschildResult H;
    H.c0 = make_cochains(basis, res.q0);
    H.c1 = make_cochains(basis, res.q1);
    H.c2 = make_cochains(basis, res.q2);
    H.c3 = make_cochains(basis, res.q3);
    H.m1 = induced_matrix(gb, basis, res.a1, H.c0, H.c1);
    H.m2 = induced_matrix(gb, basis, res.a2, H.c1, H.c2);
    H.m3 = induced_matrix(gb, basis, res.a3, H.c2, H.c3);
    H.rank_m1 = rank_of(f, H.m1);
    H.rank_m2 = rank_of(f, H.m2);
    H.rank_m3 = rank_of(f, H.m3);
    H.hh0 = H.c0.dim - H.rank_m1;
    H.hh1 = (H.c1.dim - H.rank_m2) - H.rank_m1;
    H.hh2 = (H.c2.dim - H.rank_m3) - H.rank_m2;

    // representatives: kernel vectors of m3 reduced against the image of m2
    Echelon im2(f, /*reduced=*/true);
    for (const SVec& c : H.m2) im2.insert(c);
    for (const SVec& z : kernel_basis(f, H.m3, H.c3.dim)) {
        SVec rho = im2.reduce(z);
        if (rho.empty()) continue;
        rho = svec_scale(f, f.inv(rho.back().second), rho);
        std::vector<std::pair<int, FreeElement>> rep;
        for (const auto& [coord, c] : rho) {
            // locate the summand bucket; coordinates ascend with the summand
            int s = (int)(std::upper_bound(H.c2.offset.begin(), H.c2.offset.end(), coord) -
                          H.c2.offset.begin()) - 1;
            Path p = basis.paths[H.c2.paths[s][coord - H.c2.offset[s]]];
            if (!rep.empty() && rep.back().first == s)
                rep.back().second.terms.insert(rep.back().second.terms.begin(), Term{c, p});
            else
                rep.push_back({s, FreeElement{{Term{c, p}}}});
        }
        H.hh2_basis.push_back(std::move(rep));
        im2.insert(std::move(rho));
    }
    if ((int)H.hh2_basis.size() != H.hh2)
        fail(ErrKind::Internal, "cohomology representative count disagrees with the dimension");
    return H;
}

BarDims bar_hh_dims(const Groebner& gb, const AlgebraBasis& basis, int bound) {
    if (basis.dim > bound)
        fail(ErrKind::OracleBound,
             "bar oracle bound " + std::to_string(bound) + " exceeded: dim Lambda = " +
                 std::to_string(basis.dim));
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();
    const int d = basis.dim;

    // structure constants: NF(b_i b_j) over the basis
    std::vector<std::vector<SVec>> mul(d, std::vector<SVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Path& a = basis.paths[i];
            const Path& b = basis.paths[j];
            if (a.target(q) != b.source()) continue;
            mul[i][j] = basis_coords(basis, gb.normal_form_path(concat(q, a, b)));
        }
    auto coeff = [&](const SVec& v, int idx) -> Scalar {
        auto it = std::lower_bound(v.begin(), v.end(), std::make_pair(idx, Scalar{}),
                                   [](const auto& x, const auto& y) { return x.first < y.first; });
        return it != v.end() && it->first == idx ? it->second : f.zero();
    };
    auto push = [&](std::map<int, Scalar>& acc, int idx, const Scalar& c) {
        if (f.is_zero(c)) return;
        auto [it, fresh] = acc.emplace(idx, c);
        if (!fresh) it->second = f.add(it->second, c);
    };
    auto flush = [&](std::map<int, Scalar>& acc) {
        SVec out;
        for (auto& [i, c] : acc)
            if (!f.is_zero(c)) out.emplace_back(i, c);
        return out;
    };

    // delta0(x)(a) = a x - x a, columns over x = b_i, coordinates (a, out)
    Echelon e0(f, false);
    for (int i = 0; i < d; ++i) {
        std::map<int, Scalar> acc;
        for (int j = 0; j < d; ++j) {
            for (const auto& [m, c] : mul[j][i]) push(acc, j * d + m, c);
            for (const auto& [m, c] : mul[i][j]) push(acc, j * d + m, f.neg(c));
        }
        e0.insert(flush(acc));
    }
    const int rank0 = e0.rank();

    // delta1(f)(a,b) = a f(b) - f(ab) + f(a) b, columns over f = E_{j -> k},
    // coordinates ((a, b), out)
    Echelon e1(f, false);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            std::map<int, Scalar> acc;
            for (int j1 = 0; j1 < d; ++j1) {
                // a = b_j1, b = b_j: a f(b)
                for (const auto& [m, c] : mul[j1][k]) push(acc, (j1 * d + j) * d + m, c);
                // a = b_j, b = b_j1: f(a) b
                for (const auto& [m, c] : mul[k][j1]) push(acc, (j * d + j1) * d + m, c);
                // -f(ab): every pair whose product meets b_j
                for (int j2 = 0; j2 < d; ++j2) {
                    Scalar c = coeff(mul[j1][j2], j);
                    push(acc, (j1 * d + j2) * d + k, f.neg(c));
                }
            }
            e1.insert(flush(acc));
        }
    const int rank1 = e1.rank();

    // delta2(f)(a,b,c) = a f(b,c) - f(ab,c) + f(a,bc) - f(a,b) c, columns over
    // f = E_{(i1,i2) -> k}, coordinates ((a, b, c), out)
    Echelon e2(f, false);
    for (int i1 = 0; i1 < d; ++i1)
        for (int i2 = 0; i2 < d; ++i2)
            for (int k = 0; k < d; ++k) {
                std::map<int, Scalar> acc;
                for (int j = 0; j < d; ++j) {
                    for (const auto& [m, c] : mul[j][k])
                        push(acc, ((j * d + i1) * d + i2) * d + m, c);
                    for (const auto& [m, c] : mul[k][j])
                        push(acc, ((i1 * d + i2) * d + j) * d + m, f.neg(c));
                }
                for (int j1 = 0; j1 < d; ++j1)
                    for (int j2 = 0; j2 < d; ++j2) {
                        Scalar cab = coeff(mul[j1][j2], i1);
                        push(acc, ((j1 * d + j2) * d + i2) * d + k, f.neg(cab));
                        Scalar cbc = coeff(mul[j1][j2], i2);
                        push(acc, ((i1 * d + j1) * d + j2) * d + k, cbc);
                    }
                e2.insert(flush(acc));
            }
    const int rank2 = e2.rank();

    BarDims out;
    out.hh0 = d - rank0;
    out.hh1 = (d * d - rank1) - rank0;
    out.hh2 = (d * d * d - rank2) - rank1;
    return out;
}

} // namespace qha
