#include "qha/resolution.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <unordered_map>

namespace qha {
namespace {

Path triv(int v) { return Path{v, {}}; }

Path arrow_path(const Quiver& q, int a) { return Path{q.arrow(a).src, {a}}; }

// `len` arrows of p starting at arrow position `start`
Path subpath(const Quiver& q, const Path& p, int start, int len) {
    Path out;
    out.src = start == 0 ? p.src : q.arrow(p.as[start - 1]).tgt;
    out.as.assign(p.as.begin() + start, p.as.begin() + start + len);
    return out;
}

// t equals the leading t.length() arrows of p
bool tip_prefix(const Path& t, const Path& p) {
    if (t.src != p.src || t.length() > p.length()) return false;
    return std::equal(t.as.begin(), t.as.end(), p.as.begin());
}

void merge_cofactors(std::vector<RightBasis::CofTerm>& tr, const Field& f) {
    std::sort(tr.begin(), tr.end(), [](const auto& a, const auto& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return path_cmp(a.r, b.r) < 0;
    });
    std::vector<RightBasis::CofTerm> out;
    size_t i = 0;
    while (i < tr.size()) {
        Scalar c = tr[i].c;
        size_t j = i + 1;
        while (j < tr.size() && tr[j].gen == tr[i].gen && tr[j].r == tr[i].r) {
            c = f.add(c, tr[j].c);
            ++j;
        }
        if (!f.is_zero(c)) out.push_back(RightBasis::CofTerm{c, tr[i].gen, tr[i].r});
        i = j;
    }
    tr = std::move(out);
}

// all paths of length <= maxlen, ascending monomial order
std::vector<Path> all_paths(const Quiver& q, int maxlen) {
    std::vector<Path> out;
    for (int v = 0; v < q.num_vertices(); ++v) out.push_back(triv(v));
    size_t lo = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t hi = out.size();
        for (size_t i = lo; i < hi; ++i) {
            int tail = out[i].target(q);
            for (int a : q.arrows_from(tail)) {
                Path p = out[i];
                p.as.push_back(a);
                out.push_back(std::move(p));
            }
        }
        lo = hi;
    }
    std::sort(out.begin(), out.end(), path_lt);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// RightBasis

RightBasis::RightBasis(const PathAlgebra& pa, const std::vector<UniformElement>& f2)
    : pa_(pa), ngens_((int)f2.size()), gens_(f2) {
    const Field& f = pa_.field();
    const Quiver& q = pa_.quiver();
    struct Item {
        FreeElement el;
        std::vector<CofTerm> tr;
    };
    std::vector<Item> queue;
    for (int u = 0; u < ngens_; ++u) {
        if (f2[u].el.is_zero())
            fail(ErrKind::Validation, "zero generator in a right-module basis");
        queue.push_back(Item{f2[u].el, {CofTerm{f.one(), u, triv(f2[u].tgt)}}});
    }

    // full right reduction: rewrite any term whose word has a member tip prefix
    auto right_reduce = [&](Item& it) {
        size_t i = 0;
        while (i < it.el.terms.size()) {
            const Term t = it.el.terms[i];
            int hit = -1;
            for (int m = 0; m < (int)members_.size(); ++m)
                if (tip_prefix(members_[m].el.tip().p, t.p)) {
                    hit = m;
                    break;
                }
            if (hit < 0) {
                ++i;
                continue;
            }
            const Member& mem = members_[hit];
            int L = mem.el.tip().p.length();
            Path r = subpath(q, t.p, L, t.p.length() - L);
            it.el = pa_.sub(it.el, pa_.scale(t.c, pa_.mul_path(triv(t.p.source()), mem.el, r)));
            for (const CofTerm& ct : mem.tr)
                it.tr.push_back(CofTerm{f.neg(f.mul(t.c, ct.c)), ct.gen, concat(q, ct.r, r)});
        }
    };

    while (!queue.empty()) {
        // smallest tip first keeps the result independent of input order
        size_t best = 0;
        for (size_t i = 1; i < queue.size(); ++i)
            if (path_lt(queue[i].el.tip().p, queue[best].el.tip().p)) best = i;
        Item it = std::move(queue[best]);
        queue.erase(queue.begin() + best);

        right_reduce(it);
        if (it.el.is_zero()) {
            // a generator (or a prior combination) is a right combination of
            // the others; cofactors over the generator list stop being unique
            death_ = true;
            continue;
        }
        Scalar lead = it.el.tip().c;
        it.el = pa_.monic(it.el);
        Scalar s = f.inv(lead);
        for (CofTerm& ct : it.tr) ct.c = f.mul(s, ct.c);
        merge_cofactors(it.tr, f);

        // members whose tip gained a prefix go back into the queue
        const Path nt = it.el.tip().p;
        for (size_t m = 0; m < members_.size();) {
            if (tip_prefix(nt, members_[m].el.tip().p)) {
                queue.push_back(Item{std::move(members_[m].el), std::move(members_[m].tr)});
                members_.erase(members_.begin() + m);
            } else {
                ++m;
            }
        }
        members_.push_back(Member{std::move(it.el), std::move(it.tr)});
    }
    std::sort(members_.begin(), members_.end(), [](const Member& a, const Member& b) {
        return path_lt(a.el.tip().p, b.el.tip().p);
    });
}

std::vector<FreeElement> RightBasis::decompose(const FreeElement& y) const {
    const Field& f = pa_.field();
    const Quiver& q = pa_.quiver();
    if (death_)
        fail(ErrKind::NonUnique,
             "right cofactors are not unique: a generator is a right combination of the others");
    std::vector<FreeElement> out(ngens_);
    FreeElement x = y;
    while (!x.is_zero()) {
        const Term t = x.tip();
        int hit = -1;
        for (int m = 0; m < (int)members_.size(); ++m)
            if (tip_prefix(members_[m].el.tip().p, t.p)) {
                hit = m;
                break;
            }
        if (hit < 0)
            fail(ErrKind::NoSolution,
                 "element is not a right combination of the generators near " + pa_.to_string(x));
        const Member& mem = members_[hit];
        int L = mem.el.tip().p.length();
        Path r = subpath(q, t.p, L, t.p.length() - L);
        x = pa_.sub(x, pa_.scale(t.c, pa_.mul_path(triv(t.p.source()), mem.el, r)));
        for (const CofTerm& ct : mem.tr)
            out[ct.gen] =
                pa_.add(out[ct.gen], pa_.monomial(f.mul(t.c, ct.c), concat(q, ct.r, r)));
    }
    // exact identity in KQ: y == sum_u gens[u] * out[u]
    FreeElement z;
    for (int u = 0; u < ngens_; ++u) z = pa_.add(z, pa_.mul(gens_[u].el, out[u]));
    if (!pa_.eq(z, y)) fail(ErrKind::Internal, "right decomposition failed re-substitution");
    return out;
}

// ---------------------------------------------------------------------------
// Two-sided decomposition against a traced basis

std::vector<TraceTerm> decompose_two_sided(const Groebner& gb2, const FreeElement& y,
                                           bool rightmost) {
    if (!gb2.traced())
        fail(ErrKind::Validation, "two-sided decomposition needs a traced basis");
    const PathAlgebra& pa = gb2.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();
    std::vector<TraceTerm> out;
    FreeElement x = y;
    while (!x.is_zero()) {
        const Term t = x.tip();
        auto occ = gb2.find_tip(t.p, /*min_pos=*/1, rightmost);
        if (!occ)
            fail(ErrKind::NoSolution,
                 "element is not in J*I: no interior tip occurrence in " + path_str(q, t.p));
        auto [mi, pos] = *occ;
        const GBMember& mem = gb2.members()[mi];
        int L = mem.u.el.tip().p.length();
        Path l = subpath(q, t.p, 0, pos);
        Path r = subpath(q, t.p, pos + L, t.p.length() - pos - L);
        x = pa.sub(x, pa.scale(t.c, pa.mul_path(l, mem.u.el, r)));
        for (const TraceTerm& tt : mem.trace)
            out.push_back(
                TraceTerm{f.mul(t.c, tt.c), concat(q, l, tt.l), tt.gen, concat(q, tt.r, r)});
    }
    std::sort(out.begin(), out.end(), [](const TraceTerm& a, const TraceTerm& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        if (int c = path_cmp(a.l, b.l)) return c < 0;
        return path_cmp(a.r, b.r) < 0;
    });
    std::vector<TraceTerm> merged;
    size_t i = 0;
    while (i < out.size()) {
        Scalar c = out[i].c;
        size_t j = i + 1;
        while (j < out.size() && out[j].gen == out[i].gen && out[j].l == out[i].l &&
               out[j].r == out[i].r) {
            c = f.add(c, out[j].c);
            ++j;
        }
        if (!f.is_zero(c)) merged.push_back(TraceTerm{c, out[i].l, out[i].gen, out[i].r});
        i = j;
    }
    return merged;
}

// ---------------------------------------------------------------------------
// Minimal generators of the ideal

F2Result minimal_generators(const Groebner& gb, const AlgebraBasis& basis, int rad_nil,
                            const std::vector<UniformElement>& relations) {
    (void)basis;
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();

    // I, JI and IJ are right-generated in word length <= rad_nil + 1, so the
    // quotient I/(JI+IJ) is decided inside the span V_m of words of length <= m
    int m = rad_nil + 1;
    for (const auto& r : relations)
        for (const Term& t : r.el.terms) m = std::max(m, t.p.length());

    std::vector<Path> paths = all_paths(q, m);
    std::unordered_map<Path, int, PathHash> pidx;
    pidx.reserve(paths.size() * 2);
    for (int i = 0; i < (int)paths.size(); ++i) pidx[paths[i]] = i;
    std::vector<std::vector<int>> by_tgt(q.num_vertices()), by_src(q.num_vertices());
    for (int i = 0; i < (int)paths.size(); ++i) {
        by_tgt[paths[i].target(q)].push_back(i);
        by_src[paths[i].source()].push_back(i);
    }
    auto coords = [&](const FreeElement& x) {
        SVec v;
        v.reserve(x.terms.size());
        for (auto it = x.terms.rbegin(); it != x.terms.rend(); ++it) {
            auto hit = pidx.find(it->p);
            if (hit == pidx.end()) fail(ErrKind::Internal, "word outside the truncation window");
            v.emplace_back(hit->second, it->c);
        }
        return v;
    };

    // span of (JI + IJ) within V_m: u g w over basis members with |u|+|w| >= 1
    Echelon ech(f, /*reduced=*/false);
    for (const GBMember& g : gb.members()) {
        int L = g.u.el.tip().p.length();
        for (int ui : by_tgt[g.u.src]) {
            const Path& u = paths[ui];
            if (u.length() + L > m) continue;
            for (int wi : by_src[g.u.tgt]) {
                const Path& w = paths[wi];
                if (u.length() + L + w.length() > m) break; // ascending length
                if (u.length() + w.length() == 0) continue;
                ech.insert(coords(pa.mul_path(u, g.u.el, w)));
            }
        }
    }

    // the input relations span I over JI+IJ; keep the ones that extend the span
    F2Result out;
    for (int i = 0; i < (int)relations.size(); ++i)
        if (ech.insert(coords(relations[i].el))) {
            out.elements.push_back(relations[i]);
            out.selected.push_back(i);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Tensor spaces graded by the outer vertex pair

namespace {

struct TSpace {
    struct Block {
        std::vector<std::array<int, 3>> coords;  // (summand, li, ri)
        std::unordered_map<long long, int> pos;
    };
    std::map<std::pair<int, int>, Block> blocks;
    long long D = 0;
    int dim = 0;

    long long key(int s, int li, int ri) const { return (s * D + li) * D + ri; }
};

TSpace make_space(const Quiver& q, const AlgebraBasis& basis, const std::vector<Summand>& sums,
                  const std::vector<std::vector<int>>& by_target) {
    TSpace T;
    T.D = basis.dim;
    for (int s = 0; s < (int)sums.size(); ++s)
        for (int li : by_target[sums[s].o])
            for (int ri : basis.by_source[sums[s].t]) {
                int v = basis.paths[li].source();
                int w = basis.paths[ri].target(q);
                auto& b = T.blocks[{v, w}];
                b.pos[T.key(s, li, ri)] = (int)b.coords.size();
                b.coords.push_back({s, li, ri});
                ++T.dim;
            }
    return T;
}

// column of the bimodule map at domain coordinate (s, li, ri), written over
// the codomain block with the same outer pair
SVec map_column(const Groebner& gb, const AlgebraBasis& basis, const BimoduleMap& m,
                const TSpace& cod, int s, int li, int ri) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();
    const Path& bl = basis.paths[li];
    const Path& br = basis.paths[ri];
    auto bit = cod.blocks.find({bl.source(), br.target(q)});
    std::map<int, Scalar> acc;
    for (const MapComponent& c : m[s]) {
        FreeElement lf = gb.normal_form(pa.mul(pa.monomial(f.one(), bl), c.l));
        FreeElement rf = gb.normal_form(pa.mul(c.r, pa.monomial(f.one(), br)));
        if (lf.is_zero() || rf.is_zero()) continue;
        if (bit == cod.blocks.end())
            fail(ErrKind::Internal, "tensor coordinate outside the codomain");
        for (const Term& tl : lf.terms)
            for (const Term& tr : rf.terms) {
                int idx = bit->second.pos.at(cod.key(c.dst, basis.find(tl.p), basis.find(tr.p)));
                Scalar val = f.mul(tl.c, tr.c);
                auto [it, fresh] = acc.emplace(idx, val);
                if (!fresh) it->second = f.add(it->second, val);
            }
    }
    SVec out;
    for (auto& [i, c] : acc)
        if (!f.is_zero(c)) out.emplace_back(i, c);
    return out;
}

// row pushed from block `from` into the block one arrow to the left/right
SVec act_arrow(const Groebner& gb, const AlgebraBasis& basis, const TSpace& T, int a, bool left,
               const TSpace::Block& from, const TSpace::Block& to, const SVec& row) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();
    Path ap = arrow_path(q, a);
    std::map<int, Scalar> acc;
    for (const auto& [posi, c] : row) {
        auto [s, li, ri] = from.coords[posi];
        const FreeElement& nf = left ? gb.normal_form_path(concat(q, ap, basis.paths[li]))
                                     : gb.normal_form_path(concat(q, basis.paths[ri], ap));
        for (const Term& t : nf.terms) {
            int bi = basis.find(t.p);
            int idx = to.pos.at(left ? T.key(s, bi, ri) : T.key(s, li, bi));
            Scalar val = f.mul(c, t.c);
            auto [it, fresh] = acc.emplace(idx, val);
            if (!fresh) it->second = f.add(it->second, val);
        }
    }
    SVec out;
    for (auto& [i, c] : acc)
        if (!f.is_zero(c)) out.emplace_back(i, c);
    return out;
}

std::vector<MapComponent> components_from(const Field& f, const AlgebraBasis& basis,
                                          const TSpace::Block& blk, const SVec& kappa) {
    std::map<std::pair<int, int>, FreeElement> grouped;  // (summand, li) -> right factor
    for (const auto& [posi, c] : kappa) {
        auto [s, li, ri] = blk.coords[posi];
        // entries arrive with ri ascending, so prepending keeps terms descending
        FreeElement& r = grouped[{s, li}];
        r.terms.insert(r.terms.begin(), Term{c, basis.paths[ri]});
    }
    std::vector<MapComponent> out;
    for (auto& [k, r] : grouped) {
        MapComponent c;
        c.dst = k.first;
        c.l = FreeElement{{Term{f.one(), basis.paths[k.second]}}};
        c.r = std::move(r);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace

bool composites_vanish(const Groebner& gb, const AlgebraBasis& basis, const Resolution& res) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    auto compose_zero = [&](const BimoduleMap& first, const BimoduleMap& second) {
        for (const auto& comps : first) {
            std::map<std::tuple<int, int, int>, Scalar> acc;
            for (const MapComponent& cb : comps)
                for (const MapComponent& ca : second[cb.dst]) {
                    FreeElement lf = gb.normal_form(pa.mul(cb.l, ca.l));
                    FreeElement rf = gb.normal_form(pa.mul(ca.r, cb.r));
                    for (const Term& tl : lf.terms)
                        for (const Term& tr : rf.terms) {
                            auto key = std::make_tuple(ca.dst, basis.find(tl.p), basis.find(tr.p));
                            Scalar val = f.mul(tl.c, tr.c);
                            auto [it, fresh] = acc.emplace(key, val);
                            if (!fresh) it->second = f.add(it->second, val);
                        }
                }
            for (auto& [k, c] : acc)
                if (!f.is_zero(c)) return false;
        }
        return true;
    };
    return compose_zero(res.a2, res.a1) && compose_zero(res.a3, res.a2);
}

FreeElement f3_representative(const Groebner& gb, const Resolution& res, int i) {
    const PathAlgebra& pa = gb.algebra();
    FreeElement y;
    for (const MapComponent& c : res.a3[i]) {
        if (c.l.terms.size() != 1 || c.l.tip().p.length() != 0) continue;
        // read the right tensor factor as an element of KQ again
        y = pa.add(y, pa.scale(c.l.tip().c, pa.mul(res.f2.elements[c.dst].el, c.r)));
    }
    return y;
}

Resolution build_resolution(const Presentation& pres, const Groebner& gb,
                            const AlgebraBasis& basis, int rad_nil) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();

    Resolution res;
    res.rad_nil = rad_nil;
    res.f2 = minimal_generators(gb, basis, rad_nil, pres.relations);

    for (int v = 0; v < q.num_vertices(); ++v) res.q0.push_back({v, v});
    for (int a = 0; a < q.num_arrows(); ++a) res.q1.push_back({q.arrow(a).src, q.arrow(a).tgt});
    for (const auto& x : res.f2.elements) res.q2.push_back({x.src, x.tgt});

    // A1: e(x)e at arrow a goes to e (x) a minus a (x) e
    res.a1.assign(res.q1.size(), {});
    for (int a = 0; a < q.num_arrows(); ++a) {
        Path ap = arrow_path(q, a);
        MapComponent c0;
        c0.dst = q.arrow(a).src;
        c0.l = pa.monomial(f.one(), triv(q.arrow(a).src));
        c0.r = gb.normal_form(pa.monomial(f.one(), ap));
        MapComponent c1;
        c1.dst = q.arrow(a).tgt;
        c1.l = gb.normal_form(pa.monomial(f.neg(f.one()), ap));
        c1.r = pa.monomial(f.one(), triv(q.arrow(a).tgt));
        res.a1[a].push_back(std::move(c0));
        res.a1[a].push_back(std::move(c1));
    }

    // A2: each term of the relation splits at every arrow position
    res.a2.assign(res.q2.size(), {});
    for (int x = 0; x < (int)res.f2.elements.size(); ++x)
        for (const Term& t : res.f2.elements[x].el.terms)
            for (int k = 0; k < t.p.length(); ++k) {
                MapComponent c;
                c.dst = t.p.as[k];
                c.l = gb.normal_form(pa.monomial(t.c, subpath(q, t.p, 0, k)));
                c.r = gb.normal_form(
                    pa.monomial(f.one(), subpath(q, t.p, k + 1, t.p.length() - k - 1)));
                if (c.l.is_zero() || c.r.is_zero()) continue;
                res.a2[x].push_back(std::move(c));
            }

    std::vector<std::vector<int>> by_target(q.num_vertices());
    for (int i = 0; i < basis.dim; ++i) by_target[basis.paths[i].target(q)].push_back(i);

    TSpace T0 = make_space(q, basis, res.q0, by_target);
    TSpace T1 = make_space(q, basis, res.q1, by_target);
    TSpace T2 = make_space(q, basis, res.q2, by_target);

    // Ker A2, block by block (columns and kernels stay inside one outer pair)
    std::map<std::pair<int, int>, std::vector<SVec>> ker;
    long long rank_a2 = 0;
    for (const auto& [bk, blk] : T2.blocks) {
        std::vector<SVec> cols;
        cols.reserve(blk.coords.size());
        for (const auto& [s, li, ri] : blk.coords)
            cols.push_back(map_column(gb, basis, res.a2, T1, s, li, ri));
        auto c1 = T1.blocks.find(bk);
        int cod_dim = c1 == T1.blocks.end() ? 0 : (int)c1->second.coords.size();
        std::vector<SVec> kr = kernel_basis(f, cols, cod_dim);
        rank_a2 += (long long)cols.size() - (long long)kr.size();
        if (!kr.empty()) ker[bk] = std::move(kr);
    }

    // Q3 generators lift a basis of Ker A2 / (J Ker A2 + Ker A2 J)
    for (const auto& [bk, rows] : ker) {
        const auto [v, w] = bk;
        const TSpace::Block& here = T2.blocks.at(bk);
        Echelon ech(f, /*reduced=*/false);
        for (int a = 0; a < q.num_arrows(); ++a) {
            if (q.arrow(a).src == v) {
                auto it = ker.find({q.arrow(a).tgt, w});
                if (it != ker.end())
                    for (const SVec& m : it->second)
                        ech.insert(act_arrow(gb, basis, T2, a, /*left=*/true,
                                             T2.blocks.at({q.arrow(a).tgt, w}), here, m));
            }
            if (q.arrow(a).tgt == w) {
                auto it = ker.find({v, q.arrow(a).src});
                if (it != ker.end())
                    for (const SVec& m : it->second)
                        ech.insert(act_arrow(gb, basis, T2, a, /*left=*/false,
                                             T2.blocks.at({v, q.arrow(a).src}), here, m));
            }
        }
        for (const SVec& kappa : rows)
            if (ech.insert(kappa)) {
                res.q3.push_back({v, w});
                res.a3.push_back(components_from(f, basis, here, kappa));
            }
    }

    // rank identities pinning exactness at Q0 and Q1
    long long rank_a1 = 0;
    for (const auto& [bk, blk] : T1.blocks) {
        Echelon ech(f, /*reduced=*/false);
        for (const auto& [s, li, ri] : blk.coords)
            ech.insert(map_column(gb, basis, res.a1, T0, s, li, ri));
        rank_a1 += ech.rank();
    }
    if (rank_a1 != (long long)T0.dim - basis.dim)
        fail(ErrKind::Internal, "resolution is not exact in degree 0");
    if (rank_a1 + rank_a2 != (long long)T1.dim)
        fail(ErrKind::Internal, "resolution is not exact in degree 1");
    if (!composites_vanish(gb, basis, res))
        fail(ErrKind::Internal, "a composite differential is nonzero on a generator");
    return res;
}

// ---------------------------------------------------------------------------
// Minimal resolutions of the simple right modules

std::vector<std::vector<std::vector<int>>> min_resolution_simples(const Groebner& gb,
                                                                  const AlgebraBasis& basis,
                                                                  int depth) {
    const PathAlgebra& pa = gb.algebra();
    const Field& f = pa.field();
    const Quiver& q = pa.quiver();
    const int nv = q.num_vertices();
    const int D = basis.dim;

    // module vectors over coordinates slot*D + basis index, for a module
    // presented as a submodule of a finite direct sum of the e_v Lambda
    auto act_path = [&](const SVec& row, const Path& p) {
        std::map<int, Scalar> acc;
        for (const auto& [pos, c] : row) {
            int slot = pos / D, bi = pos % D;
            const Path& b = basis.paths[bi];
            if (b.target(q) != p.source()) continue;
            const FreeElement& nf = gb.normal_form_path(concat(q, b, p));
            for (const Term& t : nf.terms) {
                int idx = slot * D + basis.find(t.p);
                Scalar val = f.mul(c, t.c);
                auto [it, fresh] = acc.emplace(idx, val);
                if (!fresh) it->second = f.add(it->second, val);
            }
        }
        SVec out;
        for (auto& [i, c] : acc)
            if (!f.is_zero(c)) out.emplace_back(i, c);
        return out;
    };

    std::vector<std::vector<std::vector<int>>> result;
    for (int v = 0; v < nv; ++v) {
        std::vector<std::vector<int>> counts;
        counts.push_back(std::vector<int>(nv, 0));
        counts[0][v] = 1;

        // first syzygy: the radical of e_v Lambda
        std::vector<int> slots{v};
        std::vector<SVec> M;
        for (int bi : basis.by_source[v])
            if (basis.paths[bi].length() >= 1) M.push_back(SVec{{bi, f.one()}});

        for (int n = 1; n <= depth; ++n) {
            // split M and MJ by the target vertex; tops are the rank gaps
            std::vector<Echelon> ew(nv, Echelon(f, /*reduced=*/true));
            std::vector<Echelon> ejw(nv, Echelon(f, /*reduced=*/false));
            for (const SVec& x : M) {
                std::vector<SVec> parts(nv);
                for (const auto& [pos, c] : x)
                    parts[basis.paths[pos % D].target(q)].emplace_back(pos, c);
                for (int w = 0; w < nv; ++w)
                    if (!parts[w].empty()) ew[w].insert(parts[w]);
            }
            for (const SVec& x : M)
                for (int a = 0; a < q.num_arrows(); ++a) {
                    SVec y = act_path(x, arrow_path(q, a));
                    if (!y.empty()) ejw[q.arrow(a).tgt].insert(std::move(y));
                }
            std::vector<int> row(nv, 0);
            for (int w = 0; w < nv; ++w) row[w] = ew[w].rank() - ejw[w].rank();
            counts.push_back(row);
            if (n == depth) break;

            // projective cover: lift a basis of each top
            std::vector<std::pair<int, SVec>> lifts;
            for (int w = 0; w < nv; ++w) {
                Echelon sel = ejw[w];
                for (const auto& [piv, r] : ew[w].rows())
                    if (sel.insert(r)) lifts.push_back({w, r});
            }
            std::vector<SVec> cols;
            std::vector<long long> composite;  // positional -> g*D + bi
            for (int g = 0; g < (int)lifts.size(); ++g)
                for (int bi : basis.by_source[lifts[g].first]) {
                    cols.push_back(act_path(lifts[g].second, basis.paths[bi]));
                    composite.push_back((long long)g * D + bi);
                }
            std::vector<SVec> kern = kernel_basis(f, cols, (int)slots.size() * D);
            std::vector<SVec> next;
            for (const SVec& k : kern) {
                SVec t;
                t.reserve(k.size());
                for (const auto& [pos, c] : k) t.emplace_back((int)composite[pos], c);
                next.push_back(std::move(t));
            }
            slots.clear();
            for (auto& [w, r] : lifts) slots.push_back(w);
            M = std::move(next);
        }
        result.push_back(std::move(counts));
    }
    return result;
}

} // namespace qha
