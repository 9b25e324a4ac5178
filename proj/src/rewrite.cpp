#include "qha/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace qha {

namespace {

Path triv(int v) { return Path{v, {}}; }

Path subpath(const Quiver& q, const Path& p, int start, int len) {
    Path r;
    r.src = start == 0 ? p.src : q.arrow(p.as[start - 1]).tgt;
    r.as.assign(p.as.begin() + start, p.as.begin() + start + len);
    return r;
}

bool subword_at(const Path& hay, const Path& needle, int pos) {
    if (pos + needle.length() > hay.length()) return false;
    return std::equal(needle.as.begin(), needle.as.end(), hay.as.begin() + pos);
}

bool has_subword(const Path& hay, const Path& needle) {
    for (int pos = 0; pos + needle.length() <= hay.length(); ++pos)
        if (subword_at(hay, needle, pos)) return true;
    return false;
}

// suffix of a of length w equals prefix of b of length w
bool tail_meets_head(const Path& a, const Path& b, int w) {
    return std::equal(a.as.end() - w, a.as.end(), b.as.begin());
}

void trace_scale(const Field& f, std::vector<TraceTerm>& tr, const Scalar& c) {
    for (auto& t : tr) t.c = f.mul(c, t.c);
}

bool trace_term_before(const TraceTerm& a, const TraceTerm& b) {
    if (a.gen != b.gen) return a.gen < b.gen;
    if (int c = path_cmp(a.l, b.l)) return c < 0;
    return path_cmp(a.r, b.r) < 0;
}

// sort by (gen, l, r), merge equal cofactor positions, drop zeros
void trace_normalize(const Field& f, std::vector<TraceTerm>& tr) {
    std::sort(tr.begin(), tr.end(), trace_term_before);
    std::vector<TraceTerm> out;
    for (auto& t : tr) {
        if (!out.empty() && out.back().gen == t.gen && out.back().l == t.l &&
            out.back().r == t.r)
            out.back().c = f.add(out.back().c, t.c);
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const TraceTerm& t) { return f.is_zero(t.c); }),
              out.end());
    tr = std::move(out);
}

} // namespace

std::optional<std::pair<int, int>> Groebner::find_tip(const Path& w, int min_pos,
                                                      bool rightmost) const {
    int n = w.length();
    auto match_at = [&](int pos) -> int {
        auto it = by_first_.find(w.as[pos]);
        if (it == by_first_.end()) return -1;
        int best = -1;
        for (int mi : it->second)
            if (subword_at(w, members_[mi].u.el.tip().p, pos) && (best < 0 || mi < best))
                best = mi;
        return best;
    };
    if (rightmost) {
        for (int pos = n - 1; pos >= min_pos; --pos)
            if (int mi = match_at(pos); mi >= 0) return std::make_pair(mi, pos);
    } else {
        for (int pos = min_pos; pos < n; ++pos)
            if (int mi = match_at(pos); mi >= 0) return std::make_pair(mi, pos);
    }
    return std::nullopt;
}

bool Groebner::suffix_reducible(const Path& p) const {
    if (p.trivial()) return false;
    auto it = by_last_.find(p.as.back());
    if (it == by_last_.end()) return false;
    for (int mi : it->second) {
        const Path& t = members_[mi].u.el.tip().p;
        int tl = t.length(), n = p.length();
        if (tl <= n && std::equal(t.as.begin(), t.as.end(), p.as.begin() + (n - tl)))
            return true;
    }
    return false;
}

const FreeElement& Groebner::normal_form_path(const Path& p) const {
    auto hit = nf_cache_.find(p);
    if (hit != nf_cache_.end()) return hit->second;
    FreeElement nf;
    auto occ = find_tip(p);
    if (!occ) {
        nf = pa_.monomial(pa_.field().one(), p);
    } else {
        auto [mi, pos] = *occ;
        const FreeElement& g = members_[mi].u.el; // monic; tip rewrites to -tail
        const Path& t = g.tip().p;
        const Quiver& q = pa_.quiver();
        const Field& f = pa_.field();
        Path l = subpath(q, p, 0, pos);
        Path r = subpath(q, p, pos + t.length(), p.length() - pos - t.length());
        FreeElement acc = pa_.zero();
        for (size_t k = 1; k < g.terms.size(); ++k) {
            Path w = concat(q, concat(q, l, g.terms[k].p), r);
            acc = pa_.add(acc, pa_.scale(f.neg(g.terms[k].c), normal_form_path(w)));
        }
        nf = std::move(acc);
    }
    return nf_cache_.emplace(p, std::move(nf)).first->second;
}

FreeElement Groebner::normal_form(const FreeElement& x) const {
    FreeElement acc = pa_.zero();
    for (const auto& t : x.terms)
        acc = pa_.add(acc, pa_.scale(t.c, normal_form_path(t.p)));
    return acc;
}

void Groebner::adopt_members(std::vector<GBMember> ms) {
    members_ = std::move(ms);
    by_first_.clear();
    by_last_.clear();
    nf_cache_.clear();
    for (int i = 0; i < (int)members_.size(); ++i) {
        const Path& t = members_[i].u.el.tip().p;
        by_first_[t.as.front()].push_back(i);
        by_last_[t.as.back()].push_back(i);
    }
}

int resolve_cap(const Quiver& q, const std::vector<UniformElement>& gens, int cap) {
    int maxterm = 2;
    for (const auto& g : gens)
        for (const auto& t : g.el.terms) {
            if (t.p.length() < 2)
                fail(ErrKind::Validation,
                     "relation term '" + path_str(q, t.p) +
                         "' has length < 2, so the ideal is not admissible");
            maxterm = std::max(maxterm, t.p.length());
        }
    if (cap == 0) cap = std::max(4 * maxterm + 4, q.num_vertices() + 1);
    if (cap < 2) fail(ErrKind::Validation, "cap must be at least 2");
    if (cap < maxterm)
        fail(ErrKind::Validation, "cap " + std::to_string(cap) +
                                      " is smaller than a relation term of length " +
                                      std::to_string(maxterm));
    return cap;
}

Groebner buchberger(const PathAlgebra& pa, const std::vector<UniformElement>& gens,
                    GBOptions opts) {
    const Quiver& q = pa.quiver();
    const Field& f = pa.field();

    const int cap = resolve_cap(q, gens, opts.cap);

    struct Mem {
        FreeElement el;
        std::vector<TraceTerm> tr;
        bool alive = true;
    };
    std::vector<Mem> ms;
    std::vector<std::vector<int>> by_first(std::max(q.num_arrows(), 1));

    struct RawItem {
        FreeElement el;
        std::vector<TraceTerm> tr;
    };
    auto raw_after = [](const RawItem& a, const RawItem& b) {
        return path_lt(b.el.tip().p, a.el.tip().p);
    };
    std::priority_queue<RawItem, std::vector<RawItem>, decltype(raw_after)> raw(raw_after);

    struct Ov {
        int key, i, j, w;
    };
    auto ov_after = [](const Ov& a, const Ov& b) {
        return std::tie(b.key, b.i, b.j, b.w) < std::tie(a.key, a.i, a.j, a.w);
    };
    std::priority_queue<Ov, std::vector<Ov>, decltype(ov_after)> pairs(ov_after);

    for (int k = 0; k < (int)gens.size(); ++k) {
        if (gens[k].el.is_zero()) continue;
        std::vector<TraceTerm> tr;
        if (opts.trace) tr.push_back({f.one(), triv(gens[k].src), k, triv(gens[k].tgt)});
        raw.push({gens[k].el, std::move(tr)});
    }

    auto find_occ = [&](const Path& w) -> std::optional<std::pair<int, int>> {
        for (int pos = 0; pos < w.length(); ++pos) {
            int best = -1;
            for (int mi : by_first[w.as[pos]]) {
                if (!ms[mi].alive) continue;
                if (subword_at(w, ms[mi].el.tip().p, pos) && (best < 0 || mi < best))
                    best = mi;
            }
            if (best >= 0) return std::make_pair(best, pos);
        }
        return std::nullopt;
    };

    // rewrite the largest reducible term once; false when nothing fires
    auto step = [&](FreeElement& x, std::vector<TraceTerm>& tr, bool skip_leading) {
        for (size_t ti = skip_leading ? 1 : 0; ti < x.terms.size(); ++ti) {
            auto occ = find_occ(x.terms[ti].p);
            if (!occ) continue;
            auto [mi, pos] = *occ;
            const Path p = x.terms[ti].p;
            const Scalar c = x.terms[ti].c;
            const FreeElement& g = ms[mi].el;
            int tl = g.tip().p.length();
            Path l = subpath(q, p, 0, pos);
            Path r = subpath(q, p, pos + tl, p.length() - pos - tl);
            x = pa.sub(x, pa.scale(c, pa.mul_path(l, g, r)));
            if (opts.trace)
                for (const auto& tt : ms[mi].tr)
                    tr.push_back({f.neg(f.mul(c, tt.c)), concat(q, l, tt.l), tt.gen,
                                  concat(q, tt.r, r)});
            return true;
        }
        return false;
    };
    auto reduce_full = [&](FreeElement& x, std::vector<TraceTerm>& tr, bool skip_leading) {
        while (step(x, tr, skip_leading)) {
        }
    };

    auto push_overlaps = [&](int i, int j) {
        const Path& ti = ms[i].el.tip().p;
        const Path& tj = ms[j].el.tip().p;
        int m = std::min(ti.length(), tj.length());
        for (int w = 1; w < m; ++w)
            if (tail_meets_head(ti, tj, w))
                pairs.push({ti.length() + tj.length() - w, i, j, w});
    };

    while (!raw.empty() || !pairs.empty()) {
        if (!raw.empty()) {
            RawItem it = raw.top();
            raw.pop();
            reduce_full(it.el, it.tr, false);
            if (it.el.is_zero()) continue;
            Scalar lc = it.el.tip().c;
            if (!f.is_one(lc)) {
                Scalar il = f.inv(lc);
                it.el = pa.scale(il, it.el);
                if (opts.trace) trace_scale(f, it.tr, il);
            }
            if (it.el.tip().p.length() > cap)
                fail(ErrKind::CapExceeded,
                     "rewriting produced a tip of length " +
                         std::to_string(it.el.tip().p.length()) + " over cap " +
                         std::to_string(cap) + "; raise the cap");
            if (opts.trace) trace_normalize(f, it.tr);
            int id = (int)ms.size();
            ms.push_back({std::move(it.el), std::move(it.tr), true});
            const Path& t = ms[id].el.tip().p;
            by_first[t.as.front()].push_back(id);
            // tips stay pairwise non-subword: members whose tip now contains a
            // smaller tip go back into the queue and re-reduce later
            for (int j = 0; j < id; ++j) {
                if (!ms[j].alive) continue;
                if (has_subword(ms[j].el.tip().p, t)) {
                    ms[j].alive = false;
                    raw.push({ms[j].el, ms[j].tr});
                }
            }
            for (int j = 0; j <= id; ++j) {
                if (!ms[j].alive) continue;
                push_overlaps(id, j);
                if (j != id) push_overlaps(j, id);
            }
            continue;
        }
        Ov ov = pairs.top();
        pairs.pop();
        if (!ms[ov.i].alive || !ms[ov.j].alive) continue;
        const Path& ti = ms[ov.i].el.tip().p;
        const Path& tj = ms[ov.j].el.tip().p;
        Path x = subpath(q, ti, 0, ti.length() - ov.w);
        Path y = subpath(q, tj, ov.w, tj.length() - ov.w);
        // ti = x.w, tj = w.y; the common tip x.w.y of the two products cancels
        FreeElement s = pa.sub(pa.mul_path(triv(ti.src), ms[ov.i].el, y),
                               pa.mul_path(x, ms[ov.j].el, triv(tj.target(q))));
        if (s.is_zero()) continue;
        std::vector<TraceTerm> tr;
        if (opts.trace) {
            for (const auto& tt : ms[ov.i].tr)
                tr.push_back({tt.c, tt.l, tt.gen, concat(q, tt.r, y)});
            for (const auto& tt : ms[ov.j].tr)
                tr.push_back({f.neg(tt.c), concat(q, x, tt.l), tt.gen, tt.r});
        }
        raw.push({std::move(s), std::move(tr)});
    }

    // tails to normal form; tips are untouched, so this yields the reduced basis
    for (auto& m : ms) {
        if (!m.alive) continue;
        reduce_full(m.el, m.tr, true);
        if (opts.trace) trace_normalize(f, m.tr);
    }

    std::vector<GBMember> fin;
    for (auto& m : ms)
        if (m.alive) fin.push_back({pa.as_uniform(m.el), std::move(m.tr)});
    std::sort(fin.begin(), fin.end(), [](const GBMember& a, const GBMember& b) {
        return path_lt(a.u.el.tip().p, b.u.el.tip().p);
    });

    Groebner gb(pa, cap, opts.trace);
    gb.adopt_members(std::move(fin));
    enumerate_basis(gb); // certifies finite dimension under the cap
    return gb;
}

Groebner buchberger(const Presentation& pres, GBOptions opts) {
    return buchberger(PathAlgebra(pres.quiver, pres.field), pres.relations, opts);
}

AlgebraBasis enumerate_basis(const Groebner& gb) {
    const Quiver& q = gb.algebra().quiver();
    AlgebraBasis b;
    std::vector<Path> level;
    for (int v = 0; v < q.num_vertices(); ++v) level.push_back(triv(v));
    std::vector<Path> all;
    int len = 0, maxlen = 0;
    while (!level.empty()) {
        if (len > gb.cap())
            fail(ErrKind::CapExceeded,
                 "irreducible paths of length " + std::to_string(len) + " exceed cap " +
                     std::to_string(gb.cap()) +
                     "; the algebra may be infinite-dimensional (or raise the cap)");
        maxlen = len;
        for (auto& p : level) all.push_back(p);
        std::vector<Path> next;
        for (const auto& p : level)
            for (int a : q.arrows_from(p.target(q))) {
                Path pe = p;
                pe.as.push_back(a);
                // p is irreducible, so only suffixes of pe can hold a tip
                if (!gb.suffix_reducible(pe)) next.push_back(std::move(pe));
            }
        level = std::move(next);
        ++len;
    }
    std::sort(all.begin(), all.end(), path_lt);
    b.paths = std::move(all);
    b.dim = (int)b.paths.size();
    b.nil_index = maxlen + 1;
    b.by_source.assign(q.num_vertices(), {});
    for (int i = 0; i < b.dim; ++i) {
        const Path& p = b.paths[i];
        b.index.emplace(p, i);
        b.by_pair[{p.src, p.target(q)}].push_back(i);
        b.by_source[p.src].push_back(i);
    }
    return b;
}

int radical_nil_index(const Groebner& gb, const AlgebraBasis& basis) {
    const PathAlgebra& pa = gb.algebra();
    const Quiver& q = pa.quiver();
    const Field& f = pa.field();
    if (basis.dim == 0) return 0;
    std::vector<FreeElement> w;
    w.reserve(basis.paths.size());
    for (const auto& p : basis.paths) w.push_back(pa.monomial(f.one(), p));
    int L = 0;
    while (!w.empty()) {
        ++L;
        if (L > basis.dim)
            fail(ErrKind::Validation,
                 "the arrow ideal is not nilpotent modulo the relations; the ideal "
                 "is not admissible");
        Echelon ech(f, false);
        std::vector<FreeElement> next;
        for (const auto& x : w)
            for (int a = 0; a < q.num_arrows(); ++a) {
                const Arrow& ar = q.arrow(a);
                FreeElement prod = pa.zero();
                for (const auto& t : x.terms) {
                    if (t.p.src != ar.tgt) continue;
                    Path ap;
                    ap.src = ar.src;
                    ap.as.reserve(t.p.as.size() + 1);
                    ap.as.push_back(a);
                    ap.as.insert(ap.as.end(), t.p.as.begin(), t.p.as.end());
                    prod = pa.add(prod, pa.monomial(t.c, ap));
                }
                if (prod.is_zero()) continue;
                FreeElement nf = gb.normal_form(prod);
                if (nf.is_zero()) continue;
                if (ech.insert(basis_coords(basis, nf))) next.push_back(std::move(nf));
            }
        w = std::move(next);
    }
    return L; // least L with J^L = 0; >= nil_index, equal in the graded case
}

SVec basis_coords(const AlgebraBasis& basis, const FreeElement& nf) {
    SVec v;
    v.reserve(nf.terms.size());
    for (auto it = nf.terms.rbegin(); it != nf.terms.rend(); ++it) {
        int i = basis.find(it->p);
        if (i < 0) fail(ErrKind::Internal, "element is not in normal form over the basis");
        v.push_back({i, it->c});
    }
    return v;
}

} // namespace qha
