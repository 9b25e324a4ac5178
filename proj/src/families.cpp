#include "qha/families.hpp"

#include <numeric>
#include <random>

namespace qha {

int mod1(int x, int k) { return ((x - 1) % k + k) % k + 1; }

namespace {

// Builds the self-injective family quiver and its relation paths. Vertex rows
// are 1-based and wrap mod k throughout.
struct LambdaShape {
    int p, q, k, s;

    int vmain(int i) const { return mod1(i, k) - 1; }
    int vat(int i, int t) const { return k + (mod1(i, k) - 1) * q + (t - 1); }
    int vhat(int i, int j) const { return k + k * q + (mod1(i, k) - 1) * p + (j - 1); }
    int aidx(int i, int t) const { return (mod1(i, k) - 1) * (q + 1) + t; }
    int bidx(int i, int j) const { return k * (q + 1) + (mod1(i, k) - 1) * (p + 1) + j; }

    Quiver quiver() const {
        Quiver qv;
        for (int i = 1; i <= k; ++i) qv.add_vertex("v" + std::to_string(i));
        for (int i = 1; i <= k; ++i)
            for (int t = 1; t <= q; ++t)
                qv.add_vertex("v" + std::to_string(i) + "_" + std::to_string(t));
        for (int i = 1; i <= k; ++i)
            for (int j = 1; j <= p; ++j)
                qv.add_vertex("v" + std::to_string(i) + "^" + std::to_string(j));
        for (int i = 1; i <= k; ++i)
            for (int t = 0; t <= q; ++t)
                qv.add_arrow("alpha" + std::to_string(i) + "_" + std::to_string(t),
                             t == 0 ? vmain(i) : vat(i, t),
                             t == q ? vmain(i - 1) : vat(i, t + 1));
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j <= p; ++j)
                qv.add_arrow("beta" + std::to_string(i) + "_" + std::to_string(j),
                             j == 0 ? vmain(i - 1) : vhat(i, j),
                             j == p ? vmain(i + s) : vhat(i, j + 1));
        return qv;
    }

    // alpha{i}_t0 ... alpha{i}_t1
    Path alphas(int i, int t0, int t1) const {
        Path r;
        r.src = t0 == 0 ? vmain(i) : vat(i, t0);
        for (int t = t0; t <= t1; ++t) r.as.push_back(aidx(i, t));
        return r;
    }
    // beta{i}_j0 ... beta{i}_j1
    Path betas(int i, int j0, int j1) const {
        Path r;
        r.src = j0 == 0 ? vmain(i - 1) : vhat(i, j0);
        for (int j = j0; j <= j1; ++j) r.as.push_back(bidx(i, j));
        return r;
    }
    Path join(const Path& a, const Path& b) const {
        Path r = a;
        r.as.insert(r.as.end(), b.as.begin(), b.as.end());
        return r;
    }
    Path rho(int i) const { return join(alphas(i, 0, q), betas(i, 0, p)); }
    // beta-run(i+1) . alpha-run(s+i+1), the other leg of the rho_i identification
    Path other_leg(int i) const {
        return join(betas(i + 1, 0, p), alphas(s + i + 1, 0, q));
    }
};

void validate_lambda(int p, int q, int k, int s) {
    if (p < 0 || q < 0) fail(ErrKind::Validation, "p and q must be >= 0");
    if (k < 2) fail(ErrKind::Validation, "k must be >= 2");
    if (s < 1 || s > k - 1) fail(ErrKind::Validation, "s must satisfy 1 <= s <= k-1");
    if (std::gcd(s, k) != 1) fail(ErrKind::Validation, "s and k must be coprime");
    if (std::gcd(s + 2, k) != 1) fail(ErrKind::Validation, "s+2 and k must be coprime");
}

void push_rel(FamilyPresentation& fam, const PathAlgebra& pa, const std::string& name,
              const FreeElement& el) {
    const Quiver& qv = pa.quiver();
    for (const auto& t : el.terms) {
        int at = t.p.src;
        for (int a : t.p.as) {
            if (qv.arrow(a).src != at)
                fail(ErrKind::Internal, "family relation '" + name + "' is not a path");
            at = qv.arrow(a).tgt;
        }
    }
    fam.pres.relations.push_back(pa.as_uniform(el));
    fam.rel_names.push_back(name);
}

std::string nm(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }
std::string nm(const std::string& stem, int i, int j) {
    return stem + "_" + std::to_string(i) + "_" + std::to_string(j);
}

} // namespace

int FamilyPresentation::rel(const std::string& name) const {
    for (size_t i = 0; i < rel_names.size(); ++i)
        if (rel_names[i] == name) return (int)i;
    fail(ErrKind::Validation, "no relation named '" + name + "'");
}

Path FamilyPresentation::alpha_run(int i) const {
    if (k == 0) fail(ErrKind::Validation, "not a self-injective family presentation");
    return LambdaShape{p, q, k, s}.alphas(i, 0, q);
}

Path FamilyPresentation::beta_run(int i) const {
    if (k == 0) fail(ErrKind::Validation, "not a self-injective family presentation");
    return LambdaShape{p, q, k, s}.betas(i, 0, p);
}

Path FamilyPresentation::rho(int i) const {
    if (k == 0) fail(ErrKind::Validation, "not a self-injective family presentation");
    return LambdaShape{p, q, k, s}.rho(i);
}

Path FamilyPresentation::beta_cycle() const {
    if (n == 0) fail(ErrKind::Validation, "not a gamma-star presentation");
    Path r;
    r.src = 0;
    for (int i = 0; i < n; ++i) r.as.push_back(i);
    return r;
}

namespace {

// Shared emission of the relation lists. minimal=true keeps only the reduced
// set; eta != nullptr additionally deforms f2_1_1 by -eta*rho_1 and appends
// the socle products rho_1 a, a rho_1.
FamilyPresentation lambda_impl(const Field& f, int p, int q, int k, int s,
                               const Scalar& lam, bool minimal, const Scalar* eta) {
    validate_lambda(p, q, k, s);
    if (lam.spec != f.spec())
        fail(ErrKind::Validation, "lambda must be an element of the coefficient field");
    if (f.is_zero(lam)) fail(ErrKind::Validation, "lambda must be nonzero");
    if (minimal && (p < 1 || q < 1))
        fail(ErrKind::Validation, "the reduced relation list needs p >= 1 and q >= 1");

    LambdaShape sh{p, q, k, s};
    FamilyPresentation fam;
    fam.p = p;
    fam.q = q;
    fam.k = k;
    fam.s = s;
    fam.pres.field = f;
    fam.pres.quiver = sh.quiver();
    PathAlgebra pa(fam.pres.quiver, fam.pres.field);
    auto mono = [&](const Path& pth) { return pa.monomial(f.one(), pth); };

    for (int i = 1; i <= k; ++i)
        push_rel(fam, pa, nm("f2_2", i),
                 mono(sh.join(sh.betas(i, p, p), sh.betas(s + i + 1, 0, 0))));
    for (int i = 1; i <= k; ++i)
        push_rel(fam, pa, nm("f2_3", i),
                 mono(sh.join(sh.alphas(i, q, q), sh.alphas(i - 1, 0, 0))));
    for (int i = 1; i <= k; ++i)
        for (int t = 0; t <= q; ++t) {
            if (minimal && (t == 0 || t == q)) continue;
            Path pth = sh.join(sh.join(sh.alphas(i, t, q), sh.betas(i, 0, p)),
                               sh.alphas(s + i, 0, t));
            bool kept = t >= 1 && t <= q - 1;
            push_rel(fam, pa, kept ? nm("f2_5", i, t) : nm("red5", i, t), mono(pth));
        }
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j <= p; ++j) {
            if (minimal && (j == 0 || j == p)) continue;
            Path pth = sh.join(sh.join(sh.betas(i, j, p), sh.alphas(s + i, 0, q)),
                               sh.betas(s + i, 0, j));
            bool kept = j >= 1 && j <= p - 1;
            push_rel(fam, pa, kept ? nm("f2_4", i, j) : nm("red4", i, j), mono(pth));
        }
    for (int i = 2; i <= k; ++i)
        push_rel(fam, pa, nm("f2_1", i),
                 pa.sub(mono(sh.rho(i)), mono(sh.other_leg(i))));
    {
        FreeElement f211 = pa.sub(mono(sh.rho(1)), pa.scale(lam, mono(sh.other_leg(1))));
        if (eta) f211 = pa.sub(f211, pa.scale(*eta, mono(sh.rho(1))));
        push_rel(fam, pa, nm("f2_1", 1), f211);
    }
    if (eta) {
        const Quiver& qv = fam.pres.quiver;
        Path rho1 = sh.rho(1);
        for (int a = 0; a < qv.num_arrows(); ++a)
            if (rho1.target(qv) == qv.arrow(a).src)
                push_rel(fam, pa, nm("socle_r", a),
                         mono(concat(qv, rho1, Path{qv.arrow(a).src, {a}})));
        for (int a = 0; a < qv.num_arrows(); ++a)
            if (qv.arrow(a).tgt == rho1.source())
                push_rel(fam, pa, nm("socle_l", a),
                         mono(concat(qv, Path{qv.arrow(a).src, {a}}, rho1)));
    }
    return fam;
}

} // namespace

FamilyPresentation build_lambda_family(const Field& f, int p, int q, int k, int s,
                                       const Scalar& lam, bool minimal) {
    return lambda_impl(f, p, q, k, s, lam, minimal, nullptr);
}

FamilyPresentation build_lambda_eta(const Field& f, int p, int q, int k, int s,
                                    const Scalar& lam, const Scalar& t) {
    if (t.spec != f.spec())
        fail(ErrKind::Validation, "t must be an element of the coefficient field");
    return lambda_impl(f, p, q, k, s, lam, /*minimal=*/true, &t);
}

namespace {

FamilyPresentation gamma_impl(const Field& f, int n, bool minimal, const Scalar* eta2) {
    if (n < 1) fail(ErrKind::Validation, "n must be >= 1");
    if ((minimal || eta2) && n < 2)
        fail(ErrKind::Validation,
             "n must be >= 2 (for n = 1 the reduced list and the deformation "
             "involve terms of length 1)");

    FamilyPresentation fam;
    fam.n = n;
    fam.pres.field = f;
    Quiver& qv = fam.pres.quiver;
    for (int i = 1; i <= n + 2; ++i) qv.add_vertex("v" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        qv.add_arrow("beta" + std::to_string(i), i - 1, i < n ? i : 0);
    int a1 = qv.add_arrow("alpha1", 0, n);
    int a2 = qv.add_arrow("alpha2", n, 0);
    int g1 = qv.add_arrow("gamma1", 0, n + 1);
    int g2 = qv.add_arrow("gamma2", n + 1, 0);

    PathAlgebra pa(qv, fam.pres.field);
    auto mono = [&](const Path& pth) { return pa.monomial(f.one(), pth); };
    // beta{j0} ... beta{j1} (1-based, contiguous)
    auto betas = [&](int j0, int j1) {
        Path r;
        r.src = j0 - 1;
        for (int j = j0; j <= j1; ++j) r.as.push_back(j - 1);
        return r;
    };
    Path cyc = betas(1, n);
    Path cyc2 = cyc;
    cyc2.as.insert(cyc2.as.end(), cyc.as.begin(), cyc.as.end());

    push_rel(fam, pa, "f2_1_1",
             pa.sub(mono(Path{0, {a1, a2}}), mono(Path{0, {g1, g2}})));
    {
        FreeElement r = pa.sub(mono(Path{0, {a1, a2}}), mono(cyc2));
        if (eta2) r = pa.sub(r, pa.scale(*eta2, mono(cyc)));
        push_rel(fam, pa, "f2_1_2", r);
    }
    push_rel(fam, pa, "f2_2_1", mono(Path{n - 1, {n - 1, a1}}));
    push_rel(fam, pa, "f2_2_2", mono(Path{n - 1, {n - 1, g1}}));
    push_rel(fam, pa, "f2_2_3", mono(Path{n, {a2, 0}}));
    push_rel(fam, pa, "f2_2_4", mono(Path{n + 1, {g2, 0}}));
    push_rel(fam, pa, "f2_2_5", mono(Path{n, {a2, a1}}));
    push_rel(fam, pa, "f2_2_6", mono(Path{n + 1, {g2, g1}}));
    for (int j = 2; j <= n; ++j) {
        if ((minimal || eta2) && j == n) continue;
        // beta{j}..beta{n} beta1..beta{n} beta1..beta{j-1} beta{j}
        Path pth = betas(j, n);
        for (int x = 1; x <= n; ++x) pth.as.push_back(x - 1);
        for (int x = 1; x <= j; ++x) pth.as.push_back(x - 1);
        FreeElement r = mono(pth);
        if (eta2) {
            // beta{j}..beta{n} beta1..beta{j}
            Path dt = betas(j, n);
            for (int x = 1; x <= j; ++x) dt.as.push_back(x - 1);
            r = pa.add(r, pa.scale(*eta2, mono(dt)));
        }
        push_rel(fam, pa, nm("f2_3", j), r);
    }
    return fam;
}

} // namespace

FamilyPresentation build_gamma_star(const Field& f, int n, bool minimal) {
    return gamma_impl(f, n, minimal, nullptr);
}

FamilyPresentation build_gamma_eta2(const Field& f, int n, const Scalar& t) {
    if (t.spec != f.spec())
        fail(ErrKind::Validation, "t must be an element of the coefficient field");
    return gamma_impl(f, n, /*minimal=*/true, &t);
}

Presentation permute_arrows(const Presentation& src, const std::vector<int>& order) {
    int na = src.quiver.num_arrows();
    if ((int)order.size() != na)
        fail(ErrKind::Validation, "arrow order must list every arrow exactly once");
    std::vector<int> newidx(na, -1);
    Presentation out;
    out.field = src.field;
    for (int v = 0; v < src.quiver.num_vertices(); ++v)
        out.quiver.add_vertex(src.quiver.vertex_name(v));
    for (int ni = 0; ni < na; ++ni) {
        int oi = order[ni];
        if (oi < 0 || oi >= na || newidx[oi] >= 0)
            fail(ErrKind::Validation, "arrow order must list every arrow exactly once");
        const Arrow& a = src.quiver.arrow(oi);
        out.quiver.add_arrow(a.name, a.src, a.tgt);
        newidx[oi] = ni;
    }
    PathAlgebra pa(out.quiver, out.field);
    for (const auto& rel : src.relations) {
        FreeElement acc = pa.zero();
        for (const auto& term : rel.el.terms) {
            Path np;
            np.src = term.p.src;
            for (int a : term.p.as) np.as.push_back(newidx[a]);
            acc = pa.add(acc, pa.monomial(term.c, np));
        }
        out.relations.push_back(pa.as_uniform(acc));
    }
    return out;
}

Presentation permute_arrows(const Presentation& src, const std::vector<std::string>& names) {
    std::vector<int> order;
    for (const auto& name : names) {
        int a = src.quiver.find_arrow(name);
        if (a < 0) fail(ErrKind::Validation, "unknown arrow '" + name + "' in order list");
        order.push_back(a);
    }
    return permute_arrows(src, order);
}

Presentation random_monomial_presentation(const Field& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Presentation pres;
    pres.field = f;
    Quiver& q = pres.quiver;
    q.add_vertex("v1");
    q.add_vertex("v2");
    q.add_vertex("v3");
    int na = 0;
    auto arrow = [&](int s, int t) {
        q.add_arrow("a" + std::to_string(++na), s, t);
    };
    arrow(0, 1);
    if (rng() % 2) arrow(0, 1);
    arrow(1, 2);
    if (rng() % 2) arrow(1, 2);
    if (rng() % 2) arrow(0, 2);
    PathAlgebra pa(q, pres.field);
    for (int a = 0; a < q.num_arrows(); ++a)
        for (int b = 0; b < q.num_arrows(); ++b) {
            if (q.arrow(a).tgt != q.arrow(b).src) continue;
            if (rng() % 2) continue;
            pres.relations.push_back(
                pa.as_uniform(pa.monomial(pres.field.one(), Path{q.arrow(a).src, {a, b}})));
        }
    return pres;
}

} // namespace qha
