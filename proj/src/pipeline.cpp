#include "qha/pipeline.hpp"
#include "qha/cache.hpp"
#include "qha/dsl.hpp"

#include <json.hpp>

#include <sstream>

namespace qha {
namespace {

using ordered = nlohmann::ordered_json;

int vertex_dim(const AlgebraBasis& basis, int v) {
    return (int)basis.by_source[v].size();
}

std::string field_line(const Field& f) {
    return "field " + f.spec().name() + " (characteristic " +
           std::to_string(f.characteristic()) + ")";
}

} // namespace

std::string f2_label(int i) { return "f2_" + std::to_string(i + 1); }

ComputeResult compute_all(const Presentation& pres, const PipelineOptions& opt) {
    ComputeResult r;
    r.pres = std::make_unique<Presentation>(pres);
    // Resolve the cap before touching the cache: the key, the stored entry,
    // and a Groebner rebuilt from cached members must all see the same value
    // buchberger would use.
    const int cap = resolve_cap(r.pres->quiver, r.pres->relations, opt.cap);
    std::string key;
    if (!opt.cache_dir.empty()) key = cache_key(*r.pres, cap);

    bool loaded = false;
    if (!opt.cache_dir.empty()) {
        if (auto e = cache_load(opt.cache_dir, key, *r.pres, cap)) {
            auto gb = std::make_unique<Groebner>(r.pres->algebra(), cap, false);
            gb->adopt_members(e->members);
            AlgebraBasis basis = enumerate_basis(*gb);
            bool ok = basis.nil_index == e->nil_index && basis.paths == e->basis_paths;
            int rad_nil = ok ? radical_nil_index(*gb, basis) : 0;
            if (ok && rad_nil == e->rad_nil) {
                r.gb = std::move(gb);
                r.basis = std::move(basis);
                r.rad_nil = rad_nil;
                r.res = std::move(e->res);
                loaded = true;
            }
        }
    }
    if (!loaded) {
        GBOptions gopt;
        gopt.cap = cap;
        r.gb = std::make_unique<Groebner>(buchberger(*r.pres, gopt));
        r.basis = enumerate_basis(*r.gb);
        r.rad_nil = radical_nil_index(*r.gb, r.basis);
        r.res = build_resolution(*r.pres, *r.gb, r.basis, r.rad_nil);
        if (!opt.cache_dir.empty())
            cache_store(opt.cache_dir, key, *r.pres, cap,
                        CacheEntry{r.gb->members(), r.basis.paths, r.basis.nil_index,
                                   r.rad_nil, r.res});
    }
    r.hh = hochschild(*r.gb, r.basis, r.res);
    return r;
}

Report report_compute(const ComputeResult& r, int degree) {
    const PathAlgebra pa = r.pres->algebra();
    const HochschildResult& H = r.hh;
    const int dim_ker_d3 = H.c2.dim - H.rank_m3;

    ordered j;
    j["field"] = r.pres->field.spec().name();
    j["dim_algebra"] = r.basis.dim;
    j["f2_count"] = (int)r.res.f2.elements.size();
    j["f3_count"] = (int)r.res.q3.size();
    j["hom_dims"] =
        ordered{{"q0", H.c0.dim}, {"q1", H.c1.dim}, {"q2", H.c2.dim}, {"q3", H.c3.dim}};
    j["rank_d1"] = H.rank_m1;
    j["rank_d2"] = H.rank_m2;
    j["dim_ker_d3"] = dim_ker_d3;
    j["hh"] = ordered{{"hh0", H.hh0}, {"hh1", H.hh1}, {"hh2", H.hh2}};
    ordered reps = ordered::array();
    for (const auto& rep : H.hh2_basis) {
        ordered o = ordered::object();
        for (const auto& [s, el] : rep) o[f2_label(s)] = pa.to_string(el);
        reps.push_back(std::move(o));
    }
    j["hh2_basis"] = std::move(reps);

    std::ostringstream t;
    t << "algebra: " << r.pres->quiver.num_vertices() << " vertices, "
      << r.pres->quiver.num_arrows() << " arrows, " << r.pres->relations.size()
      << " relations, " << field_line(r.pres->field) << "\n";
    t << "dim Lambda = " << r.basis.dim << "\n";
    t << "f2 count = " << r.res.f2.elements.size() << "\n";
    t << "f3 count = " << r.res.q3.size() << "\n";
    t << "hom dims: q0 = " << H.c0.dim << ", q1 = " << H.c1.dim << ", q2 = " << H.c2.dim
      << ", q3 = " << H.c3.dim << "\n";
    t << "rank d1 = " << H.rank_m1 << ", rank d2 = " << H.rank_m2
      << ", dim ker d3 = " << dim_ker_d3 << "\n";
    if (degree == 0 || degree == 3) t << "hh0 = " << H.hh0 << "\n";
    if (degree == 1 || degree == 3) t << "hh1 = " << H.hh1 << "\n";
    if (degree == 2 || degree == 3) {
        t << "hh2 = " << H.hh2 << "\n";
        if (!H.hh2_basis.empty()) {
            t << "hh2 basis:\n";
            for (size_t i = 0; i < H.hh2_basis.size(); ++i) {
                t << "  [" << i + 1 << "]";
                bool first = true;
                for (const auto& [s, el] : H.hh2_basis[i]) {
                    t << (first ? " " : ", ") << f2_label(s) << " -> " << pa.to_string(el);
                    first = false;
                }
                t << "\n";
            }
        }
    }
    return Report{t.str(), j.dump(1) + "\n"};
}

Report report_dims(const Presentation& pres, const AlgebraBasis& basis) {
    ordered j;
    j["field"] = pres.field.spec().name();
    ordered pv = ordered::object();
    std::ostringstream t;
    t << "dims of e_v Lambda, " << field_line(pres.field) << "\n";
    for (int v = 0; v < pres.quiver.num_vertices(); ++v) {
        pv[pres.quiver.vertex_name(v)] = vertex_dim(basis, v);
        t << "  " << pres.quiver.vertex_name(v) << ": " << vertex_dim(basis, v) << "\n";
    }
    j["per_vertex"] = std::move(pv);
    j["total"] = basis.dim;
    t << "total dim Lambda = " << basis.dim << "\n";
    return Report{t.str(), j.dump(1) + "\n"};
}

OracleComparison report_oracle(const ComputeResult& r, int bound) {
    OracleComparison out;
    out.bar = bar_hh_dims(*r.gb, r.basis, bound);
    out.match = out.bar.hh0 == r.hh.hh0 && out.bar.hh1 == r.hh.hh1 && out.bar.hh2 == r.hh.hh2;

    ordered j;
    j["field"] = r.pres->field.spec().name();
    j["pipeline"] = ordered{{"hh0", r.hh.hh0}, {"hh1", r.hh.hh1}, {"hh2", r.hh.hh2}};
    j["bar"] = ordered{{"hh0", out.bar.hh0}, {"hh1", out.bar.hh1}, {"hh2", out.bar.hh2}};
    j["match"] = out.match;

    std::ostringstream t;
    t << "pipeline: hh0 = " << r.hh.hh0 << ", hh1 = " << r.hh.hh1 << ", hh2 = " << r.hh.hh2
      << "\n";
    t << "bar:      hh0 = " << out.bar.hh0 << ", hh1 = " << out.bar.hh1
      << ", hh2 = " << out.bar.hh2 << "\n";
    t << "oracle agreement: " << (out.match ? "yes" : "NO") << "\n";
    out.report = Report{t.str(), j.dump(1) + "\n"};
    return out;
}

Report report_deform(const Presentation& base_pres, const AlgebraBasis& base,
                     const Presentation& def_pres, const AlgebraBasis& deformed) {
    if (base_pres.quiver.num_vertices() != def_pres.quiver.num_vertices())
        fail(ErrKind::Validation, "deformation changed the vertex set");

    ordered rows = ordered::array();
    std::ostringstream t;
    t << "per-vertex dims, base vs deformed\n";
    bool equal = true;
    for (int v = 0; v < base_pres.quiver.num_vertices(); ++v) {
        int db = vertex_dim(base, v);
        int dd = vertex_dim(deformed, v);
        equal = equal && db == dd;
        rows.push_back(ordered{{"vertex", base_pres.quiver.vertex_name(v)},
                               {"base", db},
                               {"deformed", dd}});
        t << "  " << base_pres.quiver.vertex_name(v) << ": " << db << " vs " << dd << "\n";
    }
    equal = equal && base.dim == deformed.dim;
    t << "total: " << base.dim << " vs " << deformed.dim << "\n";
    t << "verdict: dims " << (equal ? "equal" : "differ") << "\n";

    ordered j;
    j["field"] = base_pres.field.spec().name();
    j["per_vertex"] = std::move(rows);
    j["total_base"] = base.dim;
    j["total_deformed"] = deformed.dim;
    j["equal"] = equal;
    return Report{t.str(), j.dump(1) + "\n"};
}

} // namespace qha
