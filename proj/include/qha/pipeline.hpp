#pragma once
#include "families.hpp"
#include "hochschild.hpp"
#include "resolution.hpp"

#include <memory>
#include <string>

namespace qha {

struct PipelineOptions {
    int cap = 0;           // completion cap; 0 picks the module default, else >= 2
    std::string cache_dir; // empty disables the on-disk cache
};

// Artifacts of one full run. The presentation is heap-held because the
// rewriting system keeps pointers into its quiver and field.
struct ComputeResult {
    std::unique_ptr<Presentation> pres;
    std::unique_ptr<Groebner> gb;
    AlgebraBasis basis;
    int rad_nil = 0;
    Resolution res;
    HochschildResult hh;
};

// completion -> basis -> f2 -> resolution -> cochain complex, cache-assisted
ComputeResult compute_all(const Presentation& pres, const PipelineOptions& opt = {});

struct Report {
    std::string text;
    std::string json;
};

// reports name the minimal generators f2_1 .. f2_m; i is the 0-based index
std::string f2_label(int i);

// degree 0/1/2 restricts the text body to one cohomology degree, 3 shows all;
// the JSON document always carries the full schema.
Report report_compute(const ComputeResult& r, int degree = 3);

// per-vertex and total dimensions
Report report_dims(const Presentation& pres, const AlgebraBasis& basis);

struct OracleComparison {
    Report report;
    BarDims bar;
    bool match = false;
};
// side-by-side resolution-pipeline vs bar-complex dimensions
OracleComparison report_oracle(const ComputeResult& r, int bound = 12);

// undeformed vs deformed per-vertex dimensions plus an equality verdict
Report report_deform(const Presentation& base_pres, const AlgebraBasis& base,
                     const Presentation& def_pres, const AlgebraBasis& deformed);

} // namespace qha
