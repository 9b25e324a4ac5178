#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/cache.hpp"
#include "qha/families.hpp"
#include "qha/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "support.hpp"

using namespace qha;

namespace {

struct TempDir {
    std::filesystem::path p;
    explicit TempDir(const std::string& name)
        : p(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(p);
        std::filesystem::create_directories(p);
    }
    ~TempDir() { std::filesystem::remove_all(p); }
    std::string str() const { return p.string(); }
};

} // namespace

TEST_CASE("cache keys separate cap and declaration order") {
    Field f = qhatest::rationals();
    FamilyPresentation fam = build_gamma_star(f, 3);
    std::string k1 = cache_key(fam.pres, 12);
    CHECK(k1 == cache_key(fam.pres, 12));
    CHECK(k1 == cache_key(build_gamma_star(f, 3).pres, 12)); // rebuild hashes identically
    CHECK(k1 != cache_key(fam.pres, 13));

    int na = fam.pres.quiver.num_arrows();
    std::vector<int> rev(na);
    std::iota(rev.begin(), rev.end(), 0);
    std::reverse(rev.begin(), rev.end());
    CHECK(k1 != cache_key(permute_arrows(fam.pres, rev), 12));

    Presentation other = build_gamma_star(f, 4).pres;
    CHECK(k1 != cache_key(other, 12));
}

TEST_CASE("direct store and load round trip") {
    TempDir dir("qha-cache-direct");
    Field f = qhatest::rationals();
    Presentation pres = build_gamma_star(f, 3).pres;
    PipelineOptions opt;
    opt.cap = 12;
    opt.cache_dir = dir.str();
    ComputeResult c = compute_all(pres, opt);

    std::string key = cache_key(pres, 12);
    std::optional<CacheEntry> entry = cache_load(dir.str(), key, pres, 12);
    REQUIRE(entry.has_value());
    CHECK((int)entry->basis_paths.size() == c.basis.dim);
    CHECK(entry->nil_index == c.basis.nil_index);
    CHECK(entry->rad_nil == c.rad_nil);
    CHECK(entry->members.size() == c.gb->members().size());
    CHECK(entry->res.q2.size() == c.res.q2.size());
    CHECK(entry->res.q3.size() == c.res.q3.size());

    // a different cap or presentation under the same key is a miss, not a hit
    CHECK(!cache_load(dir.str(), key, pres, 13).has_value());
    Presentation other = build_gamma_star(f, 4).pres;
    CHECK(!cache_load(dir.str(), key, other, 12).has_value());
    CHECK(!cache_load(dir.str() + "/absent", key, pres, 12).has_value());
}

TEST_CASE("warm runs reproduce cold reports byte for byte") {
    TempDir dir("qha-cache-warm");
    Field f = qhatest::rationals();
    Presentation pres = build_lambda_family(f, 1, 1, 2, 1, f.one()).pres;
    PipelineOptions opt;
    opt.cache_dir = dir.str();

    ComputeResult cold = compute_all(pres, opt);
    CHECK(!std::filesystem::is_empty(dir.p));
    ComputeResult warm = compute_all(pres, opt);
    CHECK(report_compute(cold).json == report_compute(warm).json);
    CHECK(report_compute(cold).text == report_compute(warm).text);

    ComputeResult fresh = compute_all(pres); // cache off
    CHECK(report_compute(fresh).json == report_compute(cold).json);
}

TEST_CASE("corrupt entries are misses and get repaired") {
    TempDir dir("qha-cache-corrupt");
    Field f = qhatest::rationals();
    Presentation pres = build_gamma_star(f, 3).pres;
    PipelineOptions opt;
    opt.cap = 12;
    opt.cache_dir = dir.str();
    std::string baseline = report_compute(compute_all(pres, opt)).json;

    std::string key = cache_key(pres, 12);
    std::filesystem::path file;
    for (const auto& de : std::filesystem::directory_iterator(dir.p))
        if (de.path().filename().string().find(key) != std::string::npos) file = de.path();
    REQUIRE(!file.empty());

    for (const char* garbage : {"{", "{}", "not json at all"}) {
        std::ofstream(file, std::ios::trunc) << garbage;
        CHECK(!cache_load(dir.str(), key, pres, 12).has_value());
    }

    // the pipeline falls back to recomputing and the report is unchanged
    CHECK(report_compute(compute_all(pres, opt)).json == baseline);
    CHECK(cache_load(dir.str(), key, pres, 12).has_value());
}
