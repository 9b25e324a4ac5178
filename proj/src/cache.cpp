#include "qha/cache.hpp"
#include "qha/dsl.hpp"

#include <json.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qha {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kSchema = 1;

json path_to_json(const Path& p) { return json{p.src, p.as}; }

Path path_from_json(const Quiver& q, const json& j) {
    Path p;
    p.src = j.at(0).get<int>();
    if (p.src < 0 || p.src >= q.num_vertices()) fail(ErrKind::Parse, "cache: bad vertex");
    int at = p.src;
    for (const auto& e : j.at(1)) {
        int a = e.get<int>();
        if (a < 0 || a >= q.num_arrows() || q.arrow(a).src != at)
            fail(ErrKind::Parse, "cache: bad path");
        at = q.arrow(a).tgt;
        p.as.push_back(a);
    }
    return p;
}

json elem_to_json(const Field& f, const FreeElement& x) {
    json terms = json::array();
    for (const Term& t : x.terms) terms.push_back(json{f.to_string(t.c), path_to_json(t.p)});
    return terms;
}

FreeElement elem_from_json(const PathAlgebra& pa, const json& j) {
    FreeElement x;
    for (const auto& t : j)
        x = pa.add(x, pa.monomial(pa.field().parse(t.at(0).get<std::string>()),
                                  path_from_json(pa.quiver(), t.at(1))));
    return x;
}

json uniform_to_json(const Field& f, const UniformElement& u) {
    return json{{"src", u.src}, {"tgt", u.tgt}, {"el", elem_to_json(f, u.el)}};
}

UniformElement uniform_from_json(const PathAlgebra& pa, const json& j) {
    UniformElement u;
    u.src = j.at("src").get<int>();
    u.tgt = j.at("tgt").get<int>();
    u.el = elem_from_json(pa, j.at("el"));
    return u;
}

json map_to_json(const Field& f, const BimoduleMap& m) {
    json out = json::array();
    for (const auto& comps : m) {
        json row = json::array();
        for (const MapComponent& c : comps)
            row.push_back(json{{"dst", c.dst},
                               {"l", elem_to_json(f, c.l)},
                               {"r", elem_to_json(f, c.r)}});
        out.push_back(std::move(row));
    }
    return out;
}

BimoduleMap map_from_json(const PathAlgebra& pa, const json& j) {
    BimoduleMap m;
    for (const auto& row : j) {
        std::vector<MapComponent> comps;
        for (const auto& c : row)
            comps.push_back(MapComponent{c.at("dst").get<int>(), elem_from_json(pa, c.at("l")),
                                         elem_from_json(pa, c.at("r"))});
        m.push_back(std::move(comps));
    }
    return m;
}

json summands_to_json(const std::vector<Summand>& ss) {
    json out = json::array();
    for (const Summand& s : ss) out.push_back(json{s.o, s.t});
    return out;
}

std::vector<Summand> summands_from_json(const json& j) {
    std::vector<Summand> out;
    for (const auto& s : j) out.push_back(Summand{s.at(0).get<int>(), s.at(1).get<int>()});
    return out;
}

fs::path entry_path(const std::string& dir, const std::string& key) {
    return fs::path(dir) / (key + ".json");
}

} // namespace

std::string cache_key(const Presentation& pres, int cap) {
    std::string material = print_presentation(pres);
    material += "\narrows:";
    for (const Arrow& a : pres.quiver.arrows()) material += " " + a.name;
    material += "\ncap: " + std::to_string(cap);
    material += "\nschema: " + std::to_string(kSchema);

    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : material) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::optional<CacheEntry> cache_load(const std::string& dir, const std::string& key,
                                     const Presentation& pres, int cap) {
    if (dir.empty()) return std::nullopt;
    std::ifstream in(entry_path(dir, key));
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("schema").get<int>() != kSchema) return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        if (j.at("field").get<std::string>() != pres.field.spec().name()) return std::nullopt;
        if (j.at("cap").get<int>() != cap) return std::nullopt;

        PathAlgebra pa = pres.algebra();
        CacheEntry e;
        for (const auto& m : j.at("gb"))
            e.members.push_back(GBMember{uniform_from_json(pa, m), {}});
        for (const auto& p : j.at("basis")) e.basis_paths.push_back(path_from_json(pres.quiver, p));
        e.nil_index = j.at("nil_index").get<int>();
        e.rad_nil = j.at("rad_nil").get<int>();
        for (const auto& u : j.at("f2").at("elements"))
            e.res.f2.elements.push_back(uniform_from_json(pa, u));
        e.res.f2.selected = j.at("f2").at("selected").get<std::vector<int>>();
        e.res.q0 = summands_from_json(j.at("q0"));
        e.res.q1 = summands_from_json(j.at("q1"));
        e.res.q2 = summands_from_json(j.at("q2"));
        e.res.q3 = summands_from_json(j.at("q3"));
        e.res.a1 = map_from_json(pa, j.at("a1"));
        e.res.a2 = map_from_json(pa, j.at("a2"));
        e.res.a3 = map_from_json(pa, j.at("a3"));
        e.res.rad_nil = e.rad_nil;
        return e;
    } catch (...) {
        return std::nullopt; // corrupt or stale: recompute
    }
}

void cache_store(const std::string& dir, const std::string& key, const Presentation& pres,
                 int cap, const CacheEntry& entry) {
    if (dir.empty()) return;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) return;

    // one writer at a time; losers simply skip (the winner stores the same bytes)
    fs::path lock = fs::path(dir) / (key + ".lock");
    int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
    if (fd < 0) return;
    ::close(fd);
    fs::path tmp = fs::path(dir) / (key + ".tmp");

    const Field& f = pres.field;
    json j;
    j["schema"] = kSchema;
    j["key"] = key;
    j["field"] = f.spec().name();
    j["cap"] = cap;
    json gb = json::array();
    for (const GBMember& m : entry.members) gb.push_back(uniform_to_json(f, m.u));
    j["gb"] = std::move(gb);
    json bp = json::array();
    for (const Path& p : entry.basis_paths) bp.push_back(path_to_json(p));
    j["basis"] = std::move(bp);
    j["nil_index"] = entry.nil_index;
    j["rad_nil"] = entry.rad_nil;
    json f2e = json::array();
    for (const UniformElement& u : entry.res.f2.elements) f2e.push_back(uniform_to_json(f, u));
    j["f2"] = json{{"elements", std::move(f2e)}, {"selected", entry.res.f2.selected}};
    j["q0"] = summands_to_json(entry.res.q0);
    j["q1"] = summands_to_json(entry.res.q1);
    j["q2"] = summands_to_json(entry.res.q2);
    j["q3"] = summands_to_json(entry.res.q3);
    j["a1"] = map_to_json(f, entry.res.a1);
    j["a2"] = map_to_json(f, entry.res.a2);
    j["a3"] = map_to_json(f, entry.res.a3);

    {
        std::ofstream out(tmp);
        if (!out) {
            fs::remove(lock, ec);
            return;
        }
        out << j.dump(1) << "\n";
    }
    fs::rename(tmp, entry_path(dir, key), ec);
    fs::remove(lock, ec);
}

} // namespace qha
