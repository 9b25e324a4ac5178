#include "qha/quiver.hpp"

namespace qha {

int Quiver::add_vertex(const std::string& name) {
    if (vertex_index_.count(name))
        fail(ErrKind::Parse, "duplicate vertex '" + name + "'");
    int id = (int)vertex_names_.size();
    vertex_names_.push_back(name);
    vertex_index_[name] = id;
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

int Quiver::add_arrow(const std::string& name, int src, int tgt) {
    if (arrow_index_.count(name))
        fail(ErrKind::Parse, "duplicate arrow '" + name + "'");
    if (src < 0 || src >= num_vertices() || tgt < 0 || tgt >= num_vertices())
        fail(ErrKind::Validation, "arrow '" + name + "' references unknown vertex");
    int id = (int)arrows_.size();
    arrows_.push_back(Arrow{name, src, tgt});
    arrow_index_[name] = id;
    out_[src].push_back(id);
    in_[tgt].push_back(id);
    return id;
}

int Quiver::find_vertex(const std::string& name) const {
    auto it = vertex_index_.find(name);
    return it == vertex_index_.end() ? -1 : it->second;
}

int Quiver::find_arrow(const std::string& name) const {
    auto it = arrow_index_.find(name);
    return it == arrow_index_.end() ? -1 : it->second;
}

int path_cmp(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    for (int i = 0; i < a.length(); ++i)
        if (a.as[i] != b.as[i]) return a.as[i] < b.as[i] ? -1 : 1;
    if (a.src != b.src) return a.src < b.src ? -1 : 1;
    return 0;
}

bool composable(const Quiver& q, const Path& a, const Path& b) {
    return a.target(q) == b.source();
}

Path concat(const Quiver& q, const Path& a, const Path& b) {
    if (!composable(q, a, b))
        fail(ErrKind::Validation, "paths not composable: " + path_str(q, a) + " * " + path_str(q, b));
    Path r = a;
    r.as.insert(r.as.end(), b.as.begin(), b.as.end());
    return r;
}

Path path_from_names(const Quiver& q, const std::vector<std::string>& names) {
    if (names.empty()) fail(ErrKind::Validation, "empty arrow name list");
    Path p;
    for (const auto& name : names) {
        int a = q.find_arrow(name);
        if (a < 0) fail(ErrKind::Validation, "unknown arrow '" + name + "'");
        if (p.as.empty())
            p.src = q.arrow(a).src;
        else if (p.target(q) != q.arrow(a).src)
            fail(ErrKind::Validation, "arrow '" + name + "' does not compose");
        p.as.push_back(a);
    }
    return p;
}

std::string path_str(const Quiver& q, const Path& p) {
    if (p.trivial()) return "e_" + q.vertex_name(p.src);
    std::string s;
    for (size_t i = 0; i < p.as.size(); ++i) {
        if (i) s += " ";
        s += q.arrow(p.as[i]).name;
    }
    return s;
}

} // namespace qha
