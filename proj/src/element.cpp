#include "qha/element.hpp"
#include <algorithm>

namespace qha {

FreeElement PathAlgebra::monomial(const Scalar& c, const Path& p) const {
    if (f_->is_zero(c)) return {};
    return FreeElement{{Term{c, p}}};
}

// merge two descending term lists, cancelling equal paths
FreeElement PathAlgebra::add(const FreeElement& a, const FreeElement& b) const {
    FreeElement out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = path_cmp(a.terms[i].p, b.terms[j].p);
        if (c > 0) out.terms.push_back(a.terms[i++]);
        else if (c < 0) out.terms.push_back(b.terms[j++]);
        else {
            Scalar s = f_->add(a.terms[i].c, b.terms[j].c);
            if (!f_->is_zero(s)) out.terms.push_back(Term{s, a.terms[i].p});
            ++i; ++j;
        }
    }
    while (i < a.terms.size()) out.terms.push_back(a.terms[i++]);
    while (j < b.terms.size()) out.terms.push_back(b.terms[j++]);
    return out;
}

FreeElement PathAlgebra::sub(const FreeElement& a, const FreeElement& b) const {
    return add(a, scale(f_->neg(f_->one()), b));
}

FreeElement PathAlgebra::scale(const Scalar& c, const FreeElement& a) const {
    if (f_->is_zero(c)) return {};
    FreeElement out;
    out.terms.reserve(a.terms.size());
    for (const Term& t : a.terms) out.terms.push_back(Term{f_->mul(c, t.c), t.p});
    return out;
}

FreeElement PathAlgebra::mul_path(const Path& l, const FreeElement& a, const Path& r) const {
    // u p v preserves the strict order of p's terms (the order is multiplicative),
    // so the result stays sorted without re-sorting.
    FreeElement out;
    out.terms.reserve(a.terms.size());
    for (const Term& t : a.terms)
        out.terms.push_back(Term{t.c, concat(*q_, concat(*q_, l, t.p), r)});
    return out;
}

FreeElement PathAlgebra::mul(const FreeElement& a, const FreeElement& b) const {
    FreeElement out;
    for (const Term& ta : a.terms) {
        FreeElement row;
        row.terms.reserve(b.terms.size());
        for (const Term& tb : b.terms) {
            if (ta.p.target(*q_) != tb.p.source()) continue;
            row.terms.push_back(Term{f_->mul(ta.c, tb.c), concat(*q_, ta.p, tb.p)});
        }
        out = add(out, row);
    }
    return out;
}

FreeElement PathAlgebra::monic(const FreeElement& a) const {
    if (a.is_zero()) return a;
    return scale(f_->inv(a.tip().c), a);
}

bool PathAlgebra::eq(const FreeElement& a, const FreeElement& b) const {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (!(a.terms[i].p == b.terms[i].p) || !f_->eq(a.terms[i].c, b.terms[i].c))
            return false;
    return true;
}

bool PathAlgebra::is_uniform(const FreeElement& a, int* src, int* tgt) const {
    if (a.is_zero()) return false;
    int s = a.terms[0].p.source(), t = a.terms[0].p.target(*q_);
    for (const Term& tm : a.terms)
        if (tm.p.source() != s || tm.p.target(*q_) != t) return false;
    if (src) *src = s;
    if (tgt) *tgt = t;
    return true;
}

UniformElement PathAlgebra::as_uniform(const FreeElement& a) const {
    int s, t;
    if (!is_uniform(a, &s, &t))
        fail(ErrKind::Validation, "element is not uniform: " + to_string(a));
    return UniformElement{a, s, t};
}

std::string PathAlgebra::to_string(const FreeElement& a) const {
    if (a.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const Term& t = a.terms[i];
        std::string c = f_->to_string(t.c);
        if (i == 0) {
            if (c == "-1") s += "-";
            else if (c != "1") s += c + " ";
        } else {
            if (!c.empty() && c[0] == '-') {
                s += " - ";
                c = c.substr(1);
            } else {
                s += " + ";
            }
            if (c != "1") s += c + " ";
        }
        s += path_str(*q_, t.p);
    }
    return s;
}

} // namespace qha
