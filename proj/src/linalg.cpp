#include "qha/linalg.hpp"
#include <climits>

namespace qha {

SVec svec_scale(const Field& f, const Scalar& c, const SVec& a) {
    if (f.is_zero(c)) return {};
    SVec out;
    out.reserve(a.size());
    for (const auto& [i, v] : a) out.emplace_back(i, f.mul(c, v));
    return out;
}

SVec svec_axpy(const Field& f, const SVec& a, const Scalar& c, const SVec& b) {
    if (f.is_zero(c)) return a;
    SVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) out.push_back(a[i++]);
        else if (a[i].first > b[j].first) {
            out.emplace_back(b[j].first, f.mul(c, b[j].second));
            ++j;
        } else {
            Scalar s = f.add(a[i].second, f.mul(c, b[j].second));
            if (!f.is_zero(s)) out.emplace_back(a[i].first, s);
            ++i; ++j;
        }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
        out.emplace_back(b[j].first, f.mul(c, b[j].second));
        ++j;
    }
    return out;
}

SVec Echelon::tip_reduce(SVec v) const {
    while (!v.empty()) {
        auto it = rows_.find(v.back().first);
        if (it == rows_.end()) break;
        v = svec_axpy(*f_, v, f_->neg(v.back().second), it->second);
    }
    return v;
}

SVec Echelon::reduce(SVec v) const {
    if (rows_.empty()) return v;
    // Eliminate pivot indices from largest down. Entries above the last
    // eliminated index have already been checked and stay untouched.
    int watermark = INT_MAX;
    for (;;) {
        int pos = -1;
        int i = (int)v.size() - 1;
        while (i >= 0 && v[i].first >= watermark) --i;
        for (; i >= 0; --i)
            if (rows_.count(v[i].first)) { pos = i; break; }
        if (pos < 0) return v;
        int idx = v[pos].first;
        v = svec_axpy(*f_, v, f_->neg(v[pos].second), rows_.at(idx));
        watermark = idx;
    }
}

bool Echelon::insert(SVec v) {
    v = reduced_ ? reduce(std::move(v)) : tip_reduce(std::move(v));
    if (v.empty()) return false;
    v = svec_scale(*f_, f_->inv(v.back().second), v);
    int piv = v.back().first;
    if (reduced_) {
        for (auto& [p, row] : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(piv, Scalar{}),
                                       [](const auto& x, const auto& y) { return x.first < y.first; });
            if (it != row.end() && it->first == piv)
                row = svec_axpy(*f_, row, f_->neg(it->second), v);
        }
    }
    rows_[piv] = std::move(v);
    return true;
}

SVec mat_apply(const Field& f, const std::vector<SVec>& cols, const SVec& x) {
    SVec out;
    for (const auto& [c, v] : x) out = svec_axpy(f, out, v, cols[c]);
    return out;
}

std::vector<SVec> kernel_basis(const Field& f, const std::vector<SVec>& im, int dim_main) {
    (void)dim_main;
    int m = (int)im.size();
    // Shift the target coordinates above the coefficient coordinates, so
    // elimination works the target side down to zero before a row can acquire
    // a coefficient-side pivot; such rows are exactly the kernel relations.
    Echelon e(f, false);
    for (int i = 0; i < m; ++i) {
        SVec w;
        w.reserve(im[i].size() + 1);
        w.emplace_back(i, f.one());
        for (const auto& [idx, c] : im[i]) w.emplace_back(m + idx, c);
        e.insert(std::move(w));
    }
    Echelon ker(f, true);
    for (const auto& [piv, row] : e.rows())
        if (piv < m) ker.insert(row);
    std::vector<SVec> out;
    out.reserve(ker.rows().size());
    for (const auto& [piv, row] : ker.rows()) out.push_back(row);
    return out;
}

} // namespace qha
