#pragma once
#include "field.hpp"
#include "quiver.hpp"

namespace qha {

struct Term {
    Scalar c;
    Path p;
};

// Element of the path algebra KQ: terms with nonzero coefficients, kept
// sorted strictly descending in the monomial order, so the tip is front().
struct FreeElement {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& tip() const { return terms.front(); }
};

// Uniform element: all terms share one source and one target.
struct UniformElement {
    FreeElement el;
    int src = 0;
    int tgt = 0;
};

// Arithmetic over KQ for a fixed quiver and field.
class PathAlgebra {
public:
    PathAlgebra(const Quiver& q, const Field& f) : q_(&q), f_(&f) {}

    const Quiver& quiver() const { return *q_; }
    const Field& field() const { return *f_; }

    FreeElement zero() const { return {}; }
    FreeElement monomial(const Scalar& c, const Path& p) const;
    FreeElement add(const FreeElement& a, const FreeElement& b) const;
    FreeElement sub(const FreeElement& a, const FreeElement& b) const;
    FreeElement scale(const Scalar& c, const FreeElement& a) const;
    // l * a * r; terms with non-composable products are an error
    FreeElement mul_path(const Path& l, const FreeElement& a, const Path& r) const;
    FreeElement mul(const FreeElement& a, const FreeElement& b) const;
    // scale so the tip coefficient is 1
    FreeElement monic(const FreeElement& a) const;

    bool eq(const FreeElement& a, const FreeElement& b) const;
    // true iff every term shares the given source and target
    bool is_uniform(const FreeElement& a, int* src = nullptr, int* tgt = nullptr) const;
    // wraps is_uniform; fails with Validation when not uniform
    UniformElement as_uniform(const FreeElement& a) const;

    std::string to_string(const FreeElement& a) const;

private:
    const Quiver* q_;
    const Field* f_;
};

} // namespace qha
