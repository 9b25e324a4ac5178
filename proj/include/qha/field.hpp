#pragma once
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "error.hpp"

namespace qha {

enum class FieldKind { Rationals, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0; // prime modulus, Prime only

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string name() const {
        return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
    }
};

// A field element. Q values live in `q` (always canonical: reduced, positive
// denominator - gmp maintains this); F_p values live in `r` with 0 <= r < p.
// The spec tag travels with the value so cross-field mixing is detectable.
struct Scalar {
    FieldSpec spec;
    mpq_class q;
    std::uint64_t r = 0;
};

// Arithmetic for one fixed FieldSpec. Stateless apart from the spec; all ops
// check that operand specs match and throw Validation errors otherwise.
class Field {
public:
    Field() = default;
    explicit Field(FieldSpec s); // validates primality for Prime

    const FieldSpec& spec() const { return spec_; }
    std::uint64_t characteristic() const { return spec_.kind == FieldKind::Prime ? spec_.p : 0; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long long v) const;
    Scalar from_fraction(long long num, long long den) const;
    // accepts "n" or "n/d" with optional leading '-'
    Scalar parse(const std::string& text) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const; // b == 0 -> Validation
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // a == 0 -> Validation

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    std::string to_string(const Scalar& a) const;

private:
    void check(const Scalar& a) const;
    FieldSpec spec_;
};

bool is_prime_u64(std::uint64_t n);

} // namespace qha
