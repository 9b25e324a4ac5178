#include "qha/field.hpp"

namespace qha {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// extended gcd inverse, p prime, 0 < a < p
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    long long t = 0, newt = 1;
    long long rr = (long long)p, newr = (long long)a;
    while (newr != 0) {
        long long quo = rr / newr;
        long long tmp = t - quo * newt; t = newt; newt = tmp;
        tmp = rr - quo * newr; rr = newr; newr = tmp;
    }
    if (t < 0) t += (long long)p;
    return (std::uint64_t)t;
}

} // namespace

// deterministic Miller-Rabin, valid for all 64-bit inputs
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % sp == 0) return n == sp;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

Field::Field(FieldSpec s) : spec_(s) {
    if (s.kind == FieldKind::Prime && !is_prime_u64(s.p))
        fail(ErrKind::Validation, "field modulus " + std::to_string(s.p) + " is not prime");
}

void Field::check(const Scalar& a) const {
    if (a.spec != spec_)
        fail(ErrKind::Validation, "scalar of field " + a.spec.name() + " used in field " + spec_.name());
}

Scalar Field::zero() const { return Scalar{spec_, mpq_class(0), 0}; }

Scalar Field::one() const {
    return spec_.kind == FieldKind::Rationals ? Scalar{spec_, mpq_class(1), 0}
                                              : Scalar{spec_, mpq_class(0), 1 % spec_.p};
}

Scalar Field::from_int(long long v) const {
    if (spec_.kind == FieldKind::Rationals) return Scalar{spec_, mpq_class((long)v), 0};
    long long m = v % (long long)spec_.p;
    if (m < 0) m += (long long)spec_.p;
    return Scalar{spec_, mpq_class(0), (std::uint64_t)m};
}

Scalar Field::from_fraction(long long num, long long den) const {
    if (den == 0) fail(ErrKind::Validation, "zero denominator");
    if (spec_.kind == FieldKind::Rationals) {
        mpq_class v(mpz_class((long)num), mpz_class((long)den));
        v.canonicalize();
        return Scalar{spec_, v, 0};
    }
    Scalar d = from_int(den);
    if (is_zero(d)) fail(ErrKind::Validation, "denominator vanishes mod " + std::to_string(spec_.p));
    return mul(from_int(num), inv(d));
}

Scalar Field::parse(const std::string& text) const {
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return from_int(std::stoll(text));
        return from_fraction(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
        fail(ErrKind::Parse, "bad scalar literal '" + text + "'");
    }
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    check(a); check(b);
    if (spec_.kind == FieldKind::Rationals) return Scalar{spec_, a.q + b.q, 0};
    std::uint64_t s = a.r + b.r;
    if (s >= spec_.p) s -= spec_.p;
    return Scalar{spec_, mpq_class(0), s};
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    check(a); check(b);
    if (spec_.kind == FieldKind::Rationals) return Scalar{spec_, a.q * b.q, 0};
    return Scalar{spec_, mpq_class(0), mulmod(a.r, b.r, spec_.p)};
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::neg(const Scalar& a) const {
    check(a);
    if (spec_.kind == FieldKind::Rationals) return Scalar{spec_, -a.q, 0};
    return Scalar{spec_, mpq_class(0), a.r == 0 ? 0 : spec_.p - a.r};
}

Scalar Field::inv(const Scalar& a) const {
    check(a);
    if (is_zero(a)) fail(ErrKind::Validation, "division by zero in " + spec_.name());
    if (spec_.kind == FieldKind::Rationals) return Scalar{spec_, 1 / a.q, 0};
    return Scalar{spec_, mpq_class(0), invmod(a.r, spec_.p)};
}

bool Field::is_zero(const Scalar& a) const {
    check(a);
    return spec_.kind == FieldKind::Rationals ? a.q == 0 : a.r == 0;
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
    check(a); check(b);
    return spec_.kind == FieldKind::Rationals ? a.q == b.q : a.r == b.r;
}

std::string Field::to_string(const Scalar& a) const {
    check(a);
    if (spec_.kind == FieldKind::Rationals) return a.q.get_str();
    return std::to_string(a.r);
}

} // namespace qha
