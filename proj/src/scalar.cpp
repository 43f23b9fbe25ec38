#include "grnov/scalar.hpp"

#include <stdexcept>

namespace grnov {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

namespace {
bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin bases for 64-bit integers
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}
}  // namespace

Field Field::Fp(std::uint64_t p) {
    if (p >= (1ull << 63)) throw std::invalid_argument("Field: modulus too large");
    if (!is_probable_prime(p)) throw std::invalid_argument("Field: modulus is not prime");
    return Field{Kind::prime, p};
}

std::string Field::to_string() const {
    if (kind == Kind::rationals) return "Q";
    return "F" + std::to_string(p);
}

void Scalar::check_same(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("Scalar: mixed fields");
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.kind == Field::Kind::rationals) {
        s.q_ = Rational(v);
    } else {
        long long m = v % static_cast<long long>(f.p);
        if (m < 0) m += static_cast<long long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
    Scalar s;
    s.field_ = f;
    if (f.kind == Field::Kind::rationals) {
        s.q_ = q;
        return s;
    }
    // reduce a/b mod p
    BigInt p(static_cast<long long>(f.p));
    BigInt nr = q.num() % p;
    BigInt dr = q.den() % p;
    long long n = nr.to_slong(), d = dr.to_slong();
    if (n < 0) n += static_cast<long long>(f.p);
    if (d < 0) d += static_cast<long long>(f.p);
    if (d == 0) throw std::domain_error("Scalar: denominator divisible by p");
    std::uint64_t dinv = powmod_u64(static_cast<std::uint64_t>(d), f.p - 2, f.p);
    s.r_ = mulmod_u64(static_cast<std::uint64_t>(n), dinv, f.p);
    return s;
}

Scalar Scalar::from_string(const Field& f, std::string_view str) {
    return from_rational(f, Rational::from_string(str));
}

bool Scalar::is_zero() const {
    return field_.kind == Field::Kind::rationals ? q_.is_zero() : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == Field::Kind::rationals ? q_.is_one() : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == Field::Kind::rationals)
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = field_.p - r_;
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    Scalar s = a;
    if (a.field_.kind == Field::Kind::rationals) {
        s.q_ = a.q_ + b.q_;
    } else {
        std::uint64_t t = a.r_ + b.r_;
        if (t >= a.field_.p) t -= a.field_.p;
        s.r_ = t;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::check_same(a, b);
    Scalar s = a;
    if (a.field_.kind == Field::Kind::rationals)
        s.q_ = a.q_ * b.q_;
    else
        s.r_ = mulmod_u64(a.r_, b.r_, a.field_.p);
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s = *this;
    if (field_.kind == Field::Kind::rationals)
        s.q_ = q_.inverse();
    else
        s.r_ = powmod_u64(r_, field_.p - 2, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    return field_.kind == Field::Kind::rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::to_string() const {
    return field_.kind == Field::Kind::rationals ? q_.to_string() : std::to_string(r_);
}

}  // namespace grnov
