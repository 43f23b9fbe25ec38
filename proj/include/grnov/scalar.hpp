#ifndef GRNOV_SCALAR_HPP
#define GRNOV_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "grnov/bigint.hpp"

namespace grnov {

// Ground field: the rationals or a prime field F_p with p a machine-word prime.
struct Field {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0;

    static Field Q() { return Field{Kind::rationals, 0}; }
    static Field Fp(std::uint64_t p);

    bool operator==(const Field&) const = default;
    std::string to_string() const;
};

// Exact field element; self-describing (carries its field).
class Scalar {
  public:
    Scalar() = default;  // zero over Q
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long v);
    static Scalar from_rational(const Field& f, const Rational& q);
    static Scalar from_string(const Field& f, std::string_view s);  // "a" or "a/b"

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Field field_;
    Rational q_;            // rationals payload
    std::uint64_t r_ = 0;   // prime-field payload, in [0, p)

    static void check_same(const Scalar& a, const Scalar& b);
};

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p);

}  // namespace grnov

#endif
