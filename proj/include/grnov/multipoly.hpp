#ifndef GRNOV_MULTIPOLY_HPP
#define GRNOV_MULTIPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "grnov/scalar.hpp"

namespace grnov {

// Exponent vector; all monomials of a polynomial share the same length.
using Monomial = std::vector<std::uint32_t>;

bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
// lex order on the declared variable order (earlier variable dominates)
int mono_cmp_lex(const Monomial& a, const Monomial& b);
long mono_graded_degree(const Monomial& m, const std::vector<int>& var_degrees);

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Multivariate polynomial; terms sorted in strictly descending lex order,
// no zero coefficients.
class MultiPoly {
  public:
    MultiPoly() = default;
    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(std::size_t nvars, const Scalar& c);
    static MultiPoly monomial(Monomial m, const Scalar& c);
    static MultiPoly from_terms(std::vector<Term> terms);  // normalizes

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Scalar& c) const;
    MultiPoly mono_scaled(const Monomial& m, const Scalar& c) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // graded degree w.r.t. declared variable degrees; nullopt unless all
    // monomials share one degree (zero polynomial reports any degree as ok)
    std::optional<long> homogeneous_degree(const std::vector<int>& var_degrees) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

  private:
    std::vector<Term> terms_;
};

// Remainder of p under multivariate division by basis (lex order); the unique
// normal form when basis is a Groebner basis.
MultiPoly poly_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

// Buchberger completion followed by inter-reduction; output is the reduced
// Groebner basis with monic leading coefficients.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens);

}  // namespace grnov

#endif
