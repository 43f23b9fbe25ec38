#ifndef GRNOV_RING_HPP
#define GRNOV_RING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "grnov/multipoly.hpp"
#include "grnov/scalar.hpp"

namespace grnov {

// Homogeneous element of a Z-graded ring. The payload depends on the ring
// variant: a single coefficient (Laurent), a coordinate vector over the R_0
// basis (twisted Laurent), or a multivariate polynomial in Groebner normal
// form whose monomials all have the stated graded degree (graded quotient).
struct Homog {
    int degree = 0;
    std::variant<Scalar, std::vector<Scalar>, MultiPoly> payload;
};

struct PartitionPair {
    Homog u;  // degree n
    Homog v;  // degree -n
};

// Finite family with sum(u_j * v_j) == 1 exactly.
struct Partition {
    int n = 0;
    std::vector<PartitionPair> pairs;
};

struct VerifyResult {
    bool ok = true;
    std::string message;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
  public:
    enum class Kind { laurent, twisted_laurent, graded_quotient };

    Ring() = default;
    Ring(const Ring& o);  // copies the specification, not the caches
    Ring& operator=(const Ring&) = delete;

    static RingPtr make_laurent(const Field& f);
    // R_0 a finite-dimensional K-algebra given by structure constants
    // (strc[i][j] = coordinates of e_i * e_j); degree-n component is the free
    // rank-1 R_0-module R_0 * s^n with (a s^m)(b s^n) = a phi^m(b) s^{m+n}.
    static RingPtr make_twisted(const Field& f, std::size_t dim, std::vector<Scalar> one,
                                std::vector<std::vector<std::vector<Scalar>>> strc,
                                std::vector<std::vector<Scalar>> aut);
    // Commutative polynomial quotient with integer variable degrees and
    // homogeneous relations; lex order on the declared variable order.
    // check_partitions = false defers the partition checks to ring_verify.
    static RingPtr make_graded_quotient(const Field& f, std::vector<std::string> names,
                                        std::vector<int> degrees, std::vector<MultiPoly> relations,
                                        Partition pou_plus, Partition pou_minus,
                                        bool check_partitions = true);
    // same construction with the partition checks skipped (staging for parsers)
    static RingPtr make_graded_quotient_unvalidated(const Field& f, std::vector<std::string> names,
                                                    std::vector<int> degrees,
                                                    std::vector<MultiPoly> relations);

    Kind kind() const { return kind_; }
    const Field& field() const { return field_; }
    bool component_finite() const { return kind_ != Kind::graded_quotient; }
    const Partition& pou_plus() const { return pou_plus_; }
    const Partition& pou_minus() const { return pou_minus_; }
    bool same(const Ring& o) const;

    // twisted accessors
    std::size_t dim() const { return dim_; }
    const std::vector<Scalar>& one_coords() const { return one_; }
    const std::vector<std::vector<Scalar>>& aut() const { return aut_; }
    const std::vector<std::vector<Scalar>>& aut_power(long n) const;

    // quotient accessors
    const std::vector<std::string>& var_names() const { return names_; }
    const std::vector<int>& var_degrees() const { return degrees_; }
    const std::vector<MultiPoly>& relations() const { return relations_; }
    const std::vector<MultiPoly>& groebner() const { return groebner_; }
    MultiPoly normal_form(const MultiPoly& p) const;

    // homogeneous-element operations
    Homog h_zero(int degree) const;
    Homog h_one() const;
    Homog h_from_coeff(int degree, const Scalar& c) const;            // laurent
    Homog h_from_coords(int degree, std::vector<Scalar> coords) const;  // twisted
    Homog h_from_poly(int degree, const MultiPoly& p) const;          // quotient (normalizes)
    bool h_is_zero(const Homog& a) const;
    bool h_eq(const Homog& a, const Homog& b) const;
    Homog h_add(const Homog& a, const Homog& b) const;  // same degree
    Homog h_neg(const Homog& a) const;
    Homog h_scale(const Homog& a, const Scalar& c) const;
    Homog h_mul(const Homog& a, const Homog& b) const;  // degrees add
    std::string h_to_string(const Homog& a) const;

    // component-finite interface
    std::size_t component_dim() const;  // dimension of every R_k over K
    std::vector<Scalar> h_coords(const Homog& a) const;
    Homog h_from_component_coords(int degree, const std::vector<Scalar>& coords) const;
    // K-matrix of x -> a*x as a map R_k -> R_{k+deg a} (column-major action)
    std::vector<std::vector<Scalar>> left_mul_matrix(const Homog& a, int k) const;
    // K-matrix of x -> x*a as a map R_k -> R_{k+deg a}
    std::vector<std::vector<Scalar>> right_mul_matrix(const Homog& a, int k) const;

    // partition of unity of type (n, -n); memoized
    const Partition& partition(int n) const;

    // ring with the degree map negated
    RingPtr reversed() const;
    Homog h_reversed(const Homog& a) const;

  private:
    Kind kind_ = Kind::laurent;
    Field field_;
    Partition pou_plus_, pou_minus_;
    // twisted
    std::size_t dim_ = 0;
    std::vector<Scalar> one_;
    std::vector<std::vector<std::vector<Scalar>>> strc_;
    std::vector<std::vector<Scalar>> aut_, aut_inv_;
    // quotient
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::vector<MultiPoly> relations_;
    std::vector<MultiPoly> groebner_;

    mutable std::mutex cache_mutex_;
    mutable std::map<int, Partition> partition_cache_;
    mutable std::map<long, std::vector<std::vector<Scalar>>> aut_power_cache_;

    std::vector<Scalar> r0_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    std::vector<Scalar> apply_aut(const std::vector<std::vector<Scalar>>& m,
                                  const std::vector<Scalar>& v) const;
};

// Element of the graded ring: finite family of nonzero homogeneous components.
class GradedScalar {
  public:
    GradedScalar() = default;
    explicit GradedScalar(RingPtr ring) : ring_(std::move(ring)) {}
    static GradedScalar zero(RingPtr ring) { return GradedScalar(std::move(ring)); }
    static GradedScalar one(RingPtr ring);
    static GradedScalar from_homog(RingPtr ring, Homog h);

    const RingPtr& ring() const { return ring_; }
    const std::map<int, Homog>& components() const { return comps_; }
    bool is_zero() const { return comps_.empty(); }
    Homog component(int degree) const;  // zero homog if absent
    void add_component(const Homog& h);
    std::optional<std::pair<int, int>> degree_span() const;  // min, max

    GradedScalar operator-() const;
    friend GradedScalar operator+(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator-(const GradedScalar& a, const GradedScalar& b);
    friend GradedScalar operator*(const GradedScalar& a, const GradedScalar& b);
    GradedScalar scaled(const Scalar& c) const;

    bool operator==(const GradedScalar& o) const;
    bool operator!=(const GradedScalar& o) const { return !(*this == o); }

    GradedScalar reversed(const RingPtr& reversed_ring) const;
    std::string to_string() const;

  private:
    RingPtr ring_;
    std::map<int, Homog> comps_;
};

GradedScalar gs_int(const RingPtr& ring, long long v);  // constant of degree 0

// Tuple-product construction: the |pou|^|n| pairs u_{j1}...u_{jm} / v_{jm}...v_{j1}.
Partition derive_partition(const Ring& ring, int n);

// Degree check, sum-to-one check, and the dual-basis identity on samples.
VerifyResult verify_partition(const Ring& ring, const Partition& p);

}  // namespace grnov

#endif
