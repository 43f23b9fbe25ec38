#ifndef GRNOV_LAURENT_HOMOLOGY_HPP
#define GRNOV_LAURENT_HOMOLOGY_HPP

#include <map>

#include "grnov/complex.hpp"

namespace grnov {

// K[t,t^-1] is Euclidean with the degree-width of a Laurent polynomial as
// Euclidean function; units are the width-0 elements c*t^k.

int lp_width(const GradedScalar& f);  // -1 for zero
// f = q*g + r with width(r) < width(g); g != 0
void lp_divmod(const GradedScalar& f, const GradedScalar& g, GradedScalar& q, GradedScalar& r);
// divide by the unit c*t^k so the result is monic in K[t] with nonzero constant term
GradedScalar lp_normalize_unit(const GradedScalar& f);
bool lp_divides(const GradedScalar& g, const GradedScalar& f);

struct SmithResult {
    int rank = 0;
    std::vector<GradedScalar> invariant_factors;  // normalized, each divides the next
};
SmithResult laurent_smith(const RingPtr& ring, GsMatrix m);

struct HomologyLevel {
    long free_rank = 0;
    std::vector<GradedScalar> invariant_factors;  // nonunit torsion factors
};

struct LaurentHomology {
    std::map<int, HomologyLevel> levels;
    bool torsion_only() const;
    // K-dimension per index; only valid when torsion_only()
    std::map<int, long> k_dimensions() const;
};

// exact homology over the PID K[t,t^-1]; rejects non-Laurent rings
LaurentHomology laurent_homology(const FreeComplex& c);

int laurent_matrix_rank(const RingPtr& ring, const GsMatrix& m);  // rank over K(t)

enum class NovikovVerdict { acyclic, not_acyclic };
struct NovikovDecision {
    NovikovVerdict plus = NovikovVerdict::not_acyclic;
    NovikovVerdict minus = NovikovVerdict::not_acyclic;
};

// For a field K both Novikov rings are fields containing K(t), so acyclicity
// of C over either reduces to rank conditions over the fraction field.
NovikovDecision laurent_novikov_decide(const FreeComplex& c);

}  // namespace grnov

#endif
