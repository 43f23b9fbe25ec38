#ifndef GRNOV_IDENTITIES_HPP
#define GRNOV_IDENTITIES_HPP

#include "grnov/contraction.hpp"
#include "grnov/sheaf.hpp"

namespace grnov {

// splitmix64: fixed across platforms so suite failures reproduce exactly
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Scalar random_scalar(Rng& rng, const Field& f, bool nonzero);
Homog random_homog(const RingPtr& ring, Rng& rng, int degree);
GradedScalar random_graded(const RingPtr& ring, Rng& rng, int deg_lo, int deg_hi, int max_terms);
Induced random_induced(const RingPtr& ring, Rng& rng, int ngens, int k_lo, int k_hi, int max_slots);
TruncNov random_truncnov(const RingPtr& ring, Rng& rng, long lo, long hi, int max_terms);

struct SuiteReport {
    std::string suite;
    int samples = 0;
    bool pass = true;
    std::string failure;  // first failing sample, with its index
};

// suite: one of "all", "resolution", "windows", "series", "adjoints"
std::vector<SuiteReport> run_identity_suites(const RingPtr& ring, const std::string& suite,
                                             std::uint64_t seed, int samples);

// random bounded complex over the ring (d^2 = 0 by construction around a
// random zero pattern); used by the coherence suite over the Laurent ring
FreeComplex random_laurent_complex(const RingPtr& ring, Rng& rng, int levels, int max_rank,
                                   int deg_lo, int deg_hi);

}  // namespace grnov

#endif
