#ifndef GRNOV_IO_HPP
#define GRNOV_IO_HPP

#include <json.hpp>
#include <stdexcept>

#include "grnov/contraction.hpp"
#include "grnov/sheaf.hpp"

namespace grnov {

// malformed or inconsistent input documents (CLI exit code 3)
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

Json parse_json_text(const std::string& text);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// scalars and ring elements
Scalar scalar_from_json(const Field& f, const Json& j);
Json scalar_to_json(const Scalar& s);
Homog homog_from_json(const RingPtr& ring, const Json& j);
Json homog_to_json(const RingPtr& ring, const Homog& h);
GradedScalar graded_from_json(const RingPtr& ring, const Json& j);
Json graded_to_json(const GradedScalar& g);
TruncNov truncnov_from_json(const RingPtr& ring, const Json& j);
Json truncnov_to_json(const TruncNov& t);

// ring documents. With validate = true (the default everywhere a ring is
// consumed) loading runs the partition and homogeneity checks and fails on
// violation; validate = false parses a schema-correct document and leaves the
// checks to ring verification, which can then report a clean failure.
RingPtr ring_from_json(const Json& j, bool validate = true);
Json ring_to_json(const Ring& r);

// complex documents carry their ring inline; loading validates d^2 = 0
FreeComplex complex_from_json(const Json& j);
Json complex_to_json(const FreeComplex& c);

Certificate certificate_from_json(const RingPtr& ring, const Json& j);
Json certificate_to_json(const Certificate& cert);

// witness documents: windows, the block complex, optional Betti table
Json witness_to_json(const SheafComplex& s, const R0Complex& w, const std::map<int, long>* betti);
struct WitnessDocument {
    std::map<int, std::pair<int, int>> windows;
    R0Complex complex;
    std::map<int, long> betti;
    bool has_betti = false;
};
WitnessDocument witness_from_json(const RingPtr& ring, const Json& j);

}  // namespace grnov

#endif
