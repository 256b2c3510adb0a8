#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cmreal/cherednik.hpp"
#include "cmreal/quasi_exp.hpp"
#include "cmreal/schur.hpp"

namespace cmreal {

using Json = nlohmann::ordered_json;

/// Malformed input; the message carries the byte offset or JSON pointer.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

// Exact scalars are {"re": "p/q", "im": "p/q"}. Readers also accept a bare
// string ("1/2-3i") or an integer.
Json to_json(const Gq& a);
Json to_json(const cplx& a);
Json to_json(const MatQ& m);
Json to_json(const MatC& m);
Json to_json(const CMPair& p);
Json to_json(const CMPairC& p);
Json to_json(const CMChart& c);
Json to_json(const CMChartC& c);
Json to_json(const PolyQ& p);
Json to_json(const QuasiExpSpace& s);
Json to_json(const Partition& lam);
Json to_json(const DunklRep& rep);

Gq gq_from_json(const Json& j);
MatQ matq_from_json(const Json& j);
/// Validates the rank-one condition.
CMPair cmpair_from_json(const Json& j);
CMChart cmchart_from_json(const Json& j);
QuasiExpSpace quasi_exp_from_json(const Json& j);
Partition partition_from_json(const Json& j);

}  // namespace cmreal
