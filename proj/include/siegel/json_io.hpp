#pragma once

#include "siegel/halfint.hpp"
#include "siegel/padic.hpp"
#include "siegel/qexpansion.hpp"
#include "siegel/symplectic.hpp"
#include "siegel/theta.hpp"

#include <json.hpp>

#include <string>

namespace siegel {

using Json = nlohmann::json;

// Malformed input raises std::invalid_argument throughout.

Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

/// 2T as nested row-major arrays.
Json to_json(const HalfIntegralMatrix& t);
HalfIntegralMatrix half_integral_from_json(const Json& j);

/// {"degree", "trace_bound", "shape", "meta", "coeffs"}; coefficients listed in
/// index order, rationals as "num/den".
Json to_json(const FourierExpansion& f);
FourierExpansion expansion_from_json(const Json& j);

/// {"rank", "gram"}.
Json to_json(const GramLattice& q);
GramLattice gram_from_json(const Json& j);

Json to_json(const Valuation& v);
Json to_json(const CongruenceReport& r);
Json to_json(const CosetRep& c);

/// Reads and parses a JSON file.
Json read_json_file(const std::string& path);

} // namespace siegel
