#pragma once

#include <json.hpp>

#include "eao/invariants.hpp"
#include "eao/nullcone.hpp"
#include "eao/orbits.hpp"

namespace eao::json {

// Insertion-ordered so output keys follow the documented schemas.
using Json = nlohmann::ordered_json;

/// Rationals travel as "num/den" strings. Bare JSON integers are accepted on
/// input; anything else throws Error(malformed_input).
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const Matrix& m);
/// Array of equally long arrays of rationals.
Matrix matrix_from_json(const Json& j);
/// As above, and the shape must be rows x cols.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// {"n","p","q","r","A","B","C"}. "A" is one matrix when r = 1 and a list of r
/// matrices otherwise; a one-element list is also read for r = 1.
Json to_json(const Point& w);
Point point_from_json(const Json& j);

/// {"tau":[...],"gamma":[...]}
Json to_json(const InvariantVector& v);
InvariantVector invariant_vector_from_json(const Json& j);

/// {"tau":{"1,2": value}, "gamma":{"": matrix, "1": matrix}}; words joined by commas.
Json to_json(const WordInvariants& v);

Json to_json(const StabilizerReport& report);
Json to_json(const ComponentInterval& interval);
Json to_json(const Certificate& cert);
Json to_json(const NullconeSummary& summary);

struct ReconstructionInput {
  std::vector<Rational> t;
  std::vector<Matrix> gamma;
};
/// {"t":[...],"gamma":[matrix, ...]} with one gamma per entry of t.
ReconstructionInput reconstruction_input_from_json(const Json& j);

}  // namespace eao::json
