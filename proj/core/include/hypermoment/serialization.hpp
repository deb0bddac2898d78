#pragma once

#include <cstddef>
#include <optional>

#include <json.hpp>

#include "hypermoment/axioms.hpp"
#include "hypermoment/equations.hpp"
#include "hypermoment/errors.hpp"
#include "hypermoment/hfunction.hpp"
#include "hypermoment/measure.hpp"
#include "hypermoment/multi_poly.hpp"
#include "hypermoment/synthesis.hpp"

namespace hypermoment {

// Keys keep insertion order so identical inputs give identical bytes.
using Json = nlohmann::ordered_json;

// Readers throw UsageError on malformed input.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// Real scalars as "p/q", others as {"re": "p/q", "im": "p/q"}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json index_to_json(const MultiIndex& x);
MultiIndex index_from_json(const Json& j);

Json point_to_json(const Point& p);
Point point_from_json(const Json& j);

// {"kind": "chebyshev", "dim": d}
// {"kind": "recurrence1d", "a": [..], "b": [..], "c": [..],
//  "tail": {"a": q, "b": q, "c": q, "from": n}}
// {"kind": "product", "factors": [spec, ...]}
// One-variable recurrences are certified on {0..certify_up_to}.
Hypergroup hypergroup_from_json(const Json& j, std::size_t certify_up_to);
Json hypergroup_to_json(const Hypergroup& h);

// [{"point": [..], "re": "p/q", "im": "p/q"}, ...]
Json measure_to_json(const Measure& mu);
Measure measure_from_json(const Json& j, const Hypergroup& h);

// [{"coeff": scalar, "alpha": [..], "lambda": [scalar, ...]}, ...]
Json hfunction_to_json(const HFunction& f);
HFunction hfunction_from_json(const Json& j, const Hypergroup& h);

// {"dim": d, "terms": [{"alpha": [..], "coeff": scalar}, ...]}
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json rejection_to_json(const RejectionError& e);
Json axiom_report_to_json(const AxiomReport& r);
Json equation_report_to_json(const EquationReport& r);
Json degree_to_json(const DegreeResult& r);

// Decomposition report; sine_dim and degree are null when not computed.
Json decomposition_to_json(const Decomposition& d, std::optional<std::size_t> sine_dim,
                           std::optional<std::size_t> degree);

}  // namespace hypermoment
