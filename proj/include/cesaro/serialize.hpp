#pragma once

#include "cesaro/algebras.hpp"
#include "cesaro/calculus.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/zseq.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace cesaro {

using Json = nlohmann::json;

// Sequences travel as {"lo": int, "re": [...], "im": [...]}.
Json zseq_to_json(const ZSeq& f);
ZSeq zseq_from_json(const Json& j);

// Matrices travel as {"dim": d, "re": [[...]], "im": [[...]]} (row-major).
Json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const Json& j);

// Periodic functions travel as {"coeffs": <sequence>}.
Json periodic_fn_to_json(const PeriodicFn& fn);
PeriodicFn periodic_fn_from_json(const Json& j);

Json curve_to_json(const DecayCurve& curve);

/// Scientific notation with 17 significant digits (round-trip exact).
std::string format_sci(double v);

/// CSV with header "n,value" and one full-precision row per grid point.
void write_curve_csv(std::ostream& out, const DecayCurve& curve);

Json load_json_file(const std::string& path);

} // namespace cesaro
