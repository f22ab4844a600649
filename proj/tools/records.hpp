#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "zetaval/cyclotomic.hpp"
#include "zetaval/polynomial.hpp"
#include "zetaval/rational.hpp"
#include "zetaval/special_value.hpp"

namespace zetaval::cli {

using json = nlohmann::json;

enum class RecordKind { Rational, Cyclotomic, SpecialValue, Polynomial, Residual, Report };

std::string kind_name(RecordKind kind);
/// ParseError for an unknown name.
RecordKind kind_from_name(const std::string& name);

// Exact kinds hold a typed value; residuals and reports carry their JSON payload
// and a prepared text line.
using RecordValue = std::variant<Rational, Cyclotomic, SpecialValue, RationalPolynomial, CycPolynomial, json>;

struct OutputRecord {
  RecordKind kind = RecordKind::Report;
  RecordValue value;
  /// {"op": ..., plus the inputs}.
  json provenance;
  /// Text form for residuals and reports; exact kinds render from value.
  std::string text;
};

OutputRecord make_record(Rational v, json provenance);
OutputRecord make_record(Cyclotomic v, json provenance);
OutputRecord make_record(SpecialValue v, json provenance);
OutputRecord make_record(RationalPolynomial v, json provenance);
OutputRecord make_record(CycPolynomial v, json provenance);
/// The text line is also stored in the payload under "text".
OutputRecord make_report(RecordKind kind, json payload, std::string text, json provenance);

// Payload encodings. A rational is "p/q". A cyclotomic is
// {"modulus": Q, "coeffs": [...]} with all phi(Q) reduced coefficients.
// A polynomial is {"variable": "a", "modulus": Q, "coeffs": [[...], ...]},
// lowest degree first, each coefficient reduced over Q.
json encode(const Rational& v);
json encode(const Cyclotomic& v);
json encode(const SpecialValue& v);
json encode(const RationalPolynomial& v);
json encode(const CycPolynomial& v);

json to_json(const OutputRecord& r);
/// Inverse of to_json; exact kinds are rebuilt as typed values, so
/// to_json(from_json(j)) == j. ParseError on malformed input.
OutputRecord from_json(const json& j);

std::string to_text(const OutputRecord& r);

} // namespace zetaval::cli
