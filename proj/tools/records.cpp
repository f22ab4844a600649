#include "records.hpp"

#include <array>
#include <utility>

#include "zetaval/errors.hpp"

namespace zetaval::cli {

namespace {

constexpr std::array<std::pair<RecordKind, const char*>, 6> kKindNames{{
    {RecordKind::Rational, "rational"},
    {RecordKind::Cyclotomic, "cyclotomic"},
    {RecordKind::SpecialValue, "special-value"},
    {RecordKind::Polynomial, "polynomial"},
    {RecordKind::Residual, "residual"},
    {RecordKind::Report, "report"},
}};

json rationals(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(c.to_string());
  return out;
}

Rational decode_rational(const json& j) {
  if (!j.is_string()) throw ParseError("expected a rational string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> decode_rationals(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& c : j) out.push_back(decode_rational(c));
  return out;
}

std::int64_t decode_modulus(const json& j) {
  if (!j.contains("modulus") || !j["modulus"].is_number_integer()) throw ParseError("missing integer modulus");
  const auto q = j["modulus"].get<std::int64_t>();
  if (q < 1) throw ParseError("modulus must be positive");
  return q;
}

Cyclotomic decode_cyclotomic(const json& j) {
  if (!j.is_object()) throw ParseError("expected a cyclotomic object");
  const auto coeffs = decode_rationals(j.value("coeffs", json()));
  return Cyclotomic::from_powers(decode_modulus(j), coeffs);
}

RecordValue decode_polynomial(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("expected a polynomial");
  const std::int64_t q = decode_modulus(j);
  if (q == 1) {
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) {
      const auto parts = decode_rationals(c);
      if (parts.size() != 1) throw ParseError("rational coefficient must have one entry");
      coeffs.push_back(parts[0]);
    }
    return RationalPolynomial(std::move(coeffs));
  }
  std::vector<Cyclotomic> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(Cyclotomic::from_powers(q, decode_rationals(c)));
  return CycPolynomial(std::move(coeffs));
}

template <class T>
OutputRecord exact_record(RecordKind kind, T v, json provenance) {
  return OutputRecord{kind, RecordValue(std::move(v)), std::move(provenance), {}};
}

} // namespace

std::string kind_name(RecordKind kind) {
  for (const auto& [k, name] : kKindNames)
    if (k == kind) return name;
  return "report";
}

RecordKind kind_from_name(const std::string& name) {
  for (const auto& [k, n] : kKindNames)
    if (name == n) return k;
  throw ParseError("unknown record kind '" + name + "'");
}

OutputRecord make_record(Rational v, json provenance) {
  return exact_record(RecordKind::Rational, std::move(v), std::move(provenance));
}
OutputRecord make_record(Cyclotomic v, json provenance) {
  return exact_record(RecordKind::Cyclotomic, std::move(v), std::move(provenance));
}
OutputRecord make_record(SpecialValue v, json provenance) {
  return exact_record(RecordKind::SpecialValue, std::move(v), std::move(provenance));
}
OutputRecord make_record(RationalPolynomial v, json provenance) {
  return exact_record(RecordKind::Polynomial, std::move(v), std::move(provenance));
}
OutputRecord make_record(CycPolynomial v, json provenance) {
  return exact_record(RecordKind::Polynomial, std::move(v), std::move(provenance));
}

OutputRecord make_report(RecordKind kind, json payload, std::string text, json provenance) {
  if (payload.is_object()) payload["text"] = text;
  return OutputRecord{kind, RecordValue(std::move(payload)), std::move(provenance), std::move(text)};
}

json encode(const Rational& v) { return v.to_string(); }

json encode(const Cyclotomic& v) { return {{"modulus", v.modulus()}, {"coeffs", rationals(v.coeffs())}}; }

json encode(const SpecialValue& v) { return {{"pi_power", v.pi_power()}, {"coeff", encode(v.coeff())}}; }

json encode(const RationalPolynomial& v) {
  json coeffs = json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(json::array({c.to_string()}));
  return {{"variable", "a"}, {"modulus", 1}, {"coeffs", coeffs}};
}

json encode(const CycPolynomial& v) {
  const std::int64_t q = common_modulus(v);
  const CycPolynomial lifted = lift(v, q);
  json coeffs = json::array();
  for (const auto& c : lifted.coeffs()) coeffs.push_back(rationals(c.lift(q).coeffs()));
  return {{"variable", "a"}, {"modulus", q}, {"coeffs", coeffs}};
}

json to_json(const OutputRecord& r) {
  const json payload = std::visit([](const auto& v) -> json {
    if constexpr (std::is_same_v<std::decay_t<decltype(v)>, json>)
      return v;
    else
      return encode(v);
  }, r.value);
  return {{"kind", kind_name(r.kind)}, {"payload", payload}, {"provenance", r.provenance}};
}

OutputRecord from_json(const json& j) {
  try {
    if (!j.is_object() || !j.contains("kind") || !j.contains("payload")) throw ParseError("not an output record");
    const RecordKind kind = kind_from_name(j["kind"].get<std::string>());
    const json& payload = j["payload"];
    const json provenance = j.value("provenance", json::object());
    switch (kind) {
    case RecordKind::Rational:
      return make_record(decode_rational(payload), provenance);
    case RecordKind::Cyclotomic:
      return make_record(decode_cyclotomic(payload), provenance);
    case RecordKind::SpecialValue: {
      if (!payload.is_object() || !payload.contains("pi_power") || !payload["pi_power"].is_number_unsigned())
        throw ParseError("special value needs a non-negative pi_power");
      return make_record(SpecialValue(decode_cyclotomic(payload["coeff"]), payload["pi_power"].get<unsigned>()),
                         provenance);
    }
    case RecordKind::Polynomial: {
      RecordValue v = decode_polynomial(payload);
      return OutputRecord{kind, std::move(v), provenance, {}};
    }
    case RecordKind::Residual:
    case RecordKind::Report:
      return make_report(kind, payload, payload.is_object() ? payload.value("text", std::string()) : std::string(),
                         provenance);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed record: ") + e.what());
  }
  throw ParseError("not an output record");
}

std::string to_text(const OutputRecord& r) {
  struct Render {
    const OutputRecord& r;
    std::string operator()(const Rational& v) const { return v.to_string(); }
    std::string operator()(const Cyclotomic& v) const { return v.to_string(); }
    std::string operator()(const SpecialValue& v) const { return v.to_string(); }
    std::string operator()(const RationalPolynomial& v) const { return to_string(v); }
    std::string operator()(const CycPolynomial& v) const { return to_string(v); }
    std::string operator()(const json&) const { return r.text; }
  };
  return std::visit(Render{r}, r.value);
}

} // namespace zetaval::cli
