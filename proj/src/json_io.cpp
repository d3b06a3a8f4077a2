#include "biquad/json_io.hpp"

#include <stdexcept>

#include "biquad/error.hpp"

namespace biquad {

namespace {

mpq_class rational_from_string(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::MalformedInput, "empty rational literal");
  try {
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::MalformedInput, "bad rational literal '" + s + "'");
  }
}

}  // namespace

mpq_class rational_from_json(const json& j) {
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  if (j.is_number_integer()) return rational_from_string(std::to_string(j.get<long long>()));
  throw Error(ErrorCode::MalformedInput, "expected a rational as string or integer");
}

json elem_to_json(const Field& F, const Elem& e) {
  if (F.is_quad_ext()) {
    json j;
    j["x"] = e.x.get_str();
    j["y"] = e.y.get_str();
    return j;
  }
  return json(e.x.get_str());
}

Elem elem_from_json(const Field& F, const json& j) {
  if (F.is_quad_ext()) {
    if (j.is_object()) {
      const Field& B = F.base();
      Elem x = B.make(rational_from_json(j.at("x")));
      Elem y = j.contains("y") ? B.make(rational_from_json(j.at("y"))) : B.zero();
      return F.make_quad(x, y);
    }
    // plain literals land in the base-field part
    return F.make_quad(F.base().make(rational_from_json(j)), F.base().zero());
  }
  if (j.is_object())
    throw Error(ErrorCode::MalformedInput, "object element over a scalar field");
  return F.make(rational_from_json(j));
}

json field_to_json(const Field& F) {
  json j;
  switch (F.kind()) {
    case Field::Kind::Rationals:
      j["kind"] = "Q";
      return j;
    case Field::Kind::Prime:
      j["kind"] = "Fp";
      j["p"] = F.modulus().get_str();
      return j;
    case Field::Kind::QuadExt:
      j["kind"] = "QuadExt";
      j["base"] = field_to_json(F.base());
      j["d"] = elem_to_json(F.base(), F.radicand());
      return j;
  }
  throw std::logic_error("unreachable");
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error(ErrorCode::MalformedInput, "field descriptor needs a kind");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "Fp") {
    mpq_class p = rational_from_json(j.at("p"));
    if (p.get_den() != 1) throw Error(ErrorCode::MalformedInput, "modulus must be an integer");
    return Field::prime(p.get_num());
  }
  if (kind == "QuadExt") {
    Field base = field_from_json(j.at("base"));
    return Field::quad_ext(base, base.make(rational_from_json(j.at("d"))));
  }
  throw Error(ErrorCode::MalformedInput, "unknown field kind '" + kind + "'");
}

Field parse_field_desc(const std::string& desc) {
  auto scalar = [](const std::string& s) -> Field {
    if (s == "Q") return Field::rationals();
    std::string digits;
    if (s.rfind("Fp:", 0) == 0)
      digits = s.substr(3);
    else if (s.size() > 1 && s[0] == 'F')
      digits = s.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::MalformedInput, "bad field descriptor '" + s + "'");
    return Field::prime(mpz_class(digits));
  };
  auto colon = desc.find(':');
  if (desc.rfind("QuadExt:", 0) == 0) {
    std::string rest = desc.substr(8);
    auto split = rest.rfind(':');
    if (split == std::string::npos)
      throw Error(ErrorCode::MalformedInput, "QuadExt descriptor needs a radicand");
    Field base = scalar(rest.substr(0, split));
    Elem d = base.make(rational_from_string(rest.substr(split + 1)));
    return Field::quad_ext(base, d);
  }
  (void)colon;
  return scalar(desc);
}

json biquad_to_json(const BiquadPoly& P) {
  json j;
  j["u"] = elem_to_json(P.field, P.u);
  j["w"] = elem_to_json(P.field, P.w);
  return j;
}

BiquadPoly biquad_from_json(const Field& F, const json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::MalformedInput, "expected {\"u\": ..., \"w\": ...}");
  return BiquadPoly{F, elem_from_json(F, j.at("u")), elem_from_json(F, j.at("w"))};
}

json quartic_to_json(const QuarticPoly& P) {
  json j;
  j["u"] = elem_to_json(P.field, P.u);
  j["v"] = elem_to_json(P.field, P.v);
  j["w"] = elem_to_json(P.field, P.w);
  j["z"] = elem_to_json(P.field, P.z);
  return j;
}

QuarticPoly quartic_from_json(const Field& F, const json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::MalformedInput, "expected {\"u\",\"v\",\"w\",\"z\"}");
  auto get = [&](const char* key) {
    return j.contains(key) ? elem_from_json(F, j.at(key)) : F.zero();
  };
  return QuarticPoly{F, get("u"), get("v"), get("w"), get("z")};
}

}  // namespace biquad
