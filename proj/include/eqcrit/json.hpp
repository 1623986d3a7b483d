#pragma once

// JSON codec. Rationals are canonical "p/q" strings, elements of a proper
// number field are arrays of coordinates, polynomials carry their field.

#include <complex>
#include <string>

#include <json.hpp>

#include "eqcrit/field.hpp"
#include "eqcrit/moduli.hpp"

namespace eqcrit::io {

using json = nlohmann::json;

inline json encode(const Rational& r) { return r.str(); }

inline json encode(const AlgElem& a) {
  if (a.field().is_rational()) return a.coords()[0].str();
  json arr = json::array();
  for (const auto& c : a.coords()) arr.push_back(c.str());
  return arr;
}

inline json encode(const FieldSpec& f) {
  if (f.is_preset()) return f.name();
  json m = json::array();
  for (const auto& c : f.modulus().coeffs()) m.push_back(c.str());
  return json{{"modulus", m}};
}

inline json encode(const Poly<AlgElem>& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(encode(a));
  return json{{"field", encode(p.context())}, {"coeffs", c}};
}

inline json encode(const Poly<Rational>& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(a.str());
  return json{{"field", "qq"}, {"coeffs", c}};
}

template <class T>
json encode(const ProjValue<T>& v) {
  if (v.is_infinity()) return "inf";
  return encode(v.value());
}

inline json encode(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

inline Rational decode_rational(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw Error(ErrorKind::Parse, "expected a rational string, got " + j.dump());
}

inline FieldSpec decode_field(const json& j) {
  if (j.is_null()) return FieldSpec::qq();
  if (j.is_string()) {
    auto f = FieldSpec::preset(j.get<std::string>());
    if (!f) throw Error(ErrorKind::Parse, "unknown field preset " + j.dump());
    return *f;
  }
  if (j.is_object() && j.contains("modulus")) {
    std::vector<Rational> m;
    for (const auto& c : j.at("modulus")) m.push_back(decode_rational(c));
    return FieldSpec::custom(Poly<Rational>({}, std::move(m)));
  }
  throw Error(ErrorKind::Parse, "bad field " + j.dump());
}

inline AlgElem decode_elem(const json& j, const FieldSpec& f) {
  if (j.is_array()) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(decode_rational(x));
    if (c.size() > f.degree()) throw Error(ErrorKind::Parse, "too many coordinates for " + f.name());
    c.resize(f.degree(), Rational(0));
    return AlgElem(f, std::move(c));
  }
  return AlgElem(f, decode_rational(j));
}

inline Poly<AlgElem> decode_poly(const json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw Error(ErrorKind::Parse, "polynomial needs a coeffs array");
  const FieldSpec f = decode_field(j.contains("field") ? j.at("field") : json());
  std::vector<AlgElem> c;
  for (const auto& x : j.at("coeffs")) c.push_back(decode_elem(x, f));
  return Poly<AlgElem>(f, std::move(c));
}

}  // namespace eqcrit::io
