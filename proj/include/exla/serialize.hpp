#pragma once

#include <json.hpp>

#include "exla/e8.hpp"
#include "exla/rational.hpp"

// JSON forms: rationals as "p/q" strings, Gaussian rationals as
// {"re": "p/q", "im": "p/q"}, elements as coordinate arrays in the fixed
// basis orders.

namespace exla {

inline nlohmann::json to_json(const GaussRat& z) {
  return {{"re", z.re.str()}, {"im", z.im.str()}};
}

inline GaussRat gauss_rat_from_json(const nlohmann::json& j) {
  return GaussRat(Rat::parse(j.at("re").get<std::string>()),
                  Rat::parse(j.at("im").get<std::string>()));
}

inline nlohmann::json to_json(const JordanElem& x) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : x.coords()) a.push_back(to_json(v));
  return a;
}

inline JordanElem jordan_from_json(const nlohmann::json& j) {
  std::array<GaussRat, 6> c;
  for (int i = 0; i < 6; ++i) c[i] = gauss_rat_from_json(j.at(i));
  return JordanElem::from_coords(c);
}

inline nlohmann::json to_json(const FreudElem& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : p.coords()) a.push_back(to_json(v));
  return a;
}

inline FreudElem freud_from_json(const nlohmann::json& j) {
  std::array<GaussRat, 14> c;
  for (int i = 0; i < 14; ++i) c[i] = gauss_rat_from_json(j.at(i));
  return FreudElem::from_coords(c);
}

inline nlohmann::json to_json(const E7Elem& f) {
  nlohmann::json phi = nlohmann::json::array();
  for (const auto& v : f.phi.coords()) phi.push_back(to_json(v));
  return {{"phi", phi}, {"a", to_json(f.a)}, {"b", to_json(f.b)}, {"nu", to_json(f.nu)}};
}

inline E7Elem e7_from_json(const nlohmann::json& j) {
  E7Elem f;
  std::array<GaussRat, 8> cp;
  for (int i = 0; i < 8; ++i) cp[i] = gauss_rat_from_json(j.at("phi").at(i));
  f.phi = E6Elem::from_coords(cp);
  f.a = jordan_from_json(j.at("a"));
  f.b = jordan_from_json(j.at("b"));
  f.nu = gauss_rat_from_json(j.at("nu"));
  return f;
}

inline nlohmann::json to_json(const E8Elem& x) {
  return {{"phi", to_json(x.phi)}, {"p", to_json(x.p)},   {"q", to_json(x.q)},
          {"r", to_json(x.r)},     {"s", to_json(x.s)},   {"t", to_json(x.t)}};
}

inline E8Elem e8_from_json(const nlohmann::json& j) {
  E8Elem x;
  x.phi = e7_from_json(j.at("phi"));
  x.p = freud_from_json(j.at("p"));
  x.q = freud_from_json(j.at("q"));
  x.r = gauss_rat_from_json(j.at("r"));
  x.s = gauss_rat_from_json(j.at("s"));
  x.t = gauss_rat_from_json(j.at("t"));
  return x;
}

}  // namespace exla
