#pragma once

/**
 * @file series_io.hpp
 * @brief Human and JSON forms of series.
 *
 * Human form: `c1*s^q1 + c2*s^q2 - ... + O(s^N)`, coefficients in 17 significant
 * digits (integers print bare), exponents sorted ascending.
 *
 * JSON form:
 *   {"terms":[{"exp":[num,den],"re":<double>,"im":<double>},...],"order":[num,den]}
 * Doubles are written with 17 significant digits, so a write/read cycle is
 * bit-exact.
 */

#include <cmath>
#include <cstdio>
#include <map>
#include <string>

#include <json.hpp>

#include "rhocalc/complex.hpp"

namespace rhocalc {

using Json = nlohmann::ordered_json;

/// Exponent as it appears after `s^`: `2`, `-1`, `(1/2)`.
inline std::string format_exponent(Exponent e) {
  if (e.is_integer()) return std::to_string(e.num());
  return "(" + e.to_string() + ")";
}

/// 17 significant digits, scientific, exponent without zero padding. Exact
/// integers of moderate size print without a mantissa.
inline std::string format_coefficient(double c) {
  if (std::isfinite(c) && c == std::nearbyint(c) && std::abs(c) < 1e15) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.0f", c);
    return buf;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16e", c);
  std::string s = buf;
  const auto epos = s.find('e');
  if (epos == std::string::npos) return s;
  std::string mantissa = s.substr(0, epos);
  std::string exponent = s.substr(epos + 1);
  std::string sign;
  if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
    if (exponent[0] == '-') sign = "-";
    exponent.erase(0, 1);
  }
  const auto nz = exponent.find_first_not_of('0');
  exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
  return mantissa + "e" + sign + exponent;
}

namespace detail {

inline std::string format_terms(const AsymptoticScalar& a) {
  std::string out;
  for (const auto& t : a.terms()) {
    const bool negative = t.coef < 0.0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += format_coefficient(std::abs(t.coef));
    if (t.exp != 0) out += "*s^" + format_exponent(t.exp);
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const AsymptoticScalar& a) {
  const std::string body = a.is_null() ? "0" : detail::format_terms(a);
  return body + " + O(s^" + format_exponent(a.order()) + ")";
}

inline std::string to_string(const AsymptoticComplex& a) {
  if (a.is_real()) return to_string(a.re());
  std::string body = a.re().is_null() ? "" : detail::format_terms(a.re()) + " + ";
  body += "i*(" + detail::format_terms(a.im()) + ")";
  return body + " + O(s^" + format_exponent(a.order()) + ")";
}

/// Serializes a JSON document, writing floating-point numbers with 17
/// significant digits.
inline void dump_json(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        dump_json(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_json(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        break;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

inline std::string dump_json(const Json& j) {
  std::string out;
  dump_json(j, out);
  return out;
}

inline Json exponent_to_json(Exponent e) { return Json::array({e.num(), e.den()}); }

inline Exponent exponent_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("exponent must be a [num, den] pair");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

inline Json to_json(const AsymptoticComplex& a) {
  std::map<Exponent, std::pair<double, double>> merged;
  for (const auto& t : a.re().terms()) merged[t.exp].first = t.coef;
  for (const auto& t : a.im().terms()) merged[t.exp].second = t.coef;
  Json terms = Json::array();
  for (const auto& [e, c] : merged) {
    terms.push_back(Json{{"exp", exponent_to_json(e)}, {"re", c.first}, {"im", c.second}});
  }
  return Json{{"terms", terms}, {"order", exponent_to_json(a.order())}};
}

inline Json to_json(const AsymptoticScalar& a) { return to_json(AsymptoticComplex(a)); }

inline AsymptoticComplex complex_from_json(const Json& j, double tau = kDefaultTau) {
  if (!j.is_object() || !j.contains("terms") || !j.contains("order")) {
    throw Error("series JSON needs \"terms\" and \"order\"");
  }
  const Exponent order = exponent_from_json(j.at("order"));
  std::vector<Term> re;
  std::vector<Term> im;
  for (const auto& t : j.at("terms")) {
    const Exponent e = exponent_from_json(t.at("exp"));
    re.push_back(Term{e, t.at("re").get<double>()});
    im.push_back(Term{e, t.contains("im") ? t.at("im").get<double>() : 0.0});
  }
  return {normalize(std::move(re), order, tau), normalize(std::move(im), order, tau), tau};
}

inline AsymptoticScalar scalar_from_json(const Json& j, double tau = kDefaultTau) {
  const auto c = complex_from_json(j, tau);
  if (!c.is_real()) throw Error("series has an imaginary part where a real one is expected");
  return c.re();
}

}  // namespace rhocalc
