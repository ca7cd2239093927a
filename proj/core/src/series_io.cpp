#include <json.hpp>

#include <sstream>

#include "coulomb/series.hpp"

namespace coulomb {

using Json = nlohmann::ordered_json;

TruncatedSeries expand_inverse(int d, int order) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "expand_inverse needs d >= 1");
  TruncatedSeries s(order);
  for (int k = 0; k <= order; k += d) s.set(k, 1);
  return s;
}

TruncatedSeries make_series(const std::vector<long>& coeffs, int order) {
  if (order < 0) order = coeffs.empty() ? 0 : static_cast<int>(coeffs.size()) - 1;
  TruncatedSeries s(order);
  for (std::size_t k = 0; k < coeffs.size() && static_cast<int>(k) <= order; ++k) {
    s.set(static_cast<int>(k), coeffs[k]);
  }
  return s;
}

RefinedSeries constant_term(const RefinedSeries& s, std::string_view fugacity) {
  const auto& names = s.fugacities();
  const auto it = std::find(names.begin(), names.end(), fugacity);
  if (it == names.end()) {
    throw Error(ErrorCode::UnknownFugacity, "series has no fugacity '" + std::string(fugacity) + "'");
  }
  const std::size_t var = static_cast<std::size_t>(it - names.begin());
  std::vector<std::string> remaining = names;
  remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(var));

  RefinedSeries out(s.order(), remaining);
  for (int k = 0; k <= s.order(); ++k) {
    LaurentMultinomial kept;
    const LaurentMultinomial part = s.at(k).constant_part(var);
    for (const auto& [e, c] : part.terms()) {
      LaurentMultinomial::Exponents reduced = e;
      reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(var));
      kept.add_term(reduced, c);
    }
    out.set(k, std::move(kept));
  }
  return out;
}

TruncatedSeries evaluate_at_one(const RefinedSeries& s) {
  TruncatedSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out.set(k, s.at(k).evaluate_at_one());
  return out;
}

TruncatedSeries to_unrefined(const RefinedSeries& s) {
  if (s.variables() != 0) {
    throw Error(ErrorCode::FugacityMismatch, "series still carries " + std::to_string(s.variables()) + " fugacities");
  }
  return evaluate_at_one(s);
}

RefinedSeries to_refined(const TruncatedSeries& s, std::vector<std::string> fugacities) {
  RefinedSeries out(s.order(), std::move(fugacities));
  for (int k = 0; k <= s.order(); ++k) out.set(k, LaurentMultinomial::constant(s.at(k), out.variables()));
  return out;
}

RationalSeries to_rational(const TruncatedSeries& s) {
  RationalSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) out.set(k, Rational(s.at(k)));
  return out;
}

TruncatedSeries to_integral(const RationalSeries& s) {
  TruncatedSeries out(s.order());
  for (int k = 0; k <= s.order(); ++k) {
    const Rational& c = s.at(k);
    if (denominator(c) != 1) {
      throw Error(ErrorCode::NonIntegralResult, "coefficient of t^" + std::to_string(k) + " is not an integer");
    }
    out.set(k, numerator(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string power_of_t(int k) {
  if (k == 0) return "";
  if (k == 1) return "t";
  return "t^" + std::to_string(k);
}

// Joins signed terms as "a + b - c". `body` is the unsigned text of a term.
void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    out = negative ? "-" + body : body;
  } else {
    out += negative ? " - " : " + ";
    out += body;
  }
}

template <class Num>
std::string scalar_series_text(const Series<Num>& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    const Num& c = s.at(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Num magnitude = negative ? Num(-c) : c;
    std::ostringstream mag;
    mag << magnitude;
    std::string body;
    if (k == 0) {
      body = mag.str();
    } else if (magnitude == 1) {
      body = power_of_t(k);
    } else {
      body = mag.str() + "*" + power_of_t(k);
    }
    append_term(out, negative, body);
  }
  return out.empty() ? "0" : out;
}

std::string monomial_text(const LaurentMultinomial::Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string laurent_text(const LaurentMultinomial& l, const std::vector<std::string>& names, bool& single_positive) {
  std::string out;
  int terms = 0;
  bool negative_first = false;
  // Highest exponents first.
  for (auto it = l.terms().rbegin(); it != l.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    const std::string mono = monomial_text(e, names);
    std::string body;
    if (mono.empty()) {
      body = magnitude.str();
    } else if (magnitude == 1) {
      body = mono;
    } else {
      body = magnitude.str() + "*" + mono;
    }
    if (terms == 0) negative_first = negative;
    append_term(out, negative, body);
    ++terms;
  }
  single_positive = terms == 1 && !negative_first;
  return out;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

int parse_order(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.at("order").is_number_integer()) {
    parse_fail("series JSON needs an integer \"order\"");
  }
  return j.at("order").get<int>();
}

int parse_exponent_key(const std::string& key, int order) {
  std::size_t used = 0;
  int k = -1;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception&) {
    parse_fail("coefficient key '" + key + "' is not an integer");
  }
  if (used != key.size() || k < 0 || k > order) {
    parse_fail("coefficient key '" + key + "' is outside 0.." + std::to_string(order));
  }
  return k;
}

template <class Num>
Num parse_number(const Json& v) {
  try {
    if (v.is_string()) return Num(v.get<std::string>());
    if (v.is_number_integer()) return Num(v.get<long long>());
  } catch (const std::exception&) {
  }
  parse_fail("coefficient " + v.dump() + " is not a decimal number");
}

template <class Num>
std::string scalar_series_json(const Series<Num>& s) {
  Json j;
  j["order"] = s.order();
  Json coeffs = Json::object();
  for (int k = 0; k <= s.order(); ++k) {
    if (s.at(k) == 0) continue;
    std::ostringstream os;
    os << s.at(k);
    coeffs[std::to_string(k)] = os.str();
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

template <class Num>
Series<Num> scalar_series_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const int order = parse_order(j);
  if (order < 0) parse_fail("series order must be non-negative");
  Series<Num> s(order);
  if (!j.contains("coeffs") || !j.at("coeffs").is_object()) parse_fail("series JSON needs a \"coeffs\" object");
  for (const auto& [key, value] : j.at("coeffs").items()) {
    s.set(parse_exponent_key(key, order), parse_number<Num>(value));
  }
  return s;
}

}  // namespace

std::string to_text(const TruncatedSeries& s) { return scalar_series_text(s); }
std::string to_text(const RationalSeries& s) { return scalar_series_text(s); }

std::string to_text(const RefinedSeries& s) {
  std::string out;
  for (int k = 0; k <= s.order(); ++k) {
    const LaurentMultinomial& c = s.at(k);
    if (c.is_zero()) continue;
    bool single_positive = false;
    const std::string coeff = laurent_text(c, s.fugacities(), single_positive);
    std::string body;
    if (k == 0) {
      body = coeff;
    } else if (single_positive && coeff == "1") {
      body = power_of_t(k);
    } else if (single_positive) {
      body = coeff + "*" + power_of_t(k);
    } else {
      body = "(" + coeff + ")*" + power_of_t(k);
    }
    append_term(out, false, body);
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const TruncatedSeries& s) { return scalar_series_json(s); }
std::string to_json(const RationalSeries& s) { return scalar_series_json(s); }

std::string to_json(const RefinedSeries& s) {
  Json j;
  j["order"] = s.order();
  j["fugacities"] = s.fugacities();
  Json coeffs = Json::object();
  for (int k = 0; k <= s.order(); ++k) {
    if (s.at(k).is_zero()) continue;
    Json terms = Json::array();
    for (const auto& [e, c] : s.at(k).terms()) {
      Json exps = Json::object();
      for (std::size_t i = 0; i < e.size(); ++i) exps[s.fugacities()[i]] = e[i];
      terms.push_back(Json{{"exponents", exps}, {"coeff", c.str()}});
    }
    coeffs[std::to_string(k)] = terms;
  }
  j["coeffs"] = coeffs;
  return j.dump();
}

TruncatedSeries truncated_series_from_json(std::string_view text) { return scalar_series_from_json<BigInt>(text); }
RationalSeries rational_series_from_json(std::string_view text) { return scalar_series_from_json<Rational>(text); }

RefinedSeries refined_series_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const int order = parse_order(j);
  if (order < 0) parse_fail("series order must be non-negative");
  std::vector<std::string> names;
  if (j.contains("fugacities")) {
    if (!j.at("fugacities").is_array()) parse_fail("\"fugacities\" must be an array of names");
    for (const Json& n : j.at("fugacities")) {
      if (!n.is_string()) parse_fail("fugacity names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  RefinedSeries s(order, names);
  if (!j.contains("coeffs") || !j.at("coeffs").is_object()) parse_fail("series JSON needs a \"coeffs\" object");
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const int k = parse_exponent_key(key, order);
    if (!value.is_array()) parse_fail("refined coefficient t^" + key + " must be a list of monomials");
    LaurentMultinomial c;
    for (const Json& term : value) {
      if (!term.is_object() || !term.contains("coeff")) parse_fail("monomial at t^" + key + " needs \"coeff\"");
      LaurentMultinomial::Exponents e(names.size(), 0);
      if (term.contains("exponents")) {
        for (const auto& [name, power] : term.at("exponents").items()) {
          const auto it = std::find(names.begin(), names.end(), name);
          if (it == names.end()) parse_fail("monomial at t^" + key + " uses unknown fugacity '" + name + "'");
          if (!power.is_number_integer()) parse_fail("exponent of '" + name + "' must be an integer");
          e[static_cast<std::size_t>(it - names.begin())] = power.get<int>();
        }
      }
      c.add_term(e, parse_number<BigInt>(term.at("coeff")));
    }
    s.set(k, std::move(c));
  }
  return s;
}

}  // namespace coulomb
