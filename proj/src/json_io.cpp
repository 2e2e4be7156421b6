#include "sylvsum/json_io.hpp"

#include <string>

#include "sylvsum/errors.hpp"

namespace sylvsum {
namespace {

Json rationals_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) {
    out.push_back(v.to_string());
  }
  return out;
}

std::vector<Rational> rationals_from_json(const Json& json) {
  if (!json.is_array()) {
    throw ParseError("expected a JSON array of rational strings");
  }
  std::vector<Rational> out;
  out.reserve(json.size());
  for (const auto& item : json) {
    if (!item.is_string()) {
      throw ParseError("expected a rational string, got " + item.dump());
    }
    out.push_back(Rational::parse(item.get<std::string>()));
  }
  return out;
}

}  // namespace

Json to_json(const Poly& poly) { return rationals_to_json(poly.coeffs()); }

Json to_json(const RootList& roots) { return rationals_to_json(roots.view()); }

Json to_json(const CheckReport& report) {
  Json out;
  out["identity"] = report.identity;
  out["m"] = report.m;
  out["n"] = report.n;
  out["p"] = report.p;
  out["q"] = report.q;
  out["k"] = report.k;
  out["trial"] = report.trial;
  out["status"] = std::string(to_string(report.status));
  if (report.status == Status::fail && report.witness) {
    out["lhs"] = to_json(report.witness->lhs);
    out["rhs"] = to_json(report.witness->rhs);
    out["A"] = to_json(report.witness->a);
    out["B"] = to_json(report.witness->b);
  }
  return out;
}

Poly poly_from_json(const Json& json) { return Poly(rationals_from_json(json)); }

RootList rootlist_from_json(const Json& json) { return RootList(rationals_from_json(json)); }

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (text.empty()) {
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return out;
}

}  // namespace sylvsum
