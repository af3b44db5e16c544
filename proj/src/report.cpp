#include "logder/report.hpp"

#include <algorithm>
#include <limits>

namespace logder {

Claim Claim::from(const Verdict& v) {
  return {v.claim, v.lhs, v.rhs, v.pass ? ClaimVerdict::Pass : ClaimVerdict::Fail};
}

Claim Claim::equal(std::string claim, const Integer& lhs, const Integer& rhs) {
  return {std::move(claim), lhs, rhs, lhs == rhs ? ClaimVerdict::Pass : ClaimVerdict::Fail};
}

Claim Claim::holds(std::string claim, bool ok) {
  return {std::move(claim), Integer(ok ? 1 : 0), Integer(1), ok ? ClaimVerdict::Pass : ClaimVerdict::Fail};
}

Claim Claim::not_applicable(std::string claim) {
  return {std::move(claim), std::nullopt, std::nullopt, ClaimVerdict::NotApplicable};
}

std::string verdict_name(ClaimVerdict v) {
  switch (v) {
    case ClaimVerdict::Pass:
      return "pass";
    case ClaimVerdict::Fail:
      return "fail";
    case ClaimVerdict::NotApplicable:
      return "not-applicable";
  }
  return "fail";
}

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

bool Report::pass() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict == ClaimVerdict::Fail; });
}

Json Report::to_json() const {
  Json out;
  out["schema"] = 1;
  out["command"] = command;
  out["inputs"] = inputs;
  out["results"] = results;
  Json list = Json::array();
  for (const Claim& c : claims) {
    Json j;
    j["claim"] = c.claim;
    j["lhs"] = c.lhs ? integer_json(*c.lhs) : Json(nullptr);
    j["rhs"] = c.rhs ? integer_json(*c.rhs) : Json(nullptr);
    j["verdict"] = verdict_name(c.verdict);
    list.push_back(std::move(j));
  }
  out["claims"] = std::move(list);
  out["verdict"] = pass() ? "pass" : "fail";
  return out;
}

std::string Report::to_text() const {
  std::string out = text;
  if (!out.empty() && out.back() != '\n') out += "\n";
  for (const Claim& c : claims) {
    out += "[" + verdict_name(c.verdict) + "] " + c.claim;
    if (c.lhs && c.rhs) out += ": " + c.lhs->get_str() + " vs " + c.rhs->get_str();
    out += "\n";
  }
  return out;
}

Json shifts_json(const Resolution& res) {
  Json out = Json::array();
  for (const FreeModule& f : res.free_modules()) out.push_back(f.shifts);
  return out;
}

Json betti_json(const BettiTable& table) {
  Json out = Json::array();
  for (const auto& [key, b] : table.entries) {
    Json e;
    e["p"] = key.second;
    e["j"] = key.first;
    e["b"] = b;
    out.push_back(std::move(e));
  }
  return out;
}

Json series_json(const HPSeries& hp) {
  Json num = Json::array();
  for (const auto& [e, c] : hp.numerator) num.push_back(Json::array({e, c}));
  Json out;
  out["numerator"] = std::move(num);
  out["denominator_weights"] = hp.weights;
  out["text"] = format_series(hp);
  return out;
}

Json matrix_json(const ModuleMap& m, const std::vector<std::string>& names) {
  Json out;
  out["source_shifts"] = m.source.shifts;
  out["target_shifts"] = m.target.shifts;
  Json cols = Json::array();
  for (const Vector& c : m.columns) {
    Json col = Json::array();
    for (const Polynomial& p : c) col.push_back(format_poly(p, names));
    cols.push_back(std::move(col));
  }
  out["columns"] = std::move(cols);
  return out;
}

}  // namespace logder
