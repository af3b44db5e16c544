#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "logder/hilbert.hpp"
#include "logder/resolution.hpp"

namespace logder {

using Json = nlohmann::ordered_json;

enum class ClaimVerdict { Pass, Fail, NotApplicable };

struct Claim {
  std::string claim;
  std::optional<Integer> lhs;
  std::optional<Integer> rhs;
  ClaimVerdict verdict;

  static Claim from(const Verdict& v);
  static Claim equal(std::string claim, const Integer& lhs, const Integer& rhs);
  static Claim holds(std::string claim, bool ok);
  static Claim not_applicable(std::string claim);
};

/// Output of one CLI command: echoed inputs, computed objects and claims.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<Claim> claims;
  /// Human-readable body printed before the claim lines in text mode.
  std::string text;

  bool pass() const;
  Json to_json() const;
  std::string to_text() const;
};

std::string verdict_name(ClaimVerdict v);
/// Exact integer as a JSON number when it fits in 64 bits, else a decimal string.
Json integer_json(const Integer& z);

Json shifts_json(const Resolution& res);
Json betti_json(const BettiTable& table);
Json series_json(const HPSeries& hp);
Json matrix_json(const ModuleMap& m, const std::vector<std::string>& names);

}  // namespace logder
