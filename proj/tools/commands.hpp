#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logder/harness.hpp"
#include "logder/report.hpp"

namespace logder::cli {

/// Bad flags or flag combinations; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JobSpec {
  std::string command;
  std::string polynomial;
  std::vector<std::string> vars;
  std::optional<std::vector<Degree>> u;
  std::optional<std::vector<Degree>> v;
  bool infer_weights = false;
  std::string factors;
  bool homogenize = false;
  std::string of = "dmodule";
  std::string basis_file;
  std::string resolution_file;
  Degree dmax = kDefaultDmax;
  HarnessOptions harness;
  std::string format = "text";
};

Report run_command(const JobSpec& job);

/// 0 when every claim passes, 1 otherwise.
int exit_status(const Report& report);

/// Renders the report in the job's output format.
std::string render(const Report& report, const std::string& format);

/// Identifiers occurring in the texts, sorted and without duplicates.
std::vector<std::string> collect_variables(const std::vector<std::string>& texts);

}  // namespace logder::cli
