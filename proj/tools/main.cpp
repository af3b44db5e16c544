#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "logder/errors.hpp"

namespace {

std::vector<logder::Degree> parse_degrees(const std::string& text, const std::string& flag) {
  std::vector<logder::Degree> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw logder::cli::UsageError(flag + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

struct RawFlags {
  std::string vars, u, v;
};

void add_common(CLI::App* app, logder::cli::JobSpec& job, RawFlags& raw) {
  app->add_option("polynomial", job.polynomial, "Polynomial text");
  app->add_option("--vars", raw.vars, "Comma-separated variable names (default: identifiers, sorted)");
  app->add_option("--u", raw.u, "Positive weights u, comma-separated");
  app->add_option("--v", raw.v, "Shifts v, comma-separated");
  app->add_flag("--infer-weights", job.infer_weights, "Find u making the polynomial quasi-homogeneous");
  app->add_option("--factors", job.factors, "Factorization as poly:mult,...");
  app->add_flag("--homogenize", job.homogenize, "Work with D(f)^h in one more variable");
  app->add_option("--dmax", job.dmax, "Top degree for slice-dimension checks");
  app->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  logder::cli::JobSpec job;
  RawFlags raw;
  CLI::App app{"Logarithmic derivation modules, resolutions and Hilbert series"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "logder 0.1.0");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"derivations", "Generators of D(f)"},
      {"resolution", "Minimal graded free resolution of D(f)"},
      {"betti", "Graded Betti table of D(f)"},
      {"chi", "chi(D(f)) against deg^u(f) + |v|"},
      {"hilbert", "Hilbert-Poincare series"},
      {"saito", "Saito's criterion for a list of derivations"},
      {"homogenize", "Homogenize a free resolution of D(f)"},
      {"verify", "Randomized check of the degree identity"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (name == "verify") {
      sub->add_option("--random", job.harness.count, "Number of random instances");
      sub->add_option("--min-vars", job.harness.min_vars, "Fewest variables");
      sub->add_option("--max-vars", job.harness.max_vars, "Most variables");
      sub->add_option("--max-degree", job.harness.max_degree, "Total degree bound of Q");
      sub->add_option("--seed", job.harness.seed, "Random seed");
      sub->add_option("--jobs", job.harness.jobs, "Worker threads");
      sub->add_flag("--inject-fault", job.harness.inject_fault, "Corrupt one shift per resolution");
      sub->add_option("--dmax", job.dmax, "Top degree for slice-dimension checks");
      sub->add_option("--format", job.format, "Output format")->check(CLI::IsMember({"text", "json"}));
      continue;
    }
    add_common(sub, job, raw);
    if (name == "hilbert")
      sub->add_option("--of", job.of, "dmodule | ideal | quotient | ring")
          ->check(CLI::IsMember({"dmodule", "ideal", "quotient", "ring"}));
    if (name == "saito") sub->add_option("--basis", job.basis_file, "File with one derivation per line");
    if (name == "homogenize")
      sub->add_option("--resolution", job.resolution_file, "JSON file with an affine resolution");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    job.command = app.get_subcommands().front()->get_name();
    if (!raw.vars.empty()) {
      std::stringstream in(raw.vars);
      std::string name;
      while (std::getline(in, name, ','))
        if (!name.empty()) job.vars.push_back(name);
    }
    if (!raw.u.empty()) job.u = parse_degrees(raw.u, "--u");
    if (!raw.v.empty()) job.v = parse_degrees(raw.v, "--v");
    if (job.u && job.infer_weights) throw logder::cli::UsageError("--u and --infer-weights are exclusive");
    const logder::Report report = logder::cli::run_command(job);
    std::cout << logder::cli::render(report, job.format);
    return logder::cli::exit_status(report);
  } catch (const logder::cli::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const logder::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
